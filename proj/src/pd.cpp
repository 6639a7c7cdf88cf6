#include "cwb/pd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cwb {

namespace {

int over_in(const Crossing& c) { return c.sign > 0 ? c.arcs[3] : c.arcs[1]; }
int over_out(const Crossing& c) { return c.sign > 0 ? c.arcs[1] : c.arcs[3]; }

struct Uf {
  std::vector<int> p;
  explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);  // keep least id as root
  }
};

// head = where an arc enters a crossing
struct Incidence {
  std::vector<std::pair<int, bool>> head, tail;  // (crossing, over?)
};

Incidence incidences(const LinkDiagram& d, int arcs) {
  Incidence inc;
  inc.head.assign(arcs, {-1, false});
  inc.tail.assign(arcs, {-1, false});
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    inc.head[c.arcs[0]] = {static_cast<int>(i), false};
    inc.head[over_in(c)] = {static_cast<int>(i), true};
    inc.tail[c.arcs[2]] = {static_cast<int>(i), false};
    inc.tail[over_out(c)] = {static_cast<int>(i), true};
  }
  return inc;
}

}  // namespace

int arc_count(const LinkDiagram& d) {
  int mx = -1;
  for (const auto& c : d.crossings)
    for (int a : c.arcs) mx = std::max(mx, a);
  return mx + 1;
}

PdReport validate_pd(const LinkDiagram& d) {
  PdReport rep;
  auto bad = [&rep](std::string msg) {
    rep.ok = false;
    rep.problems.push_back(std::move(msg));
  };
  if (d.free_loops < 0) bad("negative free loop count");
  std::map<int, int> heads, tails;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    if (c.sign != 1 && c.sign != -1) {
      bad("crossing " + std::to_string(i) + " has invalid sign");
      continue;
    }
    if (c.singular && c.sign != 1) {
      bad("singular crossing " + std::to_string(i) + " must be stored in + form");
      continue;
    }
    for (int a : c.arcs)
      if (a < 0) bad("crossing " + std::to_string(i) + " has negative arc id");
    ++heads[c.arcs[0]];
    ++heads[over_in(c)];
    ++tails[c.arcs[2]];
    ++tails[over_out(c)];
  }
  if (!rep.ok) return rep;
  int n = arc_count(d);
  for (int a = 0; a < n; ++a) {
    if (heads[a] != 1)
      bad("arc " + std::to_string(a) + " enters " + std::to_string(heads[a]) +
          " crossings (want exactly 1)");
    if (tails[a] != 1)
      bad("arc " + std::to_string(a) + " leaves " + std::to_string(tails[a]) +
          " crossings (want exactly 1)");
  }
  return rep;
}

int component_count(const LinkDiagram& d) {
  int n = arc_count(d);
  Uf uf(n);
  for (const auto& c : d.crossings) {
    uf.join(c.arcs[0], c.arcs[2]);
    uf.join(over_in(c), over_out(c));
  }
  std::set<int> roots;
  for (int a = 0; a < n; ++a) roots.insert(uf.find(a));
  return static_cast<int>(roots.size()) + d.free_loops;
}

int singular_count(const LinkDiagram& d) {
  int n = 0;
  for (const auto& c : d.crossings) n += c.singular;
  return n;
}

LinkDiagram crossing_change(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= static_cast<int>(d.crossings.size()))
    throw std::invalid_argument("crossing index out of range");
  LinkDiagram out = d;
  Crossing& c = out.crossings[crossing];
  if (c.singular) throw std::invalid_argument("cannot switch a singular crossing");
  auto [a, b, cc, dd] = c.arcs;
  if (c.sign > 0) {
    c.arcs = {dd, a, b, cc};
    c.sign = -1;
  } else {
    c.arcs = {b, cc, dd, a};
    c.sign = 1;
  }
  return out;
}

namespace {

// drop crossing `skip` after identifying arcs through `uf`; unreferenced
// arc classes become free loops
LinkDiagram rebuild_without(const LinkDiagram& d, Uf& uf, int skip) {
  int n = arc_count(d);
  LinkDiagram out;
  out.free_loops = d.free_loops;
  std::set<int> referenced;
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    Crossing c = d.crossings[i];
    for (int& a : c.arcs) {
      a = uf.find(a);
      referenced.insert(a);
    }
    out.crossings.push_back(c);
  }
  std::set<int> all;
  for (int a = 0; a < n; ++a) all.insert(uf.find(a));
  out.free_loops += static_cast<int>(all.size()) - static_cast<int>(referenced.size());
  std::map<int, int> dense;
  for (int r : referenced) dense.emplace(r, static_cast<int>(dense.size()));
  for (auto& c : out.crossings)
    for (int& a : c.arcs) a = dense[a];
  return out;
}

}  // namespace

LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing) {
  if (crossing < 0 || crossing >= static_cast<int>(d.crossings.size()))
    throw std::invalid_argument("crossing index out of range");
  const Crossing& c = d.crossings[crossing];
  if (c.singular) throw std::invalid_argument("cannot smooth a singular crossing");
  Uf uf(arc_count(d));
  // each incoming strand turns into the outgoing strand on its own side
  if (c.sign > 0) {
    uf.join(c.arcs[0], c.arcs[1]);
    uf.join(c.arcs[3], c.arcs[2]);
  } else {
    uf.join(c.arcs[0], c.arcs[3]);
    uf.join(c.arcs[1], c.arcs[2]);
  }
  return rebuild_without(d, uf, crossing);
}

LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b) {
  auto is_bare_unknot = [](const LinkDiagram& d) {
    return d.crossings.empty() && d.free_loops == 1;
  };
  if (component_count(a) != 1 || component_count(b) != 1)
    throw std::invalid_argument("connected sum needs one-component diagrams");
  if (is_bare_unknot(a)) return b;
  if (is_bare_unknot(b)) return a;
  int off = arc_count(a);
  LinkDiagram out = a;
  for (Crossing c : b.crossings) {
    for (int& x : c.arcs) x += off;
    out.crossings.push_back(c);
  }
  // reroute: arc 0 of `a` now enters where arc `off` (arc 0 of `b`) entered,
  // and vice versa
  auto inc = incidences(out, arc_count(out));
  auto swap_head = [&out](std::pair<int, bool> h, int new_arc) {
    Crossing& c = out.crossings[h.first];
    if (h.second) {
      (c.sign > 0 ? c.arcs[3] : c.arcs[1]) = new_arc;
    } else {
      c.arcs[0] = new_arc;
    }
  };
  auto ha = inc.head[0], hb = inc.head[off];
  swap_head(ha, off);
  swap_head(hb, 0);
  return out;
}

namespace {

std::vector<long long> poly_add(std::vector<long long> a,
                                const std::vector<long long>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// multiply by s*z
std::vector<long long> poly_shift(const std::vector<long long>& a, int s) {
  if (a.empty()) return {};
  std::vector<long long> out(a.size() + 1, 0);
  for (size_t i = 0; i < a.size(); ++i) out[i + 1] = s * a[i];
  return out;
}

std::vector<long long> conway_rec(const LinkDiagram& d) {
  if (d.crossings.empty())
    return d.free_loops == 1 ? std::vector<long long>{1}
                             : std::vector<long long>{};
  if (d.free_loops > 0) return {};  // split from the rest of the diagram

  int n = arc_count(d);
  auto inc = incidences(d, n);
  std::vector<int> passes(d.crossings.size(), 0);
  std::vector<char> seen_arc(n, 0);
  int bad = -1;
  for (int start = 0; start < n && bad < 0; ++start) {
    if (seen_arc[start]) continue;
    int cur = start;
    do {
      seen_arc[cur] = 1;
      auto [ci, over] = inc.head[cur];
      if (passes[ci] == 0 && !over) {
        bad = ci;
        break;
      }
      ++passes[ci];
      const Crossing& c = d.crossings[ci];
      cur = over ? over_out(c) : c.arcs[2];
    } while (cur != start);
  }
  if (bad < 0) {
    // layered descending diagram: unknot, or a split union
    return component_count(d) == 1 ? std::vector<long long>{1}
                                   : std::vector<long long>{};
  }
  int s = d.crossings[bad].sign;
  auto switched = conway_rec(crossing_change(d, bad));
  auto smoothed = conway_rec(smooth_crossing(d, bad));
  return poly_add(std::move(switched), poly_shift(smoothed, s));
}

}  // namespace

std::vector<long long> conway_polynomial(const LinkDiagram& d) {
  auto rep = validate_pd(d);
  if (!rep.ok) throw std::invalid_argument("invalid diagram: " + rep.problems[0]);
  if (singular_count(d) > 0)
    throw std::invalid_argument("diagram has singular crossings");
  if (d.crossings.size() > 26)
    throw std::domain_error("diagram too large for the exact recursion");
  return conway_rec(d);
}

long long a2_skein(const LinkDiagram& d) {
  auto p = conway_polynomial(d);
  return p.size() > 2 ? p[2] : 0;
}

namespace {

struct Passage {
  int crossing;
  bool over;
  int sign;
};

std::vector<Passage> gauss_sequence(const LinkDiagram& d, int start_arc) {
  int n = arc_count(d);
  if (start_arc < 0 || start_arc >= n)
    throw std::invalid_argument("start arc out of range");
  auto inc = incidences(d, n);
  std::vector<Passage> seq;
  int cur = start_arc;
  do {
    auto [ci, over] = inc.head[cur];
    const Crossing& c = d.crossings[ci];
    seq.push_back({ci, over, c.sign});
    cur = over ? over_out(c) : c.arcs[2];
  } while (cur != start_arc);
  if (seq.size() != 2 * d.crossings.size())
    throw std::invalid_argument("diagram is not a one-component knot");
  return seq;
}

}  // namespace

long long a2_gauss_from(const LinkDiagram& d, int start_arc, int variant) {
  if (d.crossings.empty()) return 0;
  auto seq = gauss_sequence(d, start_arc);
  int n = static_cast<int>(d.crossings.size());
  std::vector<int> first(n, -1), second(n, -1);
  for (size_t p = 0; p < seq.size(); ++p) {
    if (first[seq[p].crossing] < 0)
      first[seq[p].crossing] = static_cast<int>(p);
    else
      second[seq[p].crossing] = static_cast<int>(p);
  }
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // interleaved with i entered first
      if (!(first[i] < first[j] && first[j] < second[i] &&
            second[i] < second[j]))
        continue;
      bool oi = seq[first[i]].over, oj = seq[first[j]].over;
      if (((oi ? 2 : 0) | (oj ? 1 : 0)) != variant) continue;
      total += static_cast<long long>(seq[first[i]].sign) * seq[first[j]].sign;
    }
  }
  return total;
}

// The counting pattern is pinned by the calibration tests: it must agree
// with the skein route on the standard small knots and be independent of
// the basepoint.
namespace {
constexpr int kA2Variant = 1;
}

long long a2_gauss(const LinkDiagram& d) {
  if (d.crossings.empty()) {
    if (d.free_loops == 1) return 0;
    throw std::invalid_argument("diagram is not a one-component knot");
  }
  auto rep = validate_pd(d);
  if (!rep.ok) throw std::invalid_argument("invalid diagram: " + rep.problems[0]);
  if (singular_count(d) > 0)
    throw std::invalid_argument("diagram has singular crossings");
  return a2_gauss_from(d, 0, kA2Variant);
}

long long bracket_sum(const LinkDiagram& d, const std::vector<int>& sites) {
  std::set<int> distinct(sites.begin(), sites.end());
  if (distinct.size() != sites.size())
    throw std::invalid_argument("switch sites must be distinct");
  for (int s : sites)
    if (s < 0 || s >= static_cast<int>(d.crossings.size()))
      throw std::invalid_argument("switch site out of range");
  int l = static_cast<int>(sites.size());
  long long total = 0;
  for (int mask = 0; mask < (1 << l); ++mask) {
    LinkDiagram cur = d;
    int on = 0;
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1) {
        cur = crossing_change(cur, sites[i]);
        ++on;
      }
    long long v = a2_gauss(cur);
    total += ((l - on) % 2 ? -1 : 1) * v;
  }
  return total;
}

long long singular_eval(const LinkDiagram& d) {
  std::vector<int> sing;
  for (size_t i = 0; i < d.crossings.size(); ++i)
    if (d.crossings[i].singular) sing.push_back(static_cast<int>(i));
  int m = static_cast<int>(sing.size());
  long long total = 0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    LinkDiagram cur = d;
    int neg = 0;
    for (int i = 0; i < m; ++i) {
      cur.crossings[sing[i]].singular = false;
      if (mask >> i & 1) {
        cur = crossing_change(cur, sing[i]);
        ++neg;
      }
    }
    total += (neg % 2 ? -1 : 1) * a2_gauss(cur);
  }
  return total;
}

bool decide_ck_knots(int k, const LinkDiagram& a, const LinkDiagram& b) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  for (const LinkDiagram* d : {&a, &b}) {
    auto rep = validate_pd(*d);
    if (!rep.ok)
      throw std::invalid_argument("invalid diagram: " + rep.problems[0]);
    if (component_count(*d) != 1)
      throw std::invalid_argument("equivalence test needs knots");
  }
  if (k <= 2) return true;  // all knots are connected by moves of degree <= 2
  if (k == 3) return a2_gauss(a) == a2_gauss(b);
  throw std::domain_error(
      "no implemented invariant separates knots beyond degree 3");
}

}  // namespace cwb
