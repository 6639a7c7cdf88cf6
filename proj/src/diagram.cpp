#include "cwb/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "cwb/canonical.hpp"

namespace cwb {

std::pair<int, int> UTD::leg_home(int leg) const {
  int c = 0;
  for (int n : legs_per_comp) {
    if (leg < n) return {c, leg};
    leg -= n;
    ++c;
  }
  throw std::out_of_range("leg index out of range");
}

bool utd_valid(const UTD& d, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (d.skel.size() != d.legs_per_comp.size())
    return fail("skeleton/leg-count size mismatch");
  for (int n : d.legs_per_comp)
    if (n < 0) return fail("negative leg count");
  if (d.internal < 0) return fail("negative internal vertex count");
  int slots = d.total_legs() + 3 * d.internal;
  if (static_cast<int>(d.mate.size()) != slots)
    return fail("mate table size mismatch");
  for (int s = 0; s < slots; ++s) {
    int m = d.mate[s];
    if (m < 0 || m >= slots) return fail("mate out of range");
    if (m == s) return fail("slot mated to itself");
    if (d.mate[m] != s) return fail("mate table is not an involution");
  }
  return true;
}

namespace {

struct Uf {
  std::vector<int> p;
  explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool utd_strict(const UTD& d) {
  int L = d.total_legs();
  int slots = d.slot_count();
  Uf uf(slots);
  for (int j = 0; j < d.internal; ++j) {
    uf.join(L + 3 * j, L + 3 * j + 1);
    uf.join(L + 3 * j, L + 3 * j + 2);
  }
  for (int s = 0; s < slots; ++s) uf.join(s, d.mate[s]);
  std::vector<char> has_leg(slots, 0);
  for (int s = 0; s < L; ++s) has_leg[uf.find(s)] = 1;
  for (int s = L; s < slots; ++s)
    if (!has_leg[uf.find(s)]) return false;
  return true;
}

bool has_isolated_chord(const UTD& d) {
  int L = d.total_legs();
  for (int a = 0; a < L; ++a) {
    int b = d.mate[a];
    if (b <= a || b >= L) continue;
    auto [ca, pa] = d.leg_home(a);
    auto [cb, pb] = d.leg_home(b);
    if (ca != cb) continue;
    int n = d.legs_per_comp[ca];
    bool adj;
    if (d.skel[ca] == SkelKind::Circle)
      adj = (pa + 1) % n == pb || (pb + 1) % n == pa;
    else
      adj = pa + 1 == pb || pb + 1 == pa;
    if (adj) return true;
  }
  return false;
}

std::vector<uint64_t> utd_certificate(const UTD& d) {
  int L = d.total_legs();
  ColoredGraph g;
  // legs first, then one vertex per internal slot; ids coincide with slots
  int base = 0;
  for (size_t c = 0; c < d.skel.size(); ++c) {
    int n = d.legs_per_comp[c];
    for (int p = 0; p < n; ++p) {
      if (d.skel[c] == SkelKind::Circle)
        g.add_vertex(10 + static_cast<int64_t>(c));
      else
        g.add_vertex(1000 + 256 * static_cast<int64_t>(c) + p);
    }
    if (d.skel[c] == SkelKind::Circle)
      for (int p = 0; p < n; ++p) g.add_edge(base + p, base + (p + 1) % n, 2);
    base += n;
  }
  for (int j = 0; j < d.internal; ++j) {
    for (int s = 0; s < 3; ++s) g.add_vertex(1);
    for (int s = 0; s < 3; ++s)
      g.add_edge(L + 3 * j + s, L + 3 * j + (s + 1) % 3, 3);
  }
  for (int s = 0; s < d.slot_count(); ++s)
    if (s < d.mate[s]) g.add_sym_edge(s, d.mate[s], 4);
  return canonical_certificate(g);
}

namespace {

// rewire by moving edge ends between slots: the end sitting at slot s moves
// to slot perm[s]; edges follow their ends
UTD apply_end_perm(const UTD& d, const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (size_t s = 0; s < perm.size(); ++s) inv[perm[s]] = static_cast<int>(s);
  UTD out = d;
  for (size_t s = 0; s < perm.size(); ++s)
    out.mate[s] = perm[d.mate[inv[s]]];
  return out;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

UTD orientation_flip(const UTD& d, int internal_index) {
  int L = d.total_legs();
  auto perm = identity_perm(d.slot_count());
  std::swap(perm[L + 3 * internal_index + 1], perm[L + 3 * internal_index + 2]);
  return apply_end_perm(d, perm);
}

std::pair<UTD, UTD> stu_resolutions(const UTD& d, int leg) {
  int L = d.total_legs();
  int sw = d.mate[leg];
  if (sw < L) throw std::invalid_argument("leg is not joined to an internal vertex");
  int jw = (sw - L) / 3;
  int off = (sw - L) % 3;
  int A = L + 3 * jw + (off + 1) % 3;
  int B = L + 3 * jw + (off + 2) % 3;
  auto [comp, pos] = d.leg_home(leg);

  UTD base;
  base.skel = d.skel;
  base.legs_per_comp = d.legs_per_comp;
  base.legs_per_comp[comp] += 1;
  base.internal = d.internal - 1;
  base.mate.assign(base.slot_count(), -1);

  // old slot -> new slot; the removed leg's place is taken by two fresh legs
  // at `leg` and `leg`+1
  auto map_slot = [&](int s) -> int {
    if (s < L) return s < leg ? s : s + 1;  // s == leg never queried
    int j = (s - L) / 3, o = (s - L) % 3;
    int nj = j < jw ? j : j - 1;  // j == jw never queried
    return (L + 1) + 3 * nj + o;
  };

  auto fill = [&](bool swapped) {
    UTD out = base;
    int legA = swapped ? leg + 1 : leg;
    int legB = swapped ? leg : leg + 1;
    auto link = [&out](int x, int y) {
      out.mate[x] = y;
      out.mate[y] = x;
    };
    for (int s = 0; s < d.slot_count(); ++s) {
      int m = d.mate[s];
      if (m < s) continue;
      if (s == leg || s == sw) continue;  // the resolved edge
      bool sa = s == A || s == B, ma = m == A || m == B;
      if (sa && ma) {
        link(legA, legB);  // the two branches were a loop at the old vertex
      } else if (sa) {
        link(s == A ? legA : legB, map_slot(m));
      } else if (ma) {
        link(map_slot(s), m == A ? legA : legB);
      } else {
        link(map_slot(s), map_slot(m));
      }
    }
    return out;
  };
  return {fill(false), fill(true)};
}

std::pair<UTD, UTD> ihx_terms(const UTD& d, int h_u) {
  int L = d.total_legs();
  int h_v = d.mate[h_u];
  if (h_u < L || h_v < L)
    throw std::invalid_argument("edge must join two internal vertices");
  int ju = (h_u - L) / 3, jv = (h_v - L) / 3;
  if (ju == jv) throw std::invalid_argument("edge is a loop");
  auto nxt = [&](int h) {
    int j = (h - L) / 3, o = (h - L) % 3;
    return L + 3 * j + (o + 1) % 3;
  };
  int hx = nxt(h_u), hy = nxt(hx);
  int hz = nxt(h_v), hw = nxt(hz);
  (void)hw;

  // H: the ends at hx and hz trade places
  auto ph = identity_perm(d.slot_count());
  std::swap(ph[hx], ph[hz]);
  // X: end at hz -> hx, end at hx -> hy, end at hy -> hz
  auto px = identity_perm(d.slot_count());
  px[hz] = hx;
  px[hx] = hy;
  px[hy] = hz;
  return {apply_end_perm(d, ph), apply_end_perm(d, px)};
}

namespace {

// All perfect matchings on the slot set, up to renaming internal vertices
// and renaming slots within each internal vertex.  Canonical form: scanning
// slots in order, a fresh internal vertex may only be entered through the
// lowest unused vertex's slot 0, and a partially used vertex through its
// lowest unmatched slot.
void backtrack_matchings(int L, int T,
                         const std::function<void(const std::vector<int>&)>& emit) {
  int slots = L + 3 * T;
  if (slots % 2) return;
  std::vector<int> mate(slots, -1);
  std::vector<int> used(T, 0);  // matched slots per internal vertex

  std::function<void()> rec = [&]() {
    int s = 0;
    while (s < slots && mate[s] >= 0) ++s;
    if (s == slots) {
      emit(mate);
      return;
    }
    // entering s may itself claim a vertex
    int js = s >= L ? (s - L) / 3 : -1;
    if (js >= 0) ++used[js];

    auto try_pair = [&](int t) {
      int jt = t >= L ? (t - L) / 3 : -1;
      if (jt >= 0) ++used[jt];
      mate[s] = t;
      mate[t] = s;
      rec();
      mate[s] = -1;
      mate[t] = -1;
      if (jt >= 0) --used[jt];
    };

    for (int t = s + 1; t < slots; ++t) {
      if (mate[t] >= 0) continue;
      if (t < L) {
        try_pair(t);
        continue;
      }
      int j = (t - L) / 3, o = (t - L) % 3;
      if (used[j] == 0) {
        // only the lowest unused vertex, via slot 0
        bool lowest = true;
        for (int j2 = 0; j2 < j; ++j2)
          if (used[j2] == 0) lowest = false;
        if (!lowest || o != 0) continue;
        try_pair(t);
      } else {
        // lowest unmatched slot of a started vertex (s itself doesn't count:
        // it may share the vertex, as in a looped edge)
        int lo = 0;
        while (L + 3 * j + lo == s || mate[L + 3 * j + lo] >= 0) ++lo;
        if (o != lo) continue;
        try_pair(t);
      }
    }

    if (js >= 0) --used[js];
  };
  rec();
}

// distribute L legs over the skeleton components
void leg_splits(int comps, int L,
                const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> split(comps, 0);
  std::function<void(int, int)> rec = [&](int c, int left) {
    if (c == comps - 1) {
      split[c] = left;
      emit(split);
      return;
    }
    for (int take = 0; take <= left; ++take) {
      split[c] = take;
      rec(c + 1, left - take);
    }
  };
  if (comps == 0) {
    if (L == 0) emit(split);
    return;
  }
  rec(0, L);
}

}  // namespace

DiagramSet enumerate_diagrams(const std::vector<SkelKind>& skel, int degree,
                              bool chords_only) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  DiagramSet out;
  for (int L = 2 * degree; L >= 0; --L) {
    int T = 2 * degree - L;
    if (chords_only && T > 0) continue;
    if (L == 0 && T > 0) continue;  // dashed graph could never reach skeleton
    leg_splits(static_cast<int>(skel.size()), L, [&](const std::vector<int>& split) {
      UTD proto;
      proto.skel = skel;
      proto.legs_per_comp = split;
      proto.internal = T;
      backtrack_matchings(L, T, [&](const std::vector<int>& mate) {
        proto.mate = mate;
        if (!utd_strict(proto)) return;
        // all 2^T orientation choices
        for (int bits = 0; bits < (1 << T); ++bits) {
          UTD d = proto;
          for (int j = 0; j < T; ++j)
            if (bits >> j & 1) d = orientation_flip(d, j);
          auto cert = utd_certificate(d);
          if (out.index.emplace(std::move(cert),
                                static_cast<int>(out.reps.size()))
                  .second)
            out.reps.push_back(std::move(d));
        }
      });
    });
  }
  return out;
}

std::vector<UTD> enumerate_one_internal(const std::vector<SkelKind>& skel,
                                        int degree) {
  std::vector<UTD> out;
  std::map<std::vector<uint64_t>, int> seen;
  int L = 2 * degree - 1;
  if (L < 3) return out;
  leg_splits(static_cast<int>(skel.size()), L, [&](const std::vector<int>& split) {
    UTD proto;
    proto.skel = skel;
    proto.legs_per_comp = split;
    proto.internal = 1;
    backtrack_matchings(L, 1, [&](const std::vector<int>& mate) {
      for (int s = L; s < L + 3; ++s)
        if (mate[s] >= L) return;  // want all three branches on legs
      proto.mate = mate;
      for (int bits = 0; bits < 2; ++bits) {
        UTD d = proto;
        if (bits) d = orientation_flip(d, 0);
        auto cert = utd_certificate(d);
        if (seen.emplace(std::move(cert), 1).second) out.push_back(std::move(d));
      }
    });
  });
  return out;
}

}  // namespace cwb
