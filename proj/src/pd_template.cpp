#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cwb/pd.hpp"

namespace cwb {

namespace {

struct Uf {
  std::vector<int> p;
  explicit Uf(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// Sweeps braid letters bottom to top through vertical lanes.  Each lane
// carries an arc id and a travel direction; positive letters put the
// lane-p-to-p-plus-one diagonal on top.
struct Sweep {
  std::vector<int> cur;
  std::vector<char> up;
  int next_arc = 0;
  std::vector<Crossing>* out = nullptr;

  void letter(int lt) {
    int p = std::abs(lt) - 1;
    int bl = cur[p], br = cur[p + 1];
    int tl = next_arc++, tr = next_arc++;
    bool up_p = up[p], up_q = up[p + 1];
    bool pos = lt > 0;
    Crossing c;
    if (pos) {
      c.arcs = up_q ? std::array<int, 4>{br, tr, tl, bl}
                    : std::array<int, 4>{tl, bl, br, tr};
    } else {
      c.arcs = up_p ? std::array<int, 4>{bl, br, tr, tl}
                    : std::array<int, 4>{tr, tl, bl, br};
    }
    c.sign = (pos == (up_p == up_q)) ? 1 : -1;
    out->push_back(c);
    cur[p] = tl;
    cur[p + 1] = tr;
    std::swap(up[p], up[p + 1]);
  }
};

// identify arcs through `uf`, renumber densely (least class member first),
// turning unreferenced classes into free loops
void finish_rebuild(LinkDiagram& d, Uf& uf, int total_arcs) {
  std::set<int> referenced;
  for (auto& c : d.crossings)
    for (int& a : c.arcs) {
      a = uf.find(a);
      referenced.insert(a);
    }
  std::set<int> all;
  for (int a = 0; a < total_arcs; ++a) all.insert(uf.find(a));
  d.free_loops +=
      static_cast<int>(all.size()) - static_cast<int>(referenced.size());
  std::map<int, int> dense;
  for (int r : referenced) dense.emplace(r, static_cast<int>(dense.size()));
  for (auto& c : d.crossings)
    for (int& a : c.arcs) a = dense[a];
}

}  // namespace

LinkDiagram braid_closure(const BraidWord& b) {
  int n = b.strands;
  LinkDiagram d;
  Sweep sw;
  sw.cur.resize(n);
  std::iota(sw.cur.begin(), sw.cur.end(), 0);
  sw.up.assign(n, 0);  // parallel strands
  sw.next_arc = n;
  sw.out = &d.crossings;
  for (int lt : b.letters) sw.letter(lt);

  Uf uf(sw.next_arc);
  for (int p = 0; p < n; ++p) uf.join(p, sw.cur[p]);
  finish_rebuild(d, uf, sw.next_arc);
  return d;
}

LinkDiagram builtin_link(const std::string& name) {
  auto closure = [](int strands, std::vector<int> letters) {
    return braid_closure(make_braid(strands, std::move(letters)));
  };
  if (name == "unknot") return closure(1, {});
  if (name == "trefoil-r") return closure(2, {1, 1, 1});
  if (name == "trefoil-l") return closure(2, {-1, -1, -1});
  if (name == "figure8") return closure(3, {1, -2, 1, -2});
  if (name == "hopf-p") return closure(2, {1, 1});
  if (name == "hopf-n") return closure(2, {-1, -1});
  if (name == "borromean") return closure(3, {1, -2, 1, -2, 1, -2});
  if (name == "granny")
    return connected_sum(builtin_link("trefoil-r"), builtin_link("trefoil-r"));
  if (name == "square")
    return connected_sum(builtin_link("trefoil-r"), builtin_link("trefoil-l"));
  throw std::invalid_argument("unknown link name: " + name);
}

std::vector<std::string> builtin_names() {
  return {"unknot", "trefoil-r", "trefoil-l", "figure8",   "hopf-p",
          "hopf-n", "borromean", "granny",    "square"};
}

namespace {
// Region handedness, pinned by the requirement that a degree-1 graft at a
// positive crossing matches the switched crossing (see the template tests).
constexpr bool kMirrorRegion = false;
}  // namespace

LinkDiagram apply_ck_template(const LinkDiagram& d, const std::vector<int>& sites,
                              int k) {
  if (k < 1) throw std::invalid_argument("degree must be positive");
  if (static_cast<int>(sites.size()) != k + 1)
    throw std::invalid_argument("degree-k surgery needs exactly k+1 sites");
  auto rep = validate_pd(d);
  if (!rep.ok) throw std::invalid_argument("invalid diagram: " + rep.problems[0]);
  int arcs = arc_count(d);
  std::set<int> distinct(sites.begin(), sites.end());
  if (distinct.size() != sites.size())
    throw std::invalid_argument("surgery sites must be distinct arcs");
  for (int s : sites)
    if (s < 0 || s >= arcs) throw std::invalid_argument("site arc out of range");

  BraidWord beta = bing_braid(k);
  if (kMirrorRegion)
    for (int& lt : beta.letters) lt = -lt;

  LinkDiagram out = d;
  int next_arc = arcs;

  // each site strand detours up an odd lane and back down the even lane to
  // its right; the braid's strand pairs clasp the detours together
  int lanes = beta.strands;  // == 2k+2
  Sweep sw;
  sw.cur.assign(lanes, -1);
  sw.up.assign(lanes, 0);
  sw.out = &out.crossings;
  std::vector<int> back(k + 1);
  for (int i = 0; i <= k; ++i) {
    sw.cur[2 * i] = sites[i];
    sw.up[2 * i] = 1;
    back[i] = next_arc++;
    sw.cur[2 * i + 1] = back[i];
    sw.up[2 * i + 1] = 0;
  }
  sw.next_arc = next_arc;

  // reroute each site's downstream crossing onto the returning arc
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    Crossing& c = out.crossings[ci];
    for (int i = 0; i <= k; ++i) {
      if (c.arcs[0] == sites[i]) c.arcs[0] = back[i];
      int* over_slot = c.sign > 0 ? &c.arcs[3] : &c.arcs[1];
      if (*over_slot == sites[i]) *over_slot = back[i];
    }
  }

  for (int lt : beta.letters) sw.letter(lt);

  // caps: join the two lane tops of each pair
  Uf uf(sw.next_arc);
  for (int i = 0; i <= k; ++i) uf.join(sw.cur[2 * i], sw.cur[2 * i + 1]);
  finish_rebuild(out, uf, sw.next_arc);

  auto check = validate_pd(out);
  if (!check.ok)
    throw std::logic_error("surgery produced an inconsistent diagram: " +
                           check.problems[0]);
  return out;
}

}  // namespace cwb
