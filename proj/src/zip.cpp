#include <deque>
#include <stdexcept>

#include "cwb/clasper.hpp"

namespace cwb {

namespace {

struct Work {
  std::vector<Constituent> cons;
  std::vector<char> c_alive;
  struct WEdge {
    EndRef a, b;
    int twists;
    bool alive;
  };
  std::vector<WEdge> edges;

  // (edge, side) attached at the given slot, or {-1,-1}
  std::pair<int, int> at(int c, int slot) const {
    for (size_t e = 0; e < edges.size(); ++e) {
      if (!edges[e].alive) continue;
      if (edges[e].a.c == c && edges[e].a.slot == slot)
        return {static_cast<int>(e), 0};
      if (edges[e].b.c == c && edges[e].b.slot == slot)
        return {static_cast<int>(e), 1};
    }
    return {-1, -1};
  }

  EndRef& end(int e, int side) { return side == 0 ? edges[e].a : edges[e].b; }
  const EndRef& far(int e, int side) const {
    return side == 0 ? edges[e].b : edges[e].a;
  }

  int add_con(Constituent c) {
    cons.push_back(std::move(c));
    c_alive.push_back(1);
    return static_cast<int>(cons.size()) - 1;
  }
  int add_edge(EndRef a, EndRef b, int twists) {
    edges.push_back({a, b, twists, true});
    return static_cast<int>(edges.size()) - 1;
  }
};

int output_slot_of(const Constituent& c) {
  for (int s = 0; s < 3; ++s)
    if (c.output_mask >> s & 1) return s;
  return -1;
}

}  // namespace

std::vector<std::string> check_marking(const ClasperGraph& g,
                                       const Marking& m) {
  std::vector<std::string> bad;
  auto rep = validate_clasper(g);
  if (!rep.ok) {
    bad.push_back("clasper fails validation");
    return bad;
  }
  SubtreeReport sub = find_subtrees(g);
  std::set<int> seen;
  for (const auto& mark : m) {
    if (mark.c < 0 || mark.c >= static_cast<int>(g.constituents.size())) {
      bad.push_back("mark references unknown constituent");
      continue;
    }
    const auto& c = g.constituents[mark.c];
    if (c.kind != CKind::Box) {
      bad.push_back("mark on non-box constituent " + std::to_string(mark.c));
      continue;
    }
    if (mark.slot < 0 || mark.slot >= 3 ||
        (c.output_mask >> mark.slot & 1)) {
      bad.push_back("mark must sit on an input end (box " +
                    std::to_string(mark.c) + ")");
      continue;
    }
    if (!seen.insert(mark.c).second) {
      bad.push_back("two marks on box " + std::to_string(mark.c));
      continue;
    }
    if (!sub.output_subtrees.count(mark.c))
      bad.push_back("marked box " + std::to_string(mark.c) +
                    " has no output subtree");
  }
  return bad;
}

ZipResult zip(const ClasperGraph& g, const Marking& m) {
  auto bad = check_marking(g, m);
  if (!bad.empty()) throw std::domain_error("invalid marking: " + bad[0]);

  Work w;
  w.cons = g.constituents;
  w.c_alive.assign(w.cons.size(), 1);
  for (const auto& e : g.edges)
    w.edges.push_back({e.a, e.b, e.half_twists, true});

  std::deque<EndRef> queue(m.begin(), m.end());
  int steps = 0;

  while (!queue.empty()) {
    EndRef mark = queue.front();
    queue.pop_front();
    ++steps;
    if (steps > 1000000) throw std::logic_error("zip failed to terminate");

    int R = mark.c;
    const Constituent& box = w.cons[R];
    int out_slot = output_slot_of(box);
    auto [B, B_side] = w.at(R, out_slot);
    EndRef far_end = w.far(B, B_side);
    int F = far_end.c;
    int tB = w.edges[B].twists;

    // the two input ends of R
    std::vector<std::pair<int, int>> inputs;  // (edge, side)
    for (int s = 0; s < 3; ++s) {
      if (s == out_slot) continue;
      inputs.push_back(w.at(R, s));
    }

    CKind fk = w.cons[F].kind;
    if (fk == CKind::Leaf || fk == CKind::DiskLeaf) {
      // the box and the far leaf disappear; each input branch gets its own
      // copy of the leaf, absorbing the output edge's twists
      for (auto [e, side] : inputs) {
        int copy = w.add_con(w.cons[F]);
        w.end(e, side) = {copy, 0};
        w.edges[e].twists += tB;
      }
      w.c_alive[R] = 0;
      w.c_alive[F] = 0;
      w.edges[B].alive = false;
    } else if (fk == CKind::Node) {
      int V = F;
      // V's two edges away from the box
      std::vector<std::pair<int, int>> branches;  // (edge, side at V)
      for (int s = 0; s < 3; ++s) {
        auto [e, side] = w.at(V, s);
        if (e == B) continue;
        branches.push_back({e, side});
      }
      if (branches.size() != 2)
        throw std::logic_error("node inside output subtree lost an edge");

      Constituent node;
      node.kind = CKind::Node;
      int V1 = w.add_con(node);
      int V2 = w.add_con(node);
      Constituent boxc;
      boxc.kind = CKind::Box;
      boxc.output_mask = 0b100;  // slots 0,1 inputs, slot 2 output
      int R1 = w.add_con(boxc);
      int R2 = w.add_con(boxc);

      // input branches of the old box now feed the two node copies
      int which = 0;
      for (auto [e, side] : inputs) {
        w.end(e, side) = {which == 0 ? V1 : V2, 0};
        w.edges[e].twists += tB;
        ++which;
      }
      // ladder between the node copies and the new boxes
      w.add_edge({V1, 1}, {R1, 0}, 0);
      w.add_edge({V1, 2}, {R2, 0}, 0);
      w.add_edge({V2, 1}, {R1, 1}, 0);
      w.add_edge({V2, 2}, {R2, 1}, 0);
      // the old branches hang off the new boxes' outputs, twists unchanged
      w.end(branches[0].first, branches[0].second) = {R1, 2};
      w.end(branches[1].first, branches[1].second) = {R2, 2};

      w.c_alive[R] = 0;
      w.c_alive[V] = 0;
      w.edges[B].alive = false;

      queue.push_back({R1, 0});
      queue.push_back({R2, 0});
    } else {
      throw std::logic_error("marked box faces another box");
    }
  }

  // compact
  ZipResult out;
  out.steps = steps;
  std::vector<int> cmap(w.cons.size(), -1);
  for (size_t c = 0; c < w.cons.size(); ++c)
    if (w.c_alive[c]) {
      cmap[c] = static_cast<int>(out.graph.constituents.size());
      out.graph.constituents.push_back(w.cons[c]);
    }
  for (const auto& e : w.edges) {
    if (!e.alive) continue;
    ClasperEdge ce;
    ce.a = {cmap[e.a.c], e.a.slot};
    ce.b = {cmap[e.b.c], e.b.slot};
    ce.half_twists = e.twists;
    out.graph.edges.push_back(ce);
  }
  return out;
}

}  // namespace cwb
