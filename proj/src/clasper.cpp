#include "cwb/clasper.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cwb/canonical.hpp"

namespace cwb {

int slot_count(CKind k) {
  return (k == CKind::Leaf || k == CKind::DiskLeaf) ? 1 : 3;
}

static bool is_output_slot(const Constituent& c, int slot) {
  return c.kind == CKind::Box && (c.output_mask >> slot) & 1;
}

ValidationReport validate_clasper(const ClasperGraph& g) {
  ValidationReport rep;
  auto flag = [&](const std::string& s) {
    rep.ok = false;
    rep.violations.push_back(s);
  };

  int nc = static_cast<int>(g.constituents.size());
  for (int i = 0; i < nc; ++i) {
    const auto& c = g.constituents[i];
    if (c.kind == CKind::Box) {
      int outs = __builtin_popcount(c.output_mask & 0x7);
      if (outs != 1 || (c.output_mask & ~0x7))
        flag("box output count: constituent " + std::to_string(i));
    } else if (c.output_mask != 0) {
      flag("output flag on non-box: constituent " + std::to_string(i));
    }
    if (c.kind != CKind::DiskLeaf && !c.strands.empty())
      flag("strand data on non-disk-leaf: constituent " + std::to_string(i));
    if (c.kind == CKind::DiskLeaf && c.strands.empty())
      flag("disk-leaf without strand data: constituent " + std::to_string(i));
  }

  // every slot must host exactly one edge end
  std::vector<std::vector<int>> used(nc);
  for (int i = 0; i < nc; ++i)
    used[i].assign(slot_count(g.constituents[i].kind), 0);
  int ne = static_cast<int>(g.edges.size());
  for (int e = 0; e < ne; ++e) {
    for (const EndRef* end : {&g.edges[e].a, &g.edges[e].b}) {
      if (end->c < 0 || end->c >= nc) {
        flag("edge " + std::to_string(e) + " references unknown constituent");
        continue;
      }
      int sc = slot_count(g.constituents[end->c].kind);
      if (end->slot < 0 || end->slot >= sc) {
        flag("edge " + std::to_string(e) + " references invalid slot");
        continue;
      }
      ++used[end->c][end->slot];
    }
  }
  for (int i = 0; i < nc; ++i)
    for (int s = 0; s < static_cast<int>(used[i].size()); ++s) {
      if (used[i][s] == 0)
        flag("dangling slot: constituent " + std::to_string(i) + " slot " +
             std::to_string(s));
      else if (used[i][s] > 1)
        flag("slot hosts multiple edge ends: constituent " +
             std::to_string(i) + " slot " + std::to_string(s));
    }
  return rep;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<int> clasper_components(const ClasperGraph& g) {
  int nc = static_cast<int>(g.constituents.size());
  UnionFind uf(nc);
  for (const auto& e : g.edges) uf.unite(e.a.c, e.b.c);
  std::vector<int> comp(nc, -1);
  int next = 0;
  for (int i = 0; i < nc; ++i) {
    int r = uf.find(i);
    if (comp[r] < 0) comp[r] = next++;
    comp[i] = comp[r];
  }
  return comp;
}

TreeClass classify_component(const ClasperGraph& g, int component) {
  auto comp = clasper_components(g);
  TreeClass tc;
  int verts = 0, edges = 0, boxes = 0, leaves = 0, dls = 0, nodes = 0;
  bool all_simple_dl = true;
  for (size_t i = 0; i < g.constituents.size(); ++i) {
    if (comp[i] != component) continue;
    ++verts;
    switch (g.constituents[i].kind) {
      case CKind::Leaf: ++leaves; break;
      case CKind::DiskLeaf:
        ++dls;
        if (g.constituents[i].strands.size() != 1) all_simple_dl = false;
        break;
      case CKind::Node: ++nodes; break;
      case CKind::Box: ++boxes; break;
    }
  }
  if (verts == 0) throw std::invalid_argument("no such component");
  for (const auto& e : g.edges)
    if (comp[e.a.c] == component) ++edges;

  // connected by construction; a tree needs no boxes and no cycles
  tc.is_tree = (boxes == 0) && (edges == verts - 1);
  tc.is_admissible = tc.is_tree && dls >= 1;
  tc.is_strict = tc.is_admissible && leaves == 0;
  tc.is_simple = tc.is_strict && all_simple_dl;
  if (tc.is_strict) tc.degree = nodes + 1;
  return tc;
}

ForestClass classify_forest(const ClasperGraph& g) {
  auto comp = clasper_components(g);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  ForestClass fc;
  bool all_strict = ncomp > 0;
  for (int c = 0; c < ncomp; ++c) {
    fc.components.push_back(classify_component(g, c));
    if (!fc.components.back().is_strict) all_strict = false;
  }
  if (all_strict) {
    int min_deg = *fc.components[0].degree;
    for (const auto& tc : fc.components)
      min_deg = std::min(min_deg, *tc.degree);
    fc.forest_degree = min_deg;
  }
  return fc;
}

GraphDegrees graph_degrees(const ClasperGraph& g) {
  GraphDegrees d;
  int leaves = 0;
  for (const auto& c : g.constituents) {
    switch (c.kind) {
      case CKind::Box:
        throw std::domain_error("degree counts are undefined with boxes present");
      case CKind::Leaf: ++leaves; break;
      case CKind::DiskLeaf:
      case CKind::Node: ++d.a_degree; break;
    }
  }
  d.s_twice = d.a_degree - leaves;
  if (leaves == 0) {
    // end-count parity makes a_degree even when no leaves are present
    d.strict_degree = d.s_twice / 2;
  }
  return d;
}

// ---- subtree machinery ----

namespace {

struct Pieces {
  // piece id per non-box constituent (-1 for boxes)
  std::vector<int> piece_of_constituent;
  // piece id per edge (-1 when the edge belongs to no piece: cannot happen),
  // bare box-to-box edges get their own piece
  std::vector<int> piece_of_edge;
  std::vector<Subtree> pieces;
};

Pieces split_off_boxes(const ClasperGraph& g) {
  int nc = static_cast<int>(g.constituents.size());
  int ne = static_cast<int>(g.edges.size());
  auto is_box = [&](int c) { return g.constituents[c].kind == CKind::Box; };

  UnionFind uf(nc);
  for (const auto& e : g.edges)
    if (!is_box(e.a.c) && !is_box(e.b.c)) uf.unite(e.a.c, e.b.c);

  Pieces p;
  p.piece_of_constituent.assign(nc, -1);
  p.piece_of_edge.assign(ne, -1);
  std::map<int, int> root_to_piece;
  for (int i = 0; i < nc; ++i) {
    if (is_box(i)) continue;
    int r = uf.find(i);
    auto [it, fresh] = root_to_piece.try_emplace(r, static_cast<int>(p.pieces.size()));
    if (fresh) p.pieces.emplace_back();
    int pid = it->second;
    p.piece_of_constituent[i] = pid;
    p.pieces[pid].constituents.push_back(i);
  }
  for (int e = 0; e < ne; ++e) {
    const auto& ed = g.edges[e];
    bool abox = is_box(ed.a.c), bbox = is_box(ed.b.c);
    int pid;
    if (abox && bbox) {
      pid = static_cast<int>(p.pieces.size());
      p.pieces.emplace_back();
    } else {
      pid = p.piece_of_constituent[abox ? ed.b.c : ed.a.c];
    }
    p.piece_of_edge[e] = pid;
    p.pieces[pid].edges.push_back(e);
    if (abox) p.pieces[pid].ends.push_back({e, 0});
    if (bbox) p.pieces[pid].ends.push_back({e, 1});
  }
  for (auto& piece : p.pieces) {
    int internal = 0;
    for (int e : piece.edges)
      if (!is_box(g.edges[e].a.c) && !is_box(g.edges[e].b.c)) ++internal;
    piece.acyclic =
        internal == static_cast<int>(piece.constituents.size()) - 1 ||
        (piece.constituents.empty() && internal == 0);
    for (int c : piece.constituents) {
      switch (g.constituents[c].kind) {
        case CKind::Leaf: ++piece.leaf_count; break;
        case CKind::DiskLeaf: ++piece.diskleaf_count; break;
        case CKind::Node: ++piece.node_count; break;
        case CKind::Box: break;
      }
    }
    std::sort(piece.constituents.begin(), piece.constituents.end());
    std::sort(piece.edges.begin(), piece.edges.end());
    std::sort(piece.ends.begin(), piece.ends.end());
  }
  return p;
}

const EndRef& end_of(const ClasperEdge& e, int side) {
  return side == 0 ? e.a : e.b;
}

}  // namespace

SubtreeReport find_subtrees(const ClasperGraph& g) {
  auto rep = validate_clasper(g);
  if (!rep.ok) throw std::domain_error("find_subtrees on invalid clasper");
  Pieces p = split_off_boxes(g);
  SubtreeReport out;

  // output subtrees: the piece on the far side of each box's output edge
  for (size_t b = 0; b < g.constituents.size(); ++b) {
    if (g.constituents[b].kind != CKind::Box) continue;
    int out_slot = -1;
    for (int s = 0; s < 3; ++s)
      if (g.constituents[b].output_mask >> s & 1) out_slot = s;
    int edge = -1, side = -1;
    for (size_t e = 0; e < g.edges.size(); ++e) {
      if (g.edges[e].a.c == static_cast<int>(b) && g.edges[e].a.slot == out_slot) {
        edge = static_cast<int>(e);
        side = 0;
      }
      if (g.edges[e].b.c == static_cast<int>(b) && g.edges[e].b.slot == out_slot) {
        edge = static_cast<int>(e);
        side = 1;
      }
    }
    if (edge < 0) continue;  // cannot happen on a valid graph
    const Subtree& piece = p.pieces[p.piece_of_edge[edge]];
    // qualifies iff its only frontier end is this box's output end
    if (piece.acyclic && piece.ends.size() == 1 &&
        piece.ends[0] == std::make_pair(edge, side))
      out.output_subtrees.emplace(static_cast<int>(b), piece);
  }

  // input subtrees: pieces whose every frontier end is a box input end
  for (const auto& piece : p.pieces) {
    if (piece.ends.empty() || !piece.acyclic) continue;
    bool all_inputs = true;
    std::set<int> boxes;
    bool box_repeat = false;
    for (auto [e, side] : piece.ends) {
      const EndRef& at = end_of(g.edges[e], side);
      if (is_output_slot(g.constituents[at.c], at.slot)) all_inputs = false;
      if (!boxes.insert(at.c).second) box_repeat = true;
    }
    if (!all_inputs) continue;
    // goodness: strict piece, one end per box, strict output subtrees present
    if (piece.leaf_count > 0 || box_repeat) continue;
    bool good = true;
    for (int b : boxes) {
      auto it = out.output_subtrees.find(b);
      if (it == out.output_subtrees.end() || it->second.leaf_count > 0) {
        good = false;
        break;
      }
    }
    if (good) out.good_input_subtrees.push_back(piece);
  }
  return out;
}

int e_degree(const ClasperGraph& g, const Subtree& t) {
  SubtreeReport rep = find_subtrees(g);
  // t must be one of the good input subtrees
  auto match = std::find_if(
      rep.good_input_subtrees.begin(), rep.good_input_subtrees.end(),
      [&](const Subtree& s) {
        return s.constituents == t.constituents && s.edges == t.edges;
      });
  if (match == rep.good_input_subtrees.end())
    throw std::domain_error("not a good input subtree of this clasper");
  int twice = match->diskleaf_count + match->node_count;
  for (auto [e, side] : match->ends) {
    int box = end_of(g.edges[e], side).c;
    const Subtree& o = rep.output_subtrees.at(box);
    twice += o.diskleaf_count + o.node_count;
  }
  if (twice <= 0 || twice % 2 != 0)
    throw std::domain_error("combined weight is not a positive integer");
  return twice / 2;
}

ClasperGraph smooth_complement(const ClasperGraph& g, const ClasperSubset& y) {
  auto rep = validate_clasper(g);
  if (!rep.ok) throw std::domain_error("smooth_complement on invalid clasper");
  int nc = static_cast<int>(g.constituents.size());
  int ne = static_cast<int>(g.edges.size());
  for (int c : y.constituents)
    if (c < 0 || c >= nc) throw std::invalid_argument("unknown constituent in subset");
  for (int e : y.edges)
    if (e < 0 || e >= ne) throw std::invalid_argument("unknown edge in subset");

  std::vector<char> keep_c(nc, 1), keep_e(ne, 1);
  for (int c : y.constituents) keep_c[c] = 0;
  for (int e : y.edges) keep_e[e] = 0;
  // edges lose meaning without both endpoints
  for (int e = 0; e < ne; ++e)
    if (keep_e[e] && (!keep_c[g.edges[e].a.c] || !keep_c[g.edges[e].b.c]))
      throw std::domain_error("complement drops an endpoint of a kept edge");

  // closure conditions per kind
  for (int c = 0; c < nc; ++c) {
    if (!keep_c[c]) continue;
    const auto& con = g.constituents[c];
    int present = 0, absent = 0, out_present = 0, in_present = 0;
    for (int e = 0; e < ne; ++e) {
      for (const EndRef* end : {&g.edges[e].a, &g.edges[e].b}) {
        if (end->c != c) continue;
        if (keep_e[e]) {
          ++present;
          if (con.kind == CKind::Box) {
            if (is_output_slot(con, end->slot)) ++out_present;
            else ++in_present;
          }
        } else {
          ++absent;
        }
      }
    }
    if (con.kind == CKind::Box) {
      if (out_present != 1 || in_present < 1)
        throw std::domain_error(
            "box " + std::to_string(c) +
            " must keep its output edge and at least one input edge");
    } else if (absent > 0) {
      throw std::domain_error("constituent " + std::to_string(c) +
                              " loses an incident edge");
    }
  }

  // build the complement with mutable edge list, then fuse one-input boxes
  struct WEdge {
    EndRef a, b;
    int twists;
    bool alive;
  };
  std::vector<WEdge> edges;
  std::vector<int> old_edge_id(ne, -1);
  for (int e = 0; e < ne; ++e)
    if (keep_e[e]) {
      old_edge_id[e] = static_cast<int>(edges.size());
      edges.push_back({g.edges[e].a, g.edges[e].b, g.edges[e].half_twists, true});
    }
  std::vector<char> alive_c = keep_c;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < nc; ++c) {
      if (!alive_c[c] || g.constituents[c].kind != CKind::Box) continue;
      int out_edge = -1, out_side = -1, in_edge = -1, in_side = -1, ins = 0;
      for (size_t e = 0; e < edges.size(); ++e) {
        if (!edges[e].alive) continue;
        for (int side = 0; side < 2; ++side) {
          const EndRef& end = side == 0 ? edges[e].a : edges[e].b;
          if (end.c != c) continue;
          if (is_output_slot(g.constituents[c], end.slot)) {
            out_edge = static_cast<int>(e);
            out_side = side;
          } else {
            ++ins;
            in_edge = static_cast<int>(e);
            in_side = side;
          }
        }
      }
      if (ins != 1) continue;
      if (out_edge == in_edge)
        throw std::domain_error("box " + std::to_string(c) +
                                " closes onto itself; cannot smooth");
      // fuse: far end of input edge connects to far end of output edge
      EndRef far_in = in_side == 0 ? edges[in_edge].b : edges[in_edge].a;
      EndRef far_out = out_side == 0 ? edges[out_edge].b : edges[out_edge].a;
      int twists = edges[in_edge].twists + edges[out_edge].twists;
      edges[in_edge].alive = false;
      edges[out_edge].alive = false;
      edges.push_back({far_in, far_out, twists, true});
      alive_c[c] = 0;
      changed = true;
    }
  }

  // compact
  ClasperGraph out;
  std::vector<int> cmap(nc, -1);
  for (int c = 0; c < nc; ++c)
    if (alive_c[c]) {
      cmap[c] = static_cast<int>(out.constituents.size());
      out.constituents.push_back(g.constituents[c]);
    }
  for (const auto& e : edges) {
    if (!e.alive) continue;
    ClasperEdge ne2;
    ne2.a = {cmap[e.a.c], e.a.slot};
    ne2.b = {cmap[e.b.c], e.b.slot};
    ne2.half_twists = e.twists;
    out.edges.push_back(ne2);
  }
  return out;
}

// ---- canonical form ----

std::vector<uint64_t> clasper_certificate(const ClasperGraph& g) {
  // disk-leaf strand multisets become part of the vertex color table
  std::vector<std::vector<int>> multisets;
  for (const auto& c : g.constituents)
    if (c.kind == CKind::DiskLeaf) {
      auto m = c.strands;
      std::sort(m.begin(), m.end());
      multisets.push_back(std::move(m));
    }
  std::sort(multisets.begin(), multisets.end());
  multisets.erase(std::unique(multisets.begin(), multisets.end()),
                  multisets.end());
  auto multiset_rank = [&](const std::vector<int>& s) {
    auto m = s;
    std::sort(m.begin(), m.end());
    return static_cast<int64_t>(
        std::lower_bound(multisets.begin(), multisets.end(), m) -
        multisets.begin());
  };

  ColoredGraph cg;
  for (const auto& c : g.constituents) {
    int64_t color = 0;
    switch (c.kind) {
      case CKind::Leaf: color = 1; break;
      case CKind::Node: color = 2; break;
      case CKind::Box: color = 3; break;
      case CKind::DiskLeaf: color = 100 + multiset_rank(c.strands); break;
    }
    cg.add_vertex(color);
  }
  auto end_type = [&](const EndRef& e) -> int64_t {
    const auto& c = g.constituents[e.c];
    if (c.kind != CKind::Box) return 0;
    return is_output_slot(c, e.slot) ? 2 : 1;
  };
  auto zigzag = [](int64_t t) -> int64_t { return t >= 0 ? 2 * t : -2 * t - 1; };
  for (const auto& e : g.edges) {
    int64_t ta = end_type(e.a), tb = end_type(e.b);
    int64_t zz = zigzag(e.half_twists);
    cg.add_edge(e.a.c, e.b.c, (zz << 4) | (ta << 2) | tb);
    cg.add_edge(e.b.c, e.a.c, (zz << 4) | (tb << 2) | ta);
  }
  std::vector<uint64_t> cert;
  cert.push_back(0xC1A59Eull);  // format tag
  cert.push_back(multisets.size());
  for (const auto& m : multisets) {
    cert.push_back(m.size());
    for (int s : m) cert.push_back(static_cast<uint64_t>(s));
  }
  auto body = canonical_certificate(cg);
  cert.insert(cert.end(), body.begin(), body.end());
  return cert;
}

std::string clasper_label(const ClasperGraph& g) {
  auto cert = clasper_certificate(g);
  std::ostringstream os;
  for (size_t i = 0; i < cert.size(); ++i) {
    if (i) os << '.';
    os << std::hex << cert[i];
  }
  return os.str();
}

}  // namespace cwb
