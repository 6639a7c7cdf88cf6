#pragma once
#include <cstdint>
#include <vector>

namespace cwb {

// Small colored directed multigraph, used as a common target encoding for
// isomorphism questions.  Two graphs get equal certificates iff they are
// isomorphic by a vertex bijection preserving vertex colors, edge colors,
// directions and multiplicities.
struct ColoredGraph {
  std::vector<int64_t> vertex_colors;
  struct Edge {
    int u = 0, v = 0;
    int64_t color = 0;
  };
  std::vector<Edge> edges;

  int add_vertex(int64_t color) {
    vertex_colors.push_back(color);
    return static_cast<int>(vertex_colors.size()) - 1;
  }
  void add_edge(int u, int v, int64_t color) { edges.push_back({u, v, color}); }
  // undirected convenience: one arc each way
  void add_sym_edge(int u, int v, int64_t color) {
    edges.push_back({u, v, color});
    edges.push_back({v, u, color});
  }
};

// Individualization-refinement search returning the lexicographically least
// certificate over all admissible orderings.  Intended for graphs of at most
// a few dozen vertices.
std::vector<uint64_t> canonical_certificate(const ColoredGraph& g);

}  // namespace cwb
