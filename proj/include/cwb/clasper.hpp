#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cwb {

// Abstract combinatorial clasper: leaves, disk-leaves, nodes and boxes joined
// by edges.  Leaves and disk-leaves expose one attachment slot, nodes and
// boxes three; exactly one box slot is its output.  Edges carry an integer
// half-twist count.  Disk-leaves record the ids of the skeleton strands they
// intersect, in order.
enum class CKind { Leaf, DiskLeaf, Node, Box };

int slot_count(CKind k);

struct Constituent {
  CKind kind = CKind::Leaf;
  std::vector<int> strands;   // disk-leaf only
  uint8_t output_mask = 0;    // box only, bit per slot; valid boxes have one bit
};

struct EndRef {
  int c = -1;
  int slot = -1;
  bool operator==(const EndRef&) const = default;
  auto operator<=>(const EndRef&) const = default;
};

struct ClasperEdge {
  EndRef a, b;
  int half_twists = 0;
};

struct ClasperGraph {
  std::vector<Constituent> constituents;
  std::vector<ClasperEdge> edges;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate_clasper(const ClasperGraph& g);

// connected components over constituents; returns component id per constituent
std::vector<int> clasper_components(const ClasperGraph& g);

struct TreeClass {
  bool is_tree = false;        // no boxes, underlying multigraph acyclic
  bool is_admissible = false;  // tree with at least one disk-leaf
  bool is_strict = false;      // tree with no plain leaves
  bool is_simple = false;      // strict and every disk-leaf meets one strand
  std::optional<int> degree;   // nodes + 1, defined for strict trees
};

// classification of one connected component (graph must validate)
TreeClass classify_component(const ClasperGraph& g, int component);

struct ForestClass {
  std::vector<TreeClass> components;
  std::optional<int> forest_degree;  // min degree when every component is strict
};

ForestClass classify_forest(const ClasperGraph& g);

struct GraphDegrees {
  int a_degree = 0;        // disk-leaves + nodes
  int s_twice = 0;         // 2 * s-degree = a_degree - leaves
  std::optional<int> strict_degree;  // = s-degree, defined iff no leaves
};

// whole-graph counts; throws if any box is present
GraphDegrees graph_degrees(const ClasperGraph& g);

// A connected piece of the graph away from the boxes, together with the
// frontier ends where it meets box slots.
struct Subtree {
  std::vector<int> constituents;
  std::vector<int> edges;
  // frontier: (edge id, side 0/1) whose far attachment is a box slot
  std::vector<std::pair<int, int>> ends;
  bool acyclic = false;
  int leaf_count = 0, diskleaf_count = 0, node_count = 0;
};

struct SubtreeReport {
  // box id -> its output subtree, when the piece hanging off the output end
  // qualifies (single frontier end, no boxes inside, acyclic)
  std::map<int, Subtree> output_subtrees;
  // pieces whose frontier ends all sit on distinct box input slots, with no
  // plain leaves, and whose adjacent output subtrees exist and are leafless
  std::vector<Subtree> good_input_subtrees;
};

SubtreeReport find_subtrees(const ClasperGraph& g);

// Combined weight of an input subtree and the output subtrees hanging off
// the boxes it plugs into; always a positive integer for good subtrees.
int e_degree(const ClasperGraph& g, const Subtree& t);

// Constituents/edges to discard; the remainder is smoothed by fusing away
// every box left with a single input edge (half-twists add up).
struct ClasperSubset {
  std::set<int> constituents;
  std::set<int> edges;
};

ClasperGraph smooth_complement(const ClasperGraph& g, const ClasperSubset& y);

using Marking = std::vector<EndRef>;  // (box, input slot) pairs

// check marking validity against g; returns diagnostics (empty = valid)
std::vector<std::string> check_marking(const ClasperGraph& g,
                                       const Marking& m);

struct ZipResult {
  ClasperGraph graph;
  int steps = 0;
};

// Resolve every marked box by duplicating the structure hanging off its
// output end onto its two input branches.  Terminates, and the result is
// independent of the marking order up to isomorphism.
ZipResult zip(const ClasperGraph& g, const Marking& m);

// label equal iff claspers are isomorphic (kinds, box outputs, half-twists
// and disk-leaf strand multisets respected; slots within a kind unordered)
std::vector<uint64_t> clasper_certificate(const ClasperGraph& g);
std::string clasper_label(const ClasperGraph& g);

}  // namespace cwb
