#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cwb/linalg.hpp"

namespace cwb {

// Skeleton components carry legs of dashed graphs.  Circles have a cyclic
// leg order (rotation-equivalent, orientation preserved); intervals are
// rigid.  Components are never interchangeable.
enum class SkelKind { Circle, Interval };

// A unitrivalent dashed graph attached to a skeleton.
//
// Slot numbering: leg i (global position along the skeleton, component by
// component) is slot i; internal vertex j owns slots L+3j..L+3j+2, listed
// in the vertex's cyclic order.  `mate` is a fixed-point-free involution
// pairing slots into edges.
struct UTD {
  std::vector<SkelKind> skel;
  std::vector<int> legs_per_comp;  // one entry per skeleton component
  int internal = 0;
  std::vector<int> mate;

  int total_legs() const {
    int n = 0;
    for (int k : legs_per_comp) n += k;
    return n;
  }
  int slot_count() const { return total_legs() + 3 * internal; }
  int degree() const { return (total_legs() + internal) / 2; }
  // component and position of a (global) leg index
  std::pair<int, int> leg_home(int leg) const;
};

bool utd_valid(const UTD& d, std::string* why = nullptr);

// every dashed component must reach the skeleton
bool utd_strict(const UTD& d);

// a chord joining two legs adjacent on the same skeleton component
bool has_isolated_chord(const UTD& d);

// isomorphism-invariant key (rotations of circle legs, relabelling of
// internal vertices, cyclic rotation of each vertex's slot order)
std::vector<uint64_t> utd_certificate(const UTD& d);

// reverse the cyclic order at one internal vertex
UTD orientation_flip(const UTD& d, int internal_index);

// resolve the edge from `leg` into its two adjacent-leg replacements;
// first = far ends in skeleton order, second = the transposed order
std::pair<UTD, UTD> stu_resolutions(const UTD& d, int leg);

// the two rewirings of an internal edge; h_u must be an internal slot whose
// mate is a slot of a different internal vertex
std::pair<UTD, UTD> ihx_terms(const UTD& d, int h_u);

struct DiagramSet {
  std::vector<UTD> reps;
  std::map<std::vector<uint64_t>, int> index;
};

// all strict diagrams of the given degree, up to isomorphism; chords_only
// restricts to diagrams with no internal vertices
DiagramSet enumerate_diagrams(const std::vector<SkelKind>& skel, int degree,
                              bool chords_only);

// degree-`degree` diagrams with exactly one internal vertex, all three of
// its edges ending on legs (relation generators, not basis members)
std::vector<UTD> enumerate_one_internal(const std::vector<SkelKind>& skel,
                                        int degree);

enum class Presentation { Unitrivalent, ChordOnly };

std::vector<SparseRow> relation_rows(const DiagramSet& ds, Presentation p,
                                     const std::vector<SkelKind>& skel,
                                     int degree);

int space_dimension(const std::vector<SkelKind>& skel, int degree,
                    Presentation p);

}  // namespace cwb
