#pragma once
#include <set>
#include <vector>

#include "cwb/free_group.hpp"

namespace cwb {

// Braid word on a fixed number of strands.  Letters are +-i for the i-th
// Artin generator (i in 1..strands-1); the letter sequence is always freely
// reduced (adjacent i, -i pairs cancelled).  Positions are 1-based; strands
// are named by their starting position.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

BraidWord make_braid(int strands, std::vector<int> letters);
BraidWord braid_compose(const BraidWord& a, const BraidWord& b);
BraidWord braid_invert(const BraidWord& a);
// u^-1 v^-1 u v
BraidWord braid_commutator(const BraidWord& u, const BraidWord& v);

// perm[i-1] = final position of the strand that starts at position i
std::vector<int> underlying_permutation(const BraidWord& u);
bool is_pure(const BraidWord& u);

// Action on the free group of rank = strands:
//   sigma_i   : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   sigma_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// Composed left to right along the word.  The action is faithful, which is
// what makes is_trivial_braid an honest decision procedure.
FreeGroupEndo artin_action(const BraidWord& u);
bool is_trivial_braid(const BraidWord& u);

// full twist of strands i<j in front of the others: the standard pure braid
// generator (sigma_{j-1} .. sigma_{i+1}) sigma_i^2 (sigma_{i+1}^-1 .. sigma_{j-1}^-1)
BraidWord pure_generator(int strands, int i, int j);

// half the signed count of crossings between strands i and j; requires the
// count to be even (always true for pure braids)
long long linking_number(const BraidWord& u, int i, int j);

// Replace strand i by a zero-framed parallel pair occupying positions
// {i, i+1}; later strands shift up by one.  No crossings are introduced
// between the two copies.
BraidWord strand_double(const BraidWord& u, int i);

// Delete the given strands from a pure braid; surviving strands are
// renumbered by rank.  Throws if u is not pure.
BraidWord strand_delete(const BraidWord& u, const std::set<int>& gone);

// Doubling ladder on 2k+2 strands: level 1 is a clasp of strands 2,3; level
// k is the commutator of the doubled level k-1 with that clasp.  Strand 1 is
// never crossed, deleting any pair {2i-1,2i} trivialises the word, and the
// word lies in the k-th lower central subgroup of the pure braid group.
BraidWord bing_braid(int k);

// Left-nested commutator [..[[A12,A23],A34]..,A_{k,k+1}] on k+1 strands: a
// pure-braid stand-in for the k-component iterated clasp pattern.  Brunnian,
// with first non-vanishing mu-length exactly k+1.
BraidWord milnor_representative(int k);

}  // namespace cwb
