#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwb/braid.hpp"
#include "cwb/free_group.hpp"

namespace cwb {

// Truncated series in non-commuting variables X_1..X_rank with integer
// coefficients.  A monomial of degree d <= 8 is packed into a uint64, one
// index byte per factor (most significant first); rank is capped at 255.
struct MagnusSeries {
  int rank = 0;
  int cutoff = 0;
  // by_degree[d] maps packed monomials of degree d to coefficients
  std::vector<std::unordered_map<uint64_t, __int128>> by_degree;

  static constexpr int kMaxCutoff = 8;

  long long coeff(const std::vector<int>& monomial) const;
};

uint64_t pack_monomial(const std::vector<int>& monomial);
std::vector<int> unpack_monomial(uint64_t key, int degree);

// x_g -> 1 + X_g, x_g^-1 -> 1 - X_g + X_g^2 - ... (truncated)
MagnusSeries magnus_expand(const FreeWord& w, int rank, int cutoff);

// Longitudes of a pure braid: artin_action(u)(x_i) = l_i x_i l_i^-1 as
// reduced words; l_i is the literal conjugator (no normalisation).  Throws
// if u is not pure.
std::vector<FreeWord> longitudes(const BraidWord& u);

// mu(i_1 .. i_m) = coefficient of X_{i_1}..X_{i_{m-1}} in the expansion of
// the longitude of strand i_m, truncated at degree m-1.  mu of length 2 is
// the pairwise linking number.
long long milnor_mu(const BraidWord& u, const std::vector<int>& index);

// all mu values of length 2..max_length, keyed by comma-joined index strings
struct MuTable {
  int strands = 0;
  int cutoff = 0;  // maximum index length tabulated
  std::map<std::string, long long> mu;

  bool operator==(const MuTable&) const = default;
};

MuTable mu_table(const BraidWord& u, int max_length);

// Smallest m in 2..max_length with a nonzero mu of length m, if any.
std::optional<int> first_nonvanishing_length(const BraidWord& u,
                                             int max_length);

}  // namespace cwb
