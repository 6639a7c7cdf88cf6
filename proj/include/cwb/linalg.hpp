#pragma once

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwb {

using Rational = boost::multiprecision::cpp_rational;

// sorted (column, value) pairs; values must be nonzero
using SparseRow = std::vector<std::pair<int, Rational>>;

// rank over the rationals; exact arithmetic throughout
int sparse_rank(std::vector<SparseRow> rows);

}  // namespace cwb
