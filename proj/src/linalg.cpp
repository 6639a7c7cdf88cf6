#include "cwb/linalg.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace cwb {

namespace {

// dst -= factor * src, both sorted by column
SparseRow row_axpy(const SparseRow& dst, const SparseRow& src,
                   const Rational& factor) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -factor * src[j].second);
      ++j;
    } else {
      Rational v = dst[i].second - factor * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int sparse_rank(std::vector<SparseRow> rows) {
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const SparseRow& r) { return r.empty(); }),
             rows.end());
  int rank = 0;
  std::unordered_map<int, int> col_count;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ++col_count[c];

  std::vector<char> done(rows.size(), 0);
  for (size_t round = 0; round < rows.size(); ++round) {
    // cheapest remaining row, then its rarest column: keeps fill-in low
    int best_row = -1;
    size_t best_size = std::numeric_limits<size_t>::max();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      if (rows[i].size() < best_size) {
        best_size = rows[i].size();
        best_row = static_cast<int>(i);
      }
    }
    if (best_row < 0) break;

    int pivot_col = -1;
    int rarity = std::numeric_limits<int>::max();
    for (const auto& [c, v] : rows[best_row]) {
      int n = col_count[c];
      if (n < rarity) {
        rarity = n;
        pivot_col = c;
      }
    }

    const SparseRow pivot_row = rows[best_row];
    Rational pivot_val;
    for (const auto& [c, v] : pivot_row)
      if (c == pivot_col) pivot_val = v;

    done[best_row] = 1;
    ++rank;
    for (const auto& [c, v] : pivot_row) --col_count[c];

    for (size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      auto it = std::lower_bound(
          rows[i].begin(), rows[i].end(), pivot_col,
          [](const auto& p, int c) { return p.first < c; });
      if (it == rows[i].end() || it->first != pivot_col) continue;
      Rational factor = it->second / pivot_val;
      for (const auto& [c, v] : rows[i]) --col_count[c];
      rows[i] = row_axpy(rows[i], pivot_row, factor);
      for (const auto& [c, v] : rows[i]) ++col_count[c];
    }
  }
  return rank;
}

}  // namespace cwb
