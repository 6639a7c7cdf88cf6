#include "cwb/magnus.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace cwb {

uint64_t pack_monomial(const std::vector<int>& monomial) {
  if (monomial.size() > MagnusSeries::kMaxCutoff)
    throw std::invalid_argument("monomial too long to pack");
  uint64_t key = 0;
  for (int idx : monomial) {
    if (idx < 1 || idx > 255)
      throw std::invalid_argument("monomial index out of packable range");
    key = (key << 8) | static_cast<uint64_t>(idx);
  }
  return key;
}

std::vector<int> unpack_monomial(uint64_t key, int degree) {
  std::vector<int> out(degree);
  for (int t = degree - 1; t >= 0; --t) {
    out[t] = static_cast<int>(key & 0xff);
    key >>= 8;
  }
  return out;
}

long long MagnusSeries::coeff(const std::vector<int>& monomial) const {
  int d = static_cast<int>(monomial.size());
  if (d > cutoff) throw std::invalid_argument("monomial beyond cutoff");
  for (int idx : monomial)
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("monomial index out of rank");
  const auto& level = by_degree[d];
  auto it = level.find(pack_monomial(monomial));
  if (it == level.end()) return 0;
  __int128 v = it->second;
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("series coefficient exceeds 64 bits");
  return static_cast<long long>(v);
}

MagnusSeries magnus_expand(const FreeWord& w, int rank, int cutoff) {
  if (rank < 1 || rank > 255)
    throw std::invalid_argument("magnus rank out of range");
  if (cutoff < 0 || cutoff > MagnusSeries::kMaxCutoff)
    throw std::invalid_argument("magnus cutoff out of range (max 8)");
  MagnusSeries s;
  s.rank = rank;
  s.cutoff = cutoff;
  s.by_degree.resize(cutoff + 1);
  s.by_degree[0][0] = 1;

  for (int l : w.letters) {
    int g = std::abs(l);
    if (g > rank) throw std::invalid_argument("word letter outside rank");
    if (l > 0) {
      // multiply on the right by (1 + X_g)
      for (int d = cutoff; d >= 1; --d) {
        for (const auto& [key, val] : s.by_degree[d - 1]) {
          auto& slot = s.by_degree[d][(key << 8) | static_cast<uint64_t>(g)];
          slot += val;
          if (slot == 0) s.by_degree[d].erase((key << 8) | static_cast<uint64_t>(g));
        }
      }
    } else {
      // multiply on the right by (1 - X_g + X_g^2 - ...)
      for (int d = cutoff; d >= 1; --d) {
        uint64_t tail = 0;
        __int128 sign = 1;
        for (int t = 1; t <= d; ++t) {
          tail = (tail << 8) | static_cast<uint64_t>(g);
          sign = -sign;
          for (const auto& [key, val] : s.by_degree[d - t]) {
            uint64_t nk = (key << (8 * t)) | tail;
            auto& slot = s.by_degree[d][nk];
            slot += sign * val;
            if (slot == 0) s.by_degree[d].erase(nk);
          }
        }
      }
    }
  }
  return s;
}

std::vector<FreeWord> longitudes(const BraidWord& u) {
  if (!is_pure(u)) throw std::domain_error("longitudes require a pure braid");
  FreeGroupEndo act = artin_action(u);
  std::vector<FreeWord> out;
  out.reserve(u.strands);
  for (int i = 1; i <= u.strands; ++i) {
    const FreeWord& w = act.images[i - 1];
    size_t n = w.size();
    if (n % 2 == 0)
      throw std::domain_error("longitude image has even length");
    size_t m = n / 2;
    bool ok = (w.letters[m] == i);
    for (size_t t = 0; ok && t < m; ++t)
      ok = (w.letters[m + 1 + t] == -w.letters[m - 1 - t]);
    if (!ok)
      throw std::domain_error("image of generator is not a conjugate of it");
    FreeWord l;
    l.letters.assign(w.letters.begin(), w.letters.begin() + m);
    // zero-framed convention: cancel the x_i winding of the conjugator (the
    // correction commutes with x_i, so l x_i l^-1 is unchanged)
    long long e = 0;
    for (int letter : l.letters) {
      if (letter == i) ++e;
      if (letter == -i) --e;
    }
    for (; e > 0; --e) l.letters.push_back(-i);
    for (; e < 0; ++e) l.letters.push_back(i);
    l = free_reduce(std::move(l.letters));
    out.push_back(std::move(l));
  }
  return out;
}

long long milnor_mu(const BraidWord& u, const std::vector<int>& index) {
  int m = static_cast<int>(index.size());
  if (m < 2) throw std::invalid_argument("mu index needs length >= 2");
  for (int i : index)
    if (i < 1 || i > u.strands)
      throw std::invalid_argument("mu index entry out of range");
  auto longs = longitudes(u);
  std::vector<int> monomial(index.begin(), index.end() - 1);
  MagnusSeries s = magnus_expand(longs[index.back() - 1], u.strands, m - 1);
  return s.coeff(monomial);
}

static void walk_indices(int strands, int len, std::vector<int>& cur,
                         const std::vector<MagnusSeries>& exps,
                         MuTable& table) {
  if (static_cast<int>(cur.size()) == len - 1) {
    for (int last = 1; last <= strands; ++last) {
      long long v = exps[last - 1].coeff(cur);
      std::string key;
      for (int idx : cur) key += std::to_string(idx) + ",";
      key += std::to_string(last);
      table.mu[key] = v;
    }
    return;
  }
  for (int i = 1; i <= strands; ++i) {
    cur.push_back(i);
    walk_indices(strands, len, cur, exps, table);
    cur.pop_back();
  }
}

MuTable mu_table(const BraidWord& u, int max_length) {
  if (max_length < 2) throw std::invalid_argument("mu table cutoff below 2");
  if (max_length - 1 > MagnusSeries::kMaxCutoff)
    throw std::invalid_argument("mu table cutoff too deep (max length 9)");
  MuTable table;
  table.strands = u.strands;
  table.cutoff = max_length;
  auto longs = longitudes(u);
  std::vector<MagnusSeries> exps;
  exps.reserve(u.strands);
  for (const auto& l : longs)
    exps.push_back(magnus_expand(l, u.strands, max_length - 1));
  for (int len = 2; len <= max_length; ++len) {
    std::vector<int> cur;
    walk_indices(u.strands, len, cur, exps, table);
  }
  return table;
}

std::optional<int> first_nonvanishing_length(const BraidWord& u,
                                             int max_length) {
  if (max_length < 2) throw std::invalid_argument("cutoff below 2");
  if (max_length - 1 > MagnusSeries::kMaxCutoff)
    throw std::invalid_argument("cutoff too deep (max length 9)");
  auto longs = longitudes(u);
  std::vector<MagnusSeries> exps;
  exps.reserve(u.strands);
  for (const auto& l : longs)
    exps.push_back(magnus_expand(l, u.strands, max_length - 1));
  for (int len = 2; len <= max_length; ++len) {
    for (const auto& e : exps)
      for (const auto& [key, val] : e.by_degree[len - 1])
        if (val != 0) return len;
  }
  return std::nullopt;
}

}  // namespace cwb
