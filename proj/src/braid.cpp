#include "cwb/braid.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cwb {

static void check_letters(int strands, const std::vector<int>& letters) {
  if (strands < 1) throw std::invalid_argument("braid needs at least 1 strand");
  for (int l : letters) {
    int g = std::abs(l);
    if (g < 1 || g >= strands)
      throw std::invalid_argument("braid letter " + std::to_string(l) +
                                  " out of range for " +
                                  std::to_string(strands) + " strands");
  }
}

BraidWord make_braid(int strands, std::vector<int> letters) {
  check_letters(strands, letters);
  BraidWord w;
  w.strands = strands;
  w.letters = free_reduce(letters).letters;
  return w;
}

BraidWord braid_compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("strand count mismatch in braid composition");
  std::vector<int> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return make_braid(a.strands, std::move(raw));
}

BraidWord braid_invert(const BraidWord& a) {
  std::vector<int> raw;
  raw.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    raw.push_back(-*it);
  BraidWord w;
  w.strands = a.strands;
  w.letters = std::move(raw);  // reversal of a reduced word is reduced
  return w;
}

BraidWord braid_commutator(const BraidWord& u, const BraidWord& v) {
  return braid_compose(braid_compose(braid_invert(u), braid_invert(v)),
                       braid_compose(u, v));
}

std::vector<int> underlying_permutation(const BraidWord& u) {
  std::vector<int> occupant(u.strands);  // occupant[p-1] = strand at position p
  for (int i = 0; i < u.strands; ++i) occupant[i] = i + 1;
  for (int l : u.letters) {
    int p = std::abs(l);
    std::swap(occupant[p - 1], occupant[p]);
  }
  std::vector<int> perm(u.strands);
  for (int p = 1; p <= u.strands; ++p) perm[occupant[p - 1] - 1] = p;
  return perm;
}

bool is_pure(const BraidWord& u) {
  auto perm = underlying_permutation(u);
  for (int i = 0; i < u.strands; ++i)
    if (perm[i] != i + 1) return false;
  return true;
}

FreeGroupEndo artin_action(const BraidWord& u) {
  FreeGroupEndo e = FreeGroupEndo::identity(u.strands);
  for (int l : u.letters) {
    int i = std::abs(l);
    FreeGroupEndo step = FreeGroupEndo::identity(u.strands);
    if (l > 0) {
      step.images[i - 1] = free_reduce(std::vector<int>{i, i + 1, -i});
      step.images[i] = fw_generator(i);
    } else {
      step.images[i - 1] = fw_generator(i + 1);
      step.images[i] = free_reduce(std::vector<int>{-(i + 1), i, i + 1});
    }
    e = endo_compose(e, step);
  }
  return e;
}

bool is_trivial_braid(const BraidWord& u) {
  if (u.letters.empty()) return true;
  if (!is_pure(u)) return false;
  return artin_action(u).is_identity();
}

BraidWord pure_generator(int strands, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > strands || i == j)
    throw std::invalid_argument("pure generator indices out of range");
  std::vector<int> raw;
  for (int t = j - 1; t > i; --t) raw.push_back(t);
  raw.push_back(i);
  raw.push_back(i);
  for (int t = i + 1; t <= j - 1; ++t) raw.push_back(-t);
  return make_braid(strands, std::move(raw));
}

long long linking_number(const BraidWord& u, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > u.strands || j > u.strands)
    throw std::invalid_argument("linking_number strand indices out of range");
  std::vector<int> occupant(u.strands);
  for (int t = 0; t < u.strands; ++t) occupant[t] = t + 1;
  long long total = 0;
  for (int l : u.letters) {
    int p = std::abs(l);
    int a = occupant[p - 1], b = occupant[p];
    if ((a == i && b == j) || (a == j && b == i)) total += (l > 0) ? 1 : -1;
    std::swap(occupant[p - 1], occupant[p]);
  }
  if (total % 2 != 0)
    throw std::domain_error("odd crossing count: strands do not close up");
  return total / 2;
}

BraidWord strand_double(const BraidWord& u, int i) {
  if (i < 1 || i > u.strands)
    throw std::invalid_argument("strand_double index out of range");
  int cur = i;  // current position of the doubled strand, in old coordinates
  std::vector<int> out;
  out.reserve(2 * u.letters.size());
  for (int l : u.letters) {
    int p = std::abs(l);
    int s = l > 0 ? 1 : -1;
    if (p == cur - 1) {
      // a neighbour crosses the pair from the left; it passes both copies
      out.push_back(s * (cur - 1));
      out.push_back(s * cur);
      cur -= 1;
    } else if (p == cur) {
      // the pair crosses its right neighbour
      out.push_back(s * (cur + 1));
      out.push_back(s * cur);
      cur += 1;
    } else if (p > cur) {
      out.push_back(s * (p + 1));
    } else {
      out.push_back(s * p);
    }
  }
  return make_braid(u.strands + 1, std::move(out));
}

BraidWord strand_delete(const BraidWord& u, const std::set<int>& gone) {
  if (!is_pure(u))
    throw std::domain_error("strand_delete requires a pure braid");
  for (int g : gone)
    if (g < 1 || g > u.strands)
      throw std::invalid_argument("strand_delete index out of range");
  int survivors = u.strands - static_cast<int>(gone.size());
  if (survivors < 1)
    throw std::invalid_argument("strand_delete would remove every strand");

  std::vector<int> occupant(u.strands);
  for (int t = 0; t < u.strands; ++t) occupant[t] = t + 1;
  std::vector<int> out;
  for (int l : u.letters) {
    int p = std::abs(l);
    int a = occupant[p - 1], b = occupant[p];
    if (!gone.count(a) && !gone.count(b)) {
      int rank = 0;  // position of the crossing among surviving strands
      for (int q = 1; q <= p; ++q)
        if (!gone.count(occupant[q - 1])) ++rank;
      out.push_back(l > 0 ? rank : -rank);
    }
    std::swap(occupant[p - 1], occupant[p]);
  }
  return make_braid(survivors, std::move(out));
}

BraidWord bing_braid(int k) {
  if (k < 1) throw std::invalid_argument("bing_braid level must be >= 1");
  BraidWord b = pure_generator(4, 2, 3);  // clasp of strands 2,3 on 4 strands
  for (int level = 2; level <= k; ++level) {
    BraidWord doubled = strand_double(strand_double(b, 2), 1);
    BraidWord clasp = pure_generator(2 * level + 2, 2, 3);
    b = braid_commutator(doubled, clasp);
  }
  return b;
}

BraidWord milnor_representative(int k) {
  if (k < 1) throw std::invalid_argument("milnor_representative level must be >= 1");
  int n = k + 1;
  BraidWord w = pure_generator(n, 1, 2);
  for (int t = 2; t <= k; ++t)
    w = braid_commutator(w, pure_generator(n, t, t + 1));
  return w;
}

}  // namespace cwb
