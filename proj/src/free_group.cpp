#include "cwb/free_group.hpp"

namespace cwb {

FreeWord free_reduce(std::span<const int> raw) {
  FreeWord out;
  out.letters.reserve(raw.size());
  for (int l : raw) {
    if (l == 0) throw std::invalid_argument("zero letter in free word");
    if (!out.letters.empty() && out.letters.back() == -l)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

FreeWord fw_concat(const FreeWord& a, const FreeWord& b) {
  std::vector<int> raw;
  raw.reserve(a.size() + b.size());
  raw.insert(raw.end(), a.letters.begin(), a.letters.end());
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return free_reduce(raw);
}

FreeWord fw_inverse(const FreeWord& w) {
  FreeWord out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

FreeWord fw_generator(int g, int sign) {
  if (g <= 0) throw std::invalid_argument("generator index must be positive");
  FreeWord w;
  w.letters.push_back(sign >= 0 ? g : -g);
  return w;
}

std::string fw_to_string(const FreeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int l : w.letters) {
    if (!s.empty()) s += ' ';
    s += (l > 0) ? "x" : "X";  // X = inverse
    s += std::to_string(l > 0 ? l : -l);
  }
  return s;
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  FreeGroupEndo e;
  e.rank = rank;
  e.images.reserve(rank);
  for (int g = 1; g <= rank; ++g) e.images.push_back(fw_generator(g));
  return e;
}

bool FreeGroupEndo::is_identity() const {
  for (int g = 1; g <= rank; ++g) {
    const auto& im = images[g - 1];
    if (im.size() != 1 || im.letters[0] != g) return false;
  }
  return true;
}

FreeWord endo_apply(const FreeGroupEndo& e, const FreeWord& w) {
  std::vector<int> raw;
  for (int l : w.letters) {
    int g = l > 0 ? l : -l;
    if (g > e.rank) throw std::invalid_argument("letter outside endo rank");
    const auto& im = e.images[g - 1];
    if (l > 0) {
      raw.insert(raw.end(), im.letters.begin(), im.letters.end());
    } else {
      for (auto it = im.letters.rbegin(); it != im.letters.rend(); ++it)
        raw.push_back(-*it);
    }
  }
  return free_reduce(raw);
}

FreeGroupEndo endo_compose(const FreeGroupEndo& a, const FreeGroupEndo& b) {
  if (a.rank != b.rank) throw std::invalid_argument("endo rank mismatch");
  FreeGroupEndo c;
  c.rank = a.rank;
  c.images.reserve(a.rank);
  for (int g = 1; g <= a.rank; ++g)
    c.images.push_back(endo_apply(a, b.images[g - 1]));
  return c;
}

}  // namespace cwb
