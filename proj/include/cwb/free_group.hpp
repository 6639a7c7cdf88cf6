#pragma once
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwb {

// Word in a free group.  Letters are nonzero ints: +g / -g for generator g
// (1-based).  Words are kept freely reduced at all times.
struct FreeWord {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const FreeWord&) const = default;
};

// stack-based cancellation of adjacent inverse pairs
FreeWord free_reduce(std::span<const int> raw);

FreeWord fw_concat(const FreeWord& a, const FreeWord& b);
FreeWord fw_inverse(const FreeWord& w);
FreeWord fw_generator(int g, int sign = 1);
std::string fw_to_string(const FreeWord& w);

// Endomorphism of the free group of the given rank, stored by generator
// images.  images[g-1] is the image of x_g.
struct FreeGroupEndo {
  int rank = 0;
  std::vector<FreeWord> images;

  static FreeGroupEndo identity(int rank);
  bool is_identity() const;
  bool operator==(const FreeGroupEndo&) const = default;
};

// substitute generator images into w, reducing as we go
FreeWord endo_apply(const FreeGroupEndo& e, const FreeWord& w);

// (a . b)(x) = a(b(x))
FreeGroupEndo endo_compose(const FreeGroupEndo& a, const FreeGroupEndo& b);

}  // namespace cwb
