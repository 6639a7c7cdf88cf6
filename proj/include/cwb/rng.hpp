#pragma once
#include <cstdint>
#include <vector>

namespace cwb {

// splitmix64: tiny, fast, and identical on every platform.  We do not use
// <random> distributions because their output is implementation-defined and
// the verify reports must be reproducible byte for byte.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); modulo bias is irrelevant for test-corpus sampling
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  int range(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // derive an independent stream (for per-item determinism under parallelism)
  Rng fork(uint64_t salt) {
    Rng r(state_ ^ (0xd1b54a32d192ed03ull * (salt + 1)));
    r.next();
    return r;
  }

private:
  uint64_t state_;
};

}  // namespace cwb
