#ifndef WRL_EXACTMATH_RNG_HPP
#define WRL_EXACTMATH_RNG_HPP

#include <cstdint>
#include <stdexcept>

namespace wrl::exactmath {

/*
 * SplitMix64-based generator.  Chosen over std::uniform_int_distribution
 * because the byte-for-byte reproducibility contract requires identical
 * streams on every platform and standard library.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi] by rejection
  long uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  long uniform_nonzero(long bound) {  // [-bound, bound] \ {0}
    long v;
    do {
      v = uniform(-bound, bound);
    } while (v == 0);
    return v;
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Counter-based derivation: replaying any (stream, index) cell does not
// require generating the cells before it.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  Rng r(master ^ (0xA0761D6478BD642Full * (stream + 1)) ^ (0xE7037ED1A0B428DBull * (index + 1)));
  return r.next();
}

}  // namespace wrl::exactmath

#endif  // WRL_EXACTMATH_RNG_HPP
