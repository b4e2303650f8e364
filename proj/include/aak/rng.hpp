#ifndef AAK_RNG_HPP
#define AAK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

namespace aak {

// Deterministic splitmix64 generator. All randomness in the toolkit flows
// through explicitly seeded instances of this class, so runs are
// bit-reproducible across platforms (std::uniform_int_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Lemire's multiply-shift; slight modulo bias is
  // irrelevant at 64 bits and keeps the draw branch-free and portable.
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform_double(double lo, double hi) {
    return lo + (hi - lo) * uniform_double();
  }

  // Standard normal via Box-Muller (one value per call; the twin is dropped
  // so the draw count stays predictable).
  double normal() {
    double u1 = uniform_double();
    double u2 = uniform_double();
    while (u1 <= 0.0) u1 = uniform_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  bool bernoulli(double p) { return uniform_double() < p; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

// Derives an independent, order-insensitive stream for one document:
// generation over a corpus is deterministic regardless of scheduling.
inline Rng rng_for_document(std::uint64_t seed, std::string_view doc_id) {
  Rng mix(seed ^ fnv1a64(doc_id));
  return Rng(mix.next_u64());
}

}  // namespace aak

#endif  // AAK_RNG_HPP
