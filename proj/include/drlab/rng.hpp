#pragma once

#include <cmath>
#include <cstdint>

namespace drlab {

// Counter-based deterministic random stream (splitmix64 core).
// Streams are cheap values: sample i of a dataset gets Rng(mix(master, i)),
// so generation order and worker count never affect the bytes produced.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  // splitmix64 finalizer; bijective on u64.
  static uint64_t avalanche(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  // Derive a child seed. Injective in `i` for fixed `key` (xor of a
  // constant with a bijection of i).
  static uint64_t mix(uint64_t key, uint64_t i) {
    return avalanche(key ^ avalanche(i ^ 0x9e3779b97f4a7c15ull));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1), 53-bit resolution. Explicit construction, not
  // std::uniform_real_distribution, so results are platform-stable.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Inclusive range. Modulo bias is < 2^-57 for the small ranges used here.
  int uniform_int(int lo, int hi) {
    return lo + int(next_u64() % uint64_t(hi - lo + 1));
  }

  // Box-Muller, one draw per pair (the sine half is discarded so the
  // stream position never depends on call parity).
  double gaussian() {
    double u1 = 1.0 - next_double();  // (0,1]
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Independent child stream. Consumes one draw from this stream.
  Rng fork(uint64_t tag) { return Rng(mix(next_u64(), tag)); }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace drlab
