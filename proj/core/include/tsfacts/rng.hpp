#pragma once

#include <cstdint>

namespace tsfacts {

// Counter-based splittable generator: output i is a SplitMix64-style finaler
// applied to key + i * golden ratio. Because draws depend only on (key,
// counter), any (seed, stream) pair yields an independent reproducible
// stream, and parallel batch work needs no shared generator state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed + kGolden * (stream + 1))) {}

  // Derive an independent child stream; deterministic in (parent key, child).
  Rng split(std::uint64_t child) const {
    Rng r(0);
    r.key_ = mix(key_ ^ mix(child + kSplit));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix(key_ + ++counter_ * kGolden); }

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal();                             // inverse-CDF transform
  double student_t(double nu);                 // Bailey's polar method
  double pareto(double alpha, double x_min);   // inverse CDF

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kSplit = 0xD1B54A32D192ED03ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace tsfacts
