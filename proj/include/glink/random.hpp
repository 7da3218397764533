#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "glink/field.hpp"

namespace glink {

/// Deterministic random source for "general" choices. Child streams are derived from the
/// parent seed and a label, so adding a draw in one construction does not shift another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  Rng child(std::string_view label) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    return Rng(mix(seed_ ^ h));
  }
  Rng child(std::uint64_t index) const { return Rng(mix(seed_ + 0x9E3779B97F4A7C15ull * (index + 1))); }

  std::uint64_t next() { return engine_(); }

  FieldElement element(const PrimeField& field) { return {static_cast<std::uint32_t>(next() % field.prime())}; }
  FieldElement nonzero(const PrimeField& field) {
    return {static_cast<std::uint32_t>(1 + next() % (field.prime() - 1))};
  }

  static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace glink
