#pragma once

// Seeded, reproducible random inputs for the invariant suites.

#include <cstdint>
#include <random>
#include <string_view>

#include "tauh/semidirect.hpp"

namespace tauh {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for a named suite: seed and name are mixed with
  // splitmix64 so that suites do not share draws.
  Rng split(std::string_view name) const {
    std::uint64_t h = seed_mix(base_seed());
    for (char c : name) h = seed_mix(h ^ static_cast<unsigned char>(c));
    return Rng(h);
  }

  // Uniform in [-1, 1), built from the top 53 bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0;
  }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }
  Complex complex() { return {uniform(), uniform()}; }

 private:
  static std::uint64_t seed_mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }
  std::uint64_t base_seed() const {
    std::mt19937_64 copy = engine_;
    return copy();
  }

  std::mt19937_64 engine_;
};

inline GroupFunction random_function(const TauSystem& sys, Side side, Rng& rng) {
  GroupFunction f(sys, side);
  for (auto& z : f.values()) z = rng.complex();
  return f;
}

inline KFunction random_kfunction(const FiniteLcaGroup& K, Domain d, Rng& rng) {
  KFunction v(K, d);
  for (auto& z : v.values) z = rng.complex();
  return v;
}

}  // namespace tauh
