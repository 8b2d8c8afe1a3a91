#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core_space.hpp"
#include "uniformity.hpp"

// Seeded generators for property tests and the sampled axiom checks.
// mt19937_64 keeps the streams reproducible across platforms.

namespace cantor {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t below(std::uint64_t n) { return gen_() % n; }  // n >= 1
  int bit() { return static_cast<int>(below(2)); }
  bool chance(std::uint64_t num, std::uint64_t den) {
    return below(den) < num;
  }

 private:
  std::mt19937_64 gen_;
};

// The fiber tokens sampling draws from.
const std::vector<std::string>& fiber_pool();

std::string random_bits(Rng& rng, std::size_t len);

// Up to max_fibers fibers from the pool, eventually periodic words,
// canonicalized (so the zero point shows up naturally).
Point random_point(Rng& rng, int max_fibers = 3, int max_transient = 3,
                   int max_period = 3);

// Never VOID; whole space when the constraint count comes up zero.
Cylinder random_cylinder(Rng& rng, int max_fibers = 4,
                         std::uint64_t max_pos = 4, int max_constraints = 6);

UIndex random_index(Rng& rng, int max_fibers = 3, std::uint64_t max_k = 4);

// A cylinder guaranteed to contain x: constraints copy x's bits.
Cylinder random_neighborhood(Rng& rng, const Point& x,
                             int max_constraints = 4,
                             std::uint64_t max_pos = 4);

// Point supported on one fiber only.
Point random_single_fiber_point(Rng& rng, const std::string& fiber,
                                int max_transient = 4, int max_period = 3);

}  // namespace cantor
