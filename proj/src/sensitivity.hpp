#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core_space.hpp"
#include "uniformity.hpp"

// The constructive sensitive-dependence pipeline.  A fixed pair of
// disjoint periodic orbits determines a single separation index alpha
// before any input arrives; for every point x and neighborhood N_x the
// pipeline then produces a nearby point whose orbit leaves x's
// alpha-class at an explicit time m, and a verifier re-checks the claim
// by evaluation alone.

namespace cantor {

struct SensitivityConfig {
  std::string designated = "a";  // fiber carrying the alternating orbit
};

struct ReferencePair {
  Point r;     // the zero point (fixed)
  Point s;     // alternating word on the designated fiber (period 2)
  UIndex eta;  // join of the separating indices over all pairs from the
               // two orbits; eta-balls separate O(r) from O(s)
};

ReferencePair reference_pair(const SensitivityConfig& cfg);

// Whichever of r, s has every orbit-point ball (at eta) avoiding x; ties
// go to r.  One of them always qualifies because the eta-balls of the two
// orbits are disjoint.
Point select_q(const Point& x, const ReferencePair& pair);

// The separation index handed to the rest of the pipeline.  Coordinate
// agreement is symmetric and transitive, so eta already serves: the
// intermediate indices the general argument introduces all collapse onto
// it, and the result never depends on x.
UIndex sensitivity_index(const UIndex& eta);

// Pullback chain along the orbit of a periodic q: W_0 = ball(alpha, q_n),
// W_i = shift^{-1}(W_{i-1}) n ball(alpha, q_{n-i}).  Every link is
// nonempty (q_{n-i} lies in W_i), maps into its predecessor, and stays
// inside its ball.  Returns W_0..W_n.
std::vector<Cylinder> backward_chain(const Point& q, std::uint64_t n,
                                     const UIndex& alpha);

struct SensitivityWitness {
  UIndex alpha;
  Point q;                      // reference orbit avoiding x's classes
  std::uint64_t n = 1;          // primitive period of p
  std::vector<Cylinder> chain;  // W_0..W_n
  std::uint64_t k = 1;          // transitivity exponent into W_n
  std::uint64_t a = 1;          // minimal a with a*n >= k
  std::uint64_t b = 0;          // a*n - k, in 0..n-1
  std::uint64_t m = 1;          // separation time a*n
  Point y;                      // zero-fill of the transitivity cylinder
  Point p;                      // periodic point of U = N_x n ball(alpha,x)

  enum class Choice { y, p };
  Choice chosen = Choice::y;

  const Point& chosen_point() const { return chosen == Choice::y ? y : p; }
};

// Requires member(x, nbhd).  The returned alpha depends only on cfg.
SensitivityWitness sensitivity_witness(const Point& x, const Cylinder& nbhd,
                                       const SensitivityConfig& cfg);

// Re-checks the witness by evaluation only: the chosen point lies in the
// neighborhood, differs from x, and its orbit is alpha-separated from x's
// at time m.  Trusts nothing from the generator.
bool verify_sensitive(const Point& x, const SensitivityWitness& w,
                      const Cylinder& nbhd);

}  // namespace cantor
