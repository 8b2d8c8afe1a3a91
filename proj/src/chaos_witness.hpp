#pragma once

#include <cstdint>
#include <string>

#include "core_space.hpp"

// Witness-producing constructions for the shift: a cylinder that maps one
// open set into another after k steps, a periodic point inside any
// cylinder, and a periodic orbit visiting two given cylinders.  Every
// witness carries enough data to be re-verified by plain evaluation.

namespace cantor {

struct TransitivityWitness {
  std::uint64_t k = 1;  // shift exponent, >= 1
  Cylinder w;           // w inside U, image(w, k) inside V
};

struct SharedOrbitWitness {
  Point p;                 // periodic
  std::uint64_t t_u = 0;   // shift(p, t_u) in U
  std::uint64_t t_v = 0;   // shift(p, t_v) in V
};

// Normalize U and V to blocks (S1,k1) and (S2,k2), then lay the two
// patterns side by side on K(S1 u S2, k1+k2): U's bits on positions
// 1..k1, V's bits on positions k1+1..k1+k2 of its own fibers, zero
// elsewhere.  The designated fiber only anchors a whole-space input.
TransitivityWitness transitivity_witness(const Cylinder& u, const Cylinder& v,
                                         const std::string& designated = "a");

// The point that repeats U's normalized block forever: in U, and fixed by
// shift^k for the block depth k.
Point periodic_point_in(const Cylinder& u, const std::string& designated = "a");

// Periodic orbit through U and, k steps later, V: the periodic point of
// shift^{-k}(V) n U, which the transitivity construction proves nonempty.
SharedOrbitWitness shared_orbit_witness(const Cylinder& u, const Cylinder& v,
                                        const std::string& designated = "a");

}  // namespace cantor
