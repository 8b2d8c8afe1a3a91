#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "core_space.hpp"

// The coordinate-generated uniformity on the space: an index (S,k) relates
// two points when they agree on every coordinate of the block
// K(S,k) = S x {1..k}.  Each relation is an equivalence, its classes are
// the balls, and the indices form a directed order under refinement.

namespace cantor {

struct UIndex {
  std::set<std::string> fibers;  // S, nonempty
  std::uint64_t k = 1;           // k >= 1

  auto operator<=>(const UIndex&) const = default;
};

// Validating constructor; throws std::invalid_argument.
UIndex make_index(std::set<std::string> fibers, std::uint64_t k);

// The ball V_(S,k)(p): the cylinder pinning p's bits on K(S,k).
Cylinder ball(const UIndex& idx, const Point& p);

// p and q agree on K(S,k); same as member(q, ball(idx, p)).
bool relates(const UIndex& idx, const Point& p, const Point& q);

// Componentwise upper bound: (S1 u S2, max(k1,k2)).
UIndex join(const UIndex& a, const UIndex& b);

// a refines b when S_a contains S_b and k_a >= k_b; then every a-ball is
// inside the corresponding b-ball.
bool refines(const UIndex& a, const UIndex& b);

// Index of the least coordinate (fiber lexicographic, then position) where
// two distinct points differ: ({fiber}, pos).  The two balls at that index
// are disjoint.  Throws std::invalid_argument on equal points.
UIndex separating_index(const Point& p, const Point& q);

struct AxiomReport {
  std::string id;                     // UNS1..UNS5, ENT1..ENT5, SEP
  std::size_t samples = 0;
  std::vector<std::string> failures;  // counterexample descriptions

  bool pass() const { return failures.empty(); }
};

struct SampleSpec {
  std::uint64_t seed = 0;
  std::size_t instances = 1000;
};

// Sampled checks of the five neighborhood-system axioms and of the
// entourage laws (diagonal, symmetry, transitivity as V o V inside U,
// intersection via join, base monotonicity).  All are theorems for this
// index family, so every report should come back clean.
std::vector<AxiomReport> axiom_checks(const SampleSpec& spec);

using RefinesFn = std::function<bool(const UIndex&, const UIndex&)>;

// Harness entry that lets tests swap the order predicate (a broken order
// must surface as UNS3 failures).
std::vector<AxiomReport> axiom_checks(const SampleSpec& spec,
                                      const RefinesFn& order);

// Hausdorff separation: sampled distinct point pairs get disjoint balls
// from separating_index.
AxiomReport separation_check(std::size_t pairs, std::uint64_t seed);

}  // namespace cantor
