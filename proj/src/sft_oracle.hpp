#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core_space.hpp"

// Brute-force ground truth on binary (and small-alphabet) subshifts of
// finite type, plus the add-one odometer.  Words are strings of digit
// characters '0'..'9'.  Everything here is exhaustive and desk-scale: it
// exists to cross-check the witness constructions on systems small enough
// to enumerate.

namespace cantor {

struct SftSystem {
  int alphabet = 2;
  std::vector<std::string> forbidden;  // sorted by (length, lex), deduped
};

// Validates: alphabet in 2..10, forbidden words nonempty with symbols in
// range.  Throws std::invalid_argument.
SftSystem make_sft(int alphabet, std::vector<std::string> forbidden);

std::size_t max_forbidden_len(const SftSystem& sys);

// No forbidden factor occurs in `word`.
bool word_allowed(const SftSystem& sys, const std::string& word);

// The infinite repetition of `word` avoids every forbidden factor.
bool periodic_word_allowed(const SftSystem& sys, const std::string& word);

// All allowed words of length n, lexicographic.
std::vector<std::string> allowed_words(const SftSystem& sys, std::uint64_t n);

struct TransitivityVerdict {
  bool transitive = false;
  bool empty_essential = false;  // no window survives trimming
};

// Decide transitivity on the de Bruijn-style graph over allowed windows of
// length `order` (order >= max forbidden length - 1, and >= 1): trim
// vertices with no in- or no out-edges until none remain, then ask for
// strong connectivity of what is left.
TransitivityVerdict transitive_verdict(const SftSystem& sys,
                                       std::uint64_t order);

struct PeriodicCount {
  std::uint64_t count = 0;                   // words fixed by shift^n
  std::vector<std::string> representatives;  // first few, lexicographic
};

// Length-n words whose periodic extension is allowed.
PeriodicCount periodic_points(const SftSystem& sys, std::uint64_t n,
                              std::size_t max_representatives = 16);

// Trace of the n-th power of the symbol transfer matrix; an independent
// count of shift^n-fixed points.  Requires max forbidden length <= 2.
std::uint64_t transfer_matrix_trace(const SftSystem& sys, std::uint64_t n);

struct SharedOrbitSearch {
  bool found = false;
  std::string word;          // periodic word whose orbit hits both cylinders
  std::uint64_t time_u = 0;  // shift steps until the orbit enters [u]
  std::uint64_t time_v = 0;
};

// Exhaustive search over periodic words of length <= period_bound for one
// whose orbit meets cylinder [u] and cylinder [v].
SharedOrbitSearch find_shared_periodic_orbit(const SftSystem& sys,
                                             const std::string& u,
                                             const std::string& v,
                                             std::uint64_t period_bound);

struct OracleReport {
  bool transitive = false;
  bool periodic_dense_to_depth = false;
  bool def7_to_depth = false;  // every pair of allowed cylinders shares a
                               // periodic orbit
  std::uint64_t depth = 0;
  std::uint64_t period_bound = 0;
  bool empty_subshift = false;  // no allowed word to depth; quantifications
                                // are vacuous
  bool discrepancy = false;     // the biconditional failed
  std::optional<std::pair<std::string, std::string>> counterexample;
};

// Computes all three properties independently and checks
// def7 <=> (transitive and dense periodic points).  Open sets are read as
// cylinders of allowed words within the subshift; bounds are explicit
// report fields.
OracleReport crosscheck(const SftSystem& sys, std::uint64_t depth,
                        std::uint64_t period_bound);

// Every system whose forbidden set is a subset of the words of length
// exactly word_len, with its report.  Deterministic order (subset mask).
std::vector<std::pair<SftSystem, OracleReport>> sweep(
    std::uint64_t word_len, std::uint64_t depth, std::uint64_t period_bound);

// Add one with carry on the given fiber, least-significant bit first; the
// all-ones word maps to zero.  Other fibers are untouched.
Point odometer_step(const Point& p, const std::string& fiber);

// Subtract one with borrow; inverse of odometer_step (zero maps to the
// all-ones word).
Point odometer_inverse(const Point& p, const std::string& fiber);

struct OdometerReport {
  std::string fiber;
  std::uint64_t depth = 0;
  std::uint64_t prefixes_expected = 0;
  std::uint64_t prefixes_visited = 0;
  bool transitive_to_depth = false;  // the orbit of zero visits every
                                     // depth-d cylinder pattern
  std::size_t samples = 0;
  std::uint64_t period_bound = 0;
  bool periodic_point_found = false;
};

struct IndependenceReport {
  OracleReport rotation_analogue;  // forbid {01,10}: dense but not
                                   // transitive
  bool rotation_holds = false;
  OdometerReport odometer;  // transitive to depth but no periodic points
  bool odometer_holds = false;

  bool holds() const { return rotation_holds && odometer_holds; }
};

// The two halves of the independence demonstration, in exact discrete
// form: a two-fixed-point system with dense periodic points and no
// transitivity, and the odometer with full cylinder transitivity and no
// periodic points among sampled inputs.
IndependenceReport remark_demos(std::uint64_t depth,
                                std::uint64_t period_bound,
                                std::size_t samples, std::uint64_t seed);

}  // namespace cantor
