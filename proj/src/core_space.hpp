#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

// Exact representation of the product space {0,1}^A, where A is a disjoint
// union of countable fibers.  Points are finitely described: finitely many
// fibers carry an eventually periodic bit word, everything else is zero.
// Cylinders constrain finitely many coordinates.  Both are closed under the
// shift, which drops the first symbol of every fiber.

namespace cantor {

// Fiber labels are arbitrary tokens: nonempty, printable ASCII, no
// whitespace and none of the grammar delimiters : = , ; | { } < >
bool valid_fiber_label(const std::string& token);

struct Coordinate {
  std::string fiber;
  std::uint64_t pos = 1;  // 1-based

  auto operator<=>(const Coordinate&) const = default;
};

// transient followed by period repeated forever: t . p . p . p ...
// Canonical form: period is primitive, and no absorption step applies
// (transient empty, or its last bit differs from the period's last bit).
struct FiberWord {
  std::string transient;  // '0'/'1' chars, possibly empty
  std::string period;     // '0'/'1' chars, nonempty

  auto operator<=>(const FiberWord&) const = default;
};

// Reduce to the unique canonical form: shrink the period to its primitive
// root, then while the transient's last bit equals the period's last bit,
// rotate the period right and drop that transient bit.
FiberWord canonical_word(std::string transient, std::string period);

bool is_zero_word(const FiberWord& w);

int word_eval(const FiberWord& w, std::uint64_t pos);

class Point {
 public:
  Point() = default;  // the all-zero point

  // Canonicalizes every word and drops all-zero fibers.  Throws
  // std::invalid_argument on a bad fiber label or an empty period.
  static Point from_words(const std::map<std::string, FiberWord>& raw);

  const std::map<std::string, FiberWord>& fibers() const { return fibers_; }
  bool is_zero() const { return fibers_.empty(); }

  auto operator<=>(const Point&) const = default;

 private:
  std::map<std::string, FiberWord> fibers_;
};

int eval(const Point& p, const Coordinate& c);

// q with eval(q, (f,i)) = eval(p, (f,i+m)) for every coordinate.
Point shift(const Point& p, std::uint64_t m);

// Least n >= 1 with shift(p, n) == p, if p is periodic (iff every stored
// word has an empty transient); nullopt otherwise.
std::optional<std::uint64_t> primitive_period(const Point& p);

struct OrbitResult {
  std::vector<Point> points;  // p, shift(p,1), ... no repeats
  bool cycle_closed = false;  // the next shift would revisit a listed point
};

// Forward orbit, stopping at the first repeat or after `bound` shift steps.
OrbitResult orbit(const Point& p, std::uint64_t bound);

// A basic open set: finitely many coordinate -> bit constraints (empty set
// is the whole space), or the distinguished VOID value for the empty
// region.  VOID only arises as an operation result.
class Cylinder {
 public:
  Cylinder() = default;  // whole space

  static Cylinder whole() { return Cylinder{}; }
  static Cylinder void_set();

  // Throws std::invalid_argument on a duplicate coordinate, a bad fiber
  // label, a position of 0, or a bit outside {0,1}.
  static Cylinder from_constraints(
      const std::vector<std::pair<Coordinate, int>>& constraints);

  bool is_void() const { return void_; }
  bool is_whole() const { return !void_ && constraints_.empty(); }
  const std::map<Coordinate, int>& constraints() const { return constraints_; }

  auto operator<=>(const Cylinder&) const = default;

 private:
  bool void_ = false;
  std::map<Coordinate, int> constraints_;
};

// Union of the constraint sets; VOID on any conflict.  VOID absorbs.
Cylinder intersect(const Cylinder& a, const Cylinder& b);

// sigma^{-m}: every constraint moves m positions deeper.  m >= 1, input
// not VOID.
Cylinder preimage(const Cylinder& c, std::uint64_t m);

// sigma^m: constraints at positions <= m are dropped, the rest move m
// positions up.  Exact image: the shift is onto and coordinates are
// independent.  m >= 1, input not VOID.
Cylinder image(const Cylinder& c, std::uint64_t m);

struct NormalForm {
  std::set<std::string> fibers;  // S: every fiber the cylinder mentions
  std::uint64_t k = 1;           // maximum constrained position
  Cylinder cylinder;             // extension of the input to all of K(S,k),
                                 // unconstrained coordinates filled with 0
};

// Rewrite a cylinder over the block basis K(S,k) = S x {1..k}.  The result
// is included in the input.  A whole-space input needs `designated` to
// anchor S and yields K({designated},1) with bit 0.  Input must not be VOID.
NormalForm normalize(const Cylinder& c,
                     const std::optional<std::string>& designated = {});

// Point membership; false for VOID.
bool member(const Point& p, const Cylinder& c);

// inner included in outer, decided on constraint sets.  VOID is included
// in everything and includes only VOID.
bool subset_of(const Cylinder& inner, const Cylinder& outer);

// The member of a non-VOID cylinder that is zero at every unconstrained
// coordinate.
Point zero_fill(const Cylinder& c);

}  // namespace cantor
