#include "sensitivity.hpp"

#include <stdexcept>

#include "chaos_witness.hpp"

namespace cantor {

namespace {

std::vector<Point> orbit_points(const Point& p) {
  OrbitResult res = orbit(p, 64);
  if (!res.cycle_closed)
    throw std::logic_error("reference orbit did not close");
  return res.points;
}

bool avoids_orbit(const Point& x, const std::vector<Point>& orbit_pts,
                  const UIndex& eta) {
  for (const Point& q : orbit_pts)
    if (member(x, ball(eta, q))) return false;
  return true;
}

}  // namespace

ReferencePair reference_pair(const SensitivityConfig& cfg) {
  if (!valid_fiber_label(cfg.designated))
    throw std::invalid_argument("bad fiber label: '" + cfg.designated + "'");
  ReferencePair pair;
  pair.r = Point{};
  pair.s = Point::from_words({{cfg.designated, FiberWord{"", "10"}}});

  std::vector<Point> all = orbit_points(pair.r);
  const std::vector<Point> s_orbit = orbit_points(pair.s);
  all.insert(all.end(), s_orbit.begin(), s_orbit.end());

  // Separate every pair from the joint orbit set and take the join, so
  // each orbit point owns an eta-ball disjoint from all the others.
  bool have = false;
  UIndex eta{{cfg.designated}, 1};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      UIndex sep = separating_index(all[i], all[j]);
      eta = have ? join(eta, sep) : sep;
      have = true;
    }
  }
  pair.eta = eta;
  return pair;
}

Point select_q(const Point& x, const ReferencePair& pair) {
  if (avoids_orbit(x, orbit_points(pair.r), pair.eta)) return pair.r;
  if (avoids_orbit(x, orbit_points(pair.s), pair.eta)) return pair.s;
  throw std::logic_error(
      "x met eta-balls of both reference orbits; they are disjoint");
}

UIndex sensitivity_index(const UIndex& eta) { return eta; }

std::vector<Cylinder> backward_chain(const Point& q, std::uint64_t n,
                                     const UIndex& alpha) {
  if (n == 0) throw std::invalid_argument("chain length must be >= 1");
  auto period = primitive_period(q);
  if (!period) throw std::invalid_argument("q must be periodic");

  auto q_at = [&](std::uint64_t j) { return shift(q, j % *period); };

  std::vector<Cylinder> chain;
  chain.push_back(ball(alpha, q_at(n)));
  for (std::uint64_t i = 1; i <= n; ++i) {
    Cylinder next =
        intersect(preimage(chain.back(), 1), ball(alpha, q_at(n - i)));
    if (next.is_void())
      throw std::logic_error("chain link came out empty; q_{n-i} is in it");
    chain.push_back(next);
  }
  return chain;
}

SensitivityWitness sensitivity_witness(const Point& x, const Cylinder& nbhd,
                                       const SensitivityConfig& cfg) {
  if (!member(x, nbhd))
    throw std::invalid_argument("x must lie in its neighborhood");

  ReferencePair pair = reference_pair(cfg);
  SensitivityWitness w;
  w.alpha = sensitivity_index(pair.eta);
  w.q = select_q(x, pair);

  Cylinder u = intersect(nbhd, ball(w.alpha, x));
  w.p = periodic_point_in(u, cfg.designated);
  w.n = primitive_period(w.p).value();
  w.chain = backward_chain(w.q, w.n, w.alpha);

  TransitivityWitness tw =
      transitivity_witness(u, w.chain.back(), cfg.designated);
  w.k = tw.k;
  w.y = zero_fill(tw.w);

  w.a = (w.k + w.n - 1) / w.n;  // minimal a with a*n >= k
  w.b = w.a * w.n - w.k;
  w.m = w.a * w.n;

  // shift^m(y) lands in the alpha-ball of a reference orbit point, which
  // is disjoint from the class of x and of p.  So when x's orbit tracks
  // y's at time m it has left p's class, and otherwise it has left y's.
  w.chosen = relates(w.alpha, shift(x, w.m), shift(w.y, w.m))
                 ? SensitivityWitness::Choice::p
                 : SensitivityWitness::Choice::y;
  return w;
}

bool verify_sensitive(const Point& x, const SensitivityWitness& w,
                      const Cylinder& nbhd) {
  const Point& chosen = w.chosen_point();
  if (!member(chosen, nbhd)) return false;
  if (chosen == x) return false;
  return !relates(w.alpha, shift(x, w.m), shift(chosen, w.m));
}

}  // namespace cantor
