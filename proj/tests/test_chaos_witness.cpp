#include <doctest.h>

#include <stdexcept>

#include "chaos_witness.hpp"
#include "sampling.hpp"
#include "text.hpp"

using namespace cantor;

namespace {

Point pt(const std::string& text) { return parse_point(text); }
Cylinder cyl(const std::string& text) { return parse_cylinder(text); }

void check_transitivity_contract(const Cylinder& u, const Cylinder& v,
                                 const TransitivityWitness& w) {
  CHECK(w.k >= 1);
  CHECK(!w.w.is_void());
  CHECK(subset_of(w.w, u));
  CHECK(subset_of(image(w.w, w.k), v));
}

}  // namespace

TEST_CASE("transitivity witness lays the two patterns side by side") {
  SUBCASE("distinct fibers") {
    Cylinder u = cyl("{a:1=1}"), v = cyl("{b:1=1}");
    TransitivityWitness w = transitivity_witness(u, v);
    CHECK(w.k == 1);
    CHECK(w.w == cyl("{a:1=1,a:2=0,b:1=0,b:2=1}"));
    check_transitivity_contract(u, v, w);
  }
  SUBCASE("same fiber") {
    Cylinder u = cyl("{a:1=1}"), v = cyl("{a:1=0}");
    TransitivityWitness w = transitivity_witness(u, v);
    CHECK(w.k == 1);
    CHECK(w.w == cyl("{a:1=1,a:2=0}"));
    check_transitivity_contract(u, v, w);
  }
  SUBCASE("identical inputs") {
    Cylinder u = cyl("{a:1=0}");
    TransitivityWitness w = transitivity_witness(u, u);
    CHECK(w.k == 1);
    CHECK(w.w == cyl("{a:1=0,a:2=0}"));
    check_transitivity_contract(u, u, w);
  }
  CHECK_THROWS_AS(transitivity_witness(Cylinder::void_set(), cyl("{}")),
                  std::invalid_argument);
}

TEST_CASE("transitivity witness contract holds across samples") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    Cylinder u = random_cylinder(rng), v = random_cylinder(rng);
    check_transitivity_contract(u, v, transitivity_witness(u, v));
  }
}

TEST_CASE("periodic point inside a cylinder") {
  SUBCASE("repeats the normalized block") {
    Point f = periodic_point_in(cyl("{a:1=1,a:2=0}"));
    CHECK(f == pt("a=|10"));
    CHECK(shift(f, 2) == f);
  }
  SUBCASE("whole space falls back to the designated fiber") {
    CHECK(periodic_point_in(cyl("{}"), "a") == Point{});
  }
  SUBCASE("zero-filled front") {
    Point f = periodic_point_in(cyl("{a:2=1}"));
    CHECK(f == pt("a=|01"));
    CHECK(primitive_period(f) == 2);
  }

  SUBCASE("membership and return across samples") {
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
      Cylinder u = random_cylinder(rng);
      Point f = periodic_point_in(u, "a");
      CHECK(member(f, u));
      CHECK(shift(f, normalize(u, "a").k) == f);
      CHECK(primitive_period(f).has_value());
    }
  }
}

TEST_CASE("shared periodic orbit through two cylinders") {
  SUBCASE("same fiber") {
    SharedOrbitWitness w = shared_orbit_witness(cyl("{a:1=1}"), cyl("{a:1=0}"));
    CHECK(w.p == pt("a=|10"));
    CHECK(w.t_u == 0);
    CHECK(w.t_v == 1);
  }
  SUBCASE("fixed point in both") {
    SharedOrbitWitness w = shared_orbit_witness(cyl("{a:1=0}"), cyl("{a:1=0}"));
    CHECK(w.p == Point{});
    CHECK(w.t_v == 1);
  }
  SUBCASE("two fibers interleave") {
    SharedOrbitWitness w = shared_orbit_witness(cyl("{a:1=1}"), cyl("{b:1=1}"));
    CHECK(w.p == pt("a=|10;b=|01"));
    CHECK(w.t_v == 1);
  }

  SUBCASE("orbit invariants and exponent extraction across samples") {
    Rng rng(43);
    for (int i = 0; i < 500; ++i) {
      Cylinder u = random_cylinder(rng), v = random_cylinder(rng);
      SharedOrbitWitness w = shared_orbit_witness(u, v);
      auto period = primitive_period(w.p);
      REQUIRE(period.has_value());
      CHECK(member(shift(w.p, w.t_u), u));
      CHECK(member(shift(w.p, w.t_v), v));
      // a positive exponent carrying U's orbit point into V
      std::uint64_t n = (w.t_v - w.t_u) % *period;
      if (n == 0) n = *period;
      CHECK(n >= 1);
      CHECK(member(shift(w.p, w.t_u + n), v));
    }
  }
}
