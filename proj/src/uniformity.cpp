#include "uniformity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sampling.hpp"
#include "text.hpp"

namespace cantor {

UIndex make_index(std::set<std::string> fibers, std::uint64_t k) {
  if (fibers.empty())
    throw std::invalid_argument("index needs a nonempty fiber set");
  if (k == 0) throw std::invalid_argument("index needs k >= 1");
  for (const auto& fiber : fibers)
    if (!valid_fiber_label(fiber))
      throw std::invalid_argument("bad fiber label: '" + fiber + "'");
  return UIndex{std::move(fibers), k};
}

Cylinder ball(const UIndex& idx, const Point& p) {
  std::vector<std::pair<Coordinate, int>> constraints;
  for (const auto& fiber : idx.fibers)
    for (std::uint64_t i = 1; i <= idx.k; ++i)
      constraints.push_back({{fiber, i}, eval(p, {fiber, i})});
  return Cylinder::from_constraints(constraints);
}

bool relates(const UIndex& idx, const Point& p, const Point& q) {
  for (const auto& fiber : idx.fibers)
    for (std::uint64_t i = 1; i <= idx.k; ++i)
      if (eval(p, {fiber, i}) != eval(q, {fiber, i})) return false;
  return true;
}

UIndex join(const UIndex& a, const UIndex& b) {
  std::set<std::string> fibers = a.fibers;
  fibers.insert(b.fibers.begin(), b.fibers.end());
  return UIndex{std::move(fibers), std::max(a.k, b.k)};
}

bool refines(const UIndex& a, const UIndex& b) {
  return a.k >= b.k &&
         std::includes(a.fibers.begin(), a.fibers.end(), b.fibers.begin(),
                       b.fibers.end());
}

UIndex separating_index(const Point& p, const Point& q) {
  static const FiberWord zero{"", "0"};
  std::set<std::string> fibers;
  for (const auto& [fiber, word] : p.fibers()) fibers.insert(fiber);
  for (const auto& [fiber, word] : q.fibers()) fibers.insert(fiber);
  for (const auto& fiber : fibers) {
    auto ip = p.fibers().find(fiber);
    auto iq = q.fibers().find(fiber);
    const FiberWord& wp = ip == p.fibers().end() ? zero : ip->second;
    const FiberWord& wq = iq == q.fibers().end() ? zero : iq->second;
    // Eventually periodic words that agree this far agree everywhere.
    const std::uint64_t horizon =
        wp.transient.size() + wq.transient.size() +
        std::lcm(wp.period.size(), wq.period.size());
    for (std::uint64_t i = 1; i <= horizon; ++i)
      if (word_eval(wp, i) != word_eval(wq, i)) return UIndex{{fiber}, i};
  }
  throw std::invalid_argument("equal points cannot be separated");
}

namespace {

std::string describe(const UIndex& idx, const Point& x) {
  return print_index(idx) + " x=" + print_point(x);
}

void record(AxiomReport& report, bool ok, const std::string& detail) {
  ++report.samples;
  if (!ok && report.failures.size() < 8) report.failures.push_back(detail);
}

}  // namespace

std::vector<AxiomReport> axiom_checks(const SampleSpec& spec) {
  return axiom_checks(spec, [](const UIndex& a, const UIndex& b) {
    return refines(a, b);
  });
}

std::vector<AxiomReport> axiom_checks(const SampleSpec& spec,
                                      const RefinesFn& order) {
  Rng rng(spec.seed);
  auto fresh = [](const char* id) {
    AxiomReport r;
    r.id = id;
    return r;
  };
  AxiomReport uns1 = fresh("UNS1"), uns2 = fresh("UNS2"),
              uns3 = fresh("UNS3"), uns4 = fresh("UNS4"),
              uns5 = fresh("UNS5");
  AxiomReport ent1 = fresh("ENT1"), ent2 = fresh("ENT2"),
              ent3 = fresh("ENT3"), ent4 = fresh("ENT4"),
              ent5 = fresh("ENT5");

  for (std::size_t i = 0; i < spec.instances; ++i) {
    UIndex i1 = random_index(rng);
    UIndex i2 = rng.chance(1, 2) ? join(i1, random_index(rng))
                                 : random_index(rng);
    Point x = random_point(rng);
    Point y = rng.chance(1, 2) ? random_point(rng) : zero_fill(ball(i1, x));
    Point z = rng.chance(1, 2) ? random_point(rng) : zero_fill(ball(i1, y));

    // UNS1 / ENT1: every point sits in its own ball; the diagonal is in
    // every entourage.
    record(uns1, member(x, ball(i1, x)), describe(i1, x));
    record(ent1, relates(i1, x, x), describe(i1, x));

    // UNS2: the join is an upper bound of both arguments.
    record(uns2, order(join(i1, i2), i1) && order(join(i1, i2), i2),
           print_index(i1) + " join " + print_index(i2));

    // UNS3 / ENT5: a finer index gives smaller balls and a smaller
    // entourage.  Checked in both orientations of the sampled pair.
    for (const auto& [fine, coarse] :
         {std::pair{i1, i2}, std::pair{i2, i1}}) {
      if (order(fine, coarse)) {
        record(uns3, subset_of(ball(fine, x), ball(coarse, x)),
               print_index(fine) + " vs " + print_index(coarse) +
                   " x=" + print_point(x));
        record(ent5, !relates(fine, x, y) || relates(coarse, x, y),
               print_index(fine) + " vs " + print_index(coarse));
      }
    }

    // UNS4 / ENT2: coordinate agreement is symmetric, so the witness index
    // is the index itself and entourages equal their inverses.
    record(uns4, !relates(i1, y, x) || relates(i1, x, y), describe(i1, x));
    record(ent2, relates(i1, x, y) == relates(i1, y, x), describe(i1, x));

    // UNS5 / ENT3: agreement is transitive, so V o V stays inside V.
    bool chain = !(relates(i1, x, y) && relates(i1, y, z)) ||
                 relates(i1, x, z);
    record(uns5, chain, describe(i1, x));
    record(ent3, chain, describe(i1, x));

    // ENT4: the join realizes intersection closure.
    record(ent4,
           !relates(join(i1, i2), x, y) ||
               (relates(i1, x, y) && relates(i2, x, y)),
           print_index(i1) + " ^ " + print_index(i2));
  }
  return {uns1, uns2, uns3, uns4, uns5, ent1, ent2, ent3, ent4, ent5};
}

AxiomReport separation_check(std::size_t pairs, std::uint64_t seed) {
  Rng rng(seed);
  AxiomReport report;
  report.id = "SEP";
  for (std::size_t i = 0; i < pairs; ++i) {
    Point p = random_point(rng);
    Point q = random_point(rng);
    for (int attempt = 0; attempt < 64 && p == q; ++attempt)
      q = random_point(rng);
    if (p == q) continue;  // astronomically unlikely; just skip the sample
    UIndex idx = separating_index(p, q);
    bool disjoint = intersect(ball(idx, p), ball(idx, q)).is_void();
    record(report, disjoint,
           print_point(p) + " / " + print_point(q) + " -> " +
               print_index(idx));
  }
  return report;
}

}  // namespace cantor
