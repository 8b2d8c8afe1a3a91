#include "chaos_witness.hpp"

#include <stdexcept>

namespace cantor {

TransitivityWitness transitivity_witness(const Cylinder& u, const Cylinder& v,
                                         const std::string& designated) {
  if (u.is_void() || v.is_void())
    throw std::invalid_argument("transitivity witness needs nonempty sets");
  NormalForm n1 = normalize(u, designated);
  NormalForm n2 = normalize(v, designated);

  std::set<std::string> fibers = n1.fibers;
  fibers.insert(n2.fibers.begin(), n2.fibers.end());
  const std::uint64_t depth = n1.k + n2.k;

  std::vector<std::pair<Coordinate, int>> constraints;
  for (const auto& fiber : fibers) {
    for (std::uint64_t i = 1; i <= depth; ++i) {
      int bit = 0;
      if (n1.fibers.count(fiber) && i <= n1.k) {
        bit = n1.cylinder.constraints().at({fiber, i});
      } else if (n2.fibers.count(fiber) && i > n1.k && i - n1.k <= n2.k) {
        bit = n2.cylinder.constraints().at({fiber, i - n1.k});
      }
      constraints.push_back({{fiber, i}, bit});
    }
  }
  return TransitivityWitness{n1.k, Cylinder::from_constraints(constraints)};
}

Point periodic_point_in(const Cylinder& u, const std::string& designated) {
  if (u.is_void())
    throw std::invalid_argument("periodic point needs a nonempty set");
  NormalForm nf = normalize(u, designated);
  std::map<std::string, FiberWord> words;
  for (const auto& fiber : nf.fibers) {
    std::string period;
    for (std::uint64_t i = 1; i <= nf.k; ++i)
      period += static_cast<char>('0' +
                                  nf.cylinder.constraints().at({fiber, i}));
    words[fiber] = FiberWord{"", period};
  }
  return Point::from_words(words);
}

SharedOrbitWitness shared_orbit_witness(const Cylinder& u, const Cylinder& v,
                                        const std::string& designated) {
  if (u.is_void() || v.is_void())
    throw std::invalid_argument("shared orbit needs nonempty sets");
  const std::uint64_t k = transitivity_witness(u, v, designated).k;
  Cylinder w = intersect(preimage(v, k), u);
  if (w.is_void())
    throw std::logic_error(
        "shift^{-k}(V) n U came out empty; the witness cylinder always "
        "sits inside it");
  return SharedOrbitWitness{periodic_point_in(w, designated), 0, k};
}

}  // namespace cantor
