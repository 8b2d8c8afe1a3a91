#include "sampling.hpp"

namespace cantor {

const std::vector<std::string>& fiber_pool() {
  static const std::vector<std::string> pool = {"a", "b", "c", "d"};
  return pool;
}

std::string random_bits(Rng& rng, std::size_t len) {
  std::string s(len, '0');
  for (char& c : s) c = static_cast<char>('0' + rng.bit());
  return s;
}

Point random_point(Rng& rng, int max_fibers, int max_transient,
                   int max_period) {
  const auto& pool = fiber_pool();
  std::map<std::string, FiberWord> words;
  const int count = static_cast<int>(rng.below(max_fibers + 1));
  for (int i = 0; i < count; ++i) {
    const std::string& fiber = pool[rng.below(pool.size())];
    FiberWord w{random_bits(rng, rng.below(max_transient + 1)),
                random_bits(rng, 1 + rng.below(max_period))};
    words[fiber] = w;  // collisions just overwrite
  }
  return Point::from_words(words);
}

Cylinder random_cylinder(Rng& rng, int max_fibers, std::uint64_t max_pos,
                         int max_constraints) {
  const auto& pool = fiber_pool();
  const int fibers = std::min<int>(max_fibers, static_cast<int>(pool.size()));
  std::map<Coordinate, int> constraints;
  const int count = static_cast<int>(rng.below(max_constraints + 1));
  for (int i = 0; i < count; ++i) {
    Coordinate coord{pool[rng.below(fibers)], 1 + rng.below(max_pos)};
    constraints.emplace(coord, rng.bit());  // keep first on collision
  }
  return Cylinder::from_constraints({constraints.begin(), constraints.end()});
}

UIndex random_index(Rng& rng, int max_fibers, std::uint64_t max_k) {
  const auto& pool = fiber_pool();
  const int fibers = std::min<int>(max_fibers, static_cast<int>(pool.size()));
  std::set<std::string> s;
  const int count = 1 + static_cast<int>(rng.below(fibers));
  for (int i = 0; i < count; ++i) s.insert(pool[rng.below(fibers)]);
  return make_index(std::move(s), 1 + rng.below(max_k));
}

Cylinder random_neighborhood(Rng& rng, const Point& x, int max_constraints,
                             std::uint64_t max_pos) {
  const auto& pool = fiber_pool();
  std::map<Coordinate, int> constraints;
  const int count = static_cast<int>(rng.below(max_constraints + 1));
  for (int i = 0; i < count; ++i) {
    Coordinate coord{pool[rng.below(pool.size())], 1 + rng.below(max_pos)};
    constraints.emplace(coord, eval(x, coord));
  }
  return Cylinder::from_constraints({constraints.begin(), constraints.end()});
}

Point random_single_fiber_point(Rng& rng, const std::string& fiber,
                                int max_transient, int max_period) {
  std::map<std::string, FiberWord> words;
  words[fiber] = FiberWord{random_bits(rng, rng.below(max_transient + 1)),
                           random_bits(rng, 1 + rng.below(max_period))};
  return Point::from_words(words);
}

}  // namespace cantor
