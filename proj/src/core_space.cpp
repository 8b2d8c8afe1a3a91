#include "core_space.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cantor {

namespace {

const std::string kReserved = ":=,;|{}<>";

bool valid_bits(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

std::string rotate_right(std::string s) {
  if (s.size() > 1) {
    s.insert(s.begin(), s.back());
    s.pop_back();
  }
  return s;
}

std::string rotate_left(const std::string& s, std::uint64_t by) {
  if (s.empty()) return s;
  by %= s.size();
  return s.substr(by) + s.substr(0, by);
}

// Smallest d dividing |p| such that p is the d-prefix repeated.
std::string primitive_root(const std::string& p) {
  const std::size_t n = p.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i)
      repeats = p[i] == p[i - d];
    if (repeats) return p.substr(0, d);
  }
  return p;
}

FiberWord shift_word(const FiberWord& w, std::uint64_t m) {
  if (m < w.transient.size())
    return canonical_word(w.transient.substr(m), w.period);
  return canonical_word("", rotate_left(w.period, m - w.transient.size()));
}

void check_word(const FiberWord& w) {
  if (w.period.empty())
    throw std::invalid_argument("fiber word needs a nonempty period");
  if (!valid_bits(w.transient) || !valid_bits(w.period))
    throw std::invalid_argument("fiber word bits must be 0 or 1");
}

}  // namespace

bool valid_fiber_label(const std::string& token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c <= ' ' || c > '~') return false;
    if (kReserved.find(c) != std::string::npos) return false;
  }
  return true;
}

FiberWord canonical_word(std::string transient, std::string period) {
  FiberWord w{std::move(transient), std::move(period)};
  check_word(w);
  w.period = primitive_root(w.period);
  while (!w.transient.empty() && w.transient.back() == w.period.back()) {
    w.period = rotate_right(w.period);
    w.transient.pop_back();
  }
  return w;
}

bool is_zero_word(const FiberWord& w) {
  return w.transient.empty() && w.period == "0";
}

int word_eval(const FiberWord& w, std::uint64_t pos) {
  if (pos == 0) throw std::invalid_argument("positions are 1-based");
  if (pos <= w.transient.size()) return w.transient[pos - 1] - '0';
  return w.period[(pos - w.transient.size() - 1) % w.period.size()] - '0';
}

Point Point::from_words(const std::map<std::string, FiberWord>& raw) {
  Point p;
  for (const auto& [fiber, word] : raw) {
    if (!valid_fiber_label(fiber))
      throw std::invalid_argument("bad fiber label: '" + fiber + "'");
    FiberWord canon = canonical_word(word.transient, word.period);
    if (!is_zero_word(canon)) p.fibers_.emplace(fiber, std::move(canon));
  }
  return p;
}

int eval(const Point& p, const Coordinate& c) {
  auto it = p.fibers().find(c.fiber);
  if (it == p.fibers().end()) {
    if (c.pos == 0) throw std::invalid_argument("positions are 1-based");
    return 0;
  }
  return word_eval(it->second, c.pos);
}

Point shift(const Point& p, std::uint64_t m) {
  std::map<std::string, FiberWord> shifted;
  for (const auto& [fiber, word] : p.fibers())
    shifted.emplace(fiber, shift_word(word, m));
  return Point::from_words(shifted);
}

std::optional<std::uint64_t> primitive_period(const Point& p) {
  std::uint64_t n = 1;
  for (const auto& [fiber, word] : p.fibers()) {
    if (!word.transient.empty()) return std::nullopt;
    n = std::lcm(n, static_cast<std::uint64_t>(word.period.size()));
  }
  return n;
}

OrbitResult orbit(const Point& p, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("orbit bound must be >= 1");
  OrbitResult result;
  std::set<Point> seen;
  result.points.push_back(p);
  seen.insert(p);
  Point current = p;
  for (std::uint64_t step = 0; step < bound; ++step) {
    current = shift(current, 1);
    if (seen.count(current)) {
      result.cycle_closed = true;
      break;
    }
    result.points.push_back(current);
    seen.insert(current);
  }
  return result;
}

Cylinder Cylinder::void_set() {
  Cylinder c;
  c.void_ = true;
  return c;
}

Cylinder Cylinder::from_constraints(
    const std::vector<std::pair<Coordinate, int>>& constraints) {
  Cylinder c;
  for (const auto& [coord, bit] : constraints) {
    if (!valid_fiber_label(coord.fiber))
      throw std::invalid_argument("bad fiber label: '" + coord.fiber + "'");
    if (coord.pos == 0) throw std::invalid_argument("positions are 1-based");
    if (bit != 0 && bit != 1)
      throw std::invalid_argument("constraint bit must be 0 or 1");
    if (!c.constraints_.emplace(coord, bit).second)
      throw std::invalid_argument("duplicate coordinate " + coord.fiber + ":" +
                                  std::to_string(coord.pos));
  }
  return c;
}

Cylinder intersect(const Cylinder& a, const Cylinder& b) {
  if (a.is_void() || b.is_void()) return Cylinder::void_set();
  std::map<Coordinate, int> merged = a.constraints();
  for (const auto& [coord, bit] : b.constraints()) {
    auto [it, inserted] = merged.emplace(coord, bit);
    if (!inserted && it->second != bit) return Cylinder::void_set();
  }
  return Cylinder::from_constraints({merged.begin(), merged.end()});
}

Cylinder preimage(const Cylinder& c, std::uint64_t m) {
  if (c.is_void()) throw std::invalid_argument("preimage of VOID");
  if (m == 0) throw std::invalid_argument("preimage needs m >= 1");
  std::vector<std::pair<Coordinate, int>> moved;
  for (const auto& [coord, bit] : c.constraints())
    moved.push_back({{coord.fiber, coord.pos + m}, bit});
  return Cylinder::from_constraints(moved);
}

Cylinder image(const Cylinder& c, std::uint64_t m) {
  if (c.is_void()) throw std::invalid_argument("image of VOID");
  if (m == 0) throw std::invalid_argument("image needs m >= 1");
  std::vector<std::pair<Coordinate, int>> moved;
  for (const auto& [coord, bit] : c.constraints())
    if (coord.pos > m) moved.push_back({{coord.fiber, coord.pos - m}, bit});
  return Cylinder::from_constraints(moved);
}

NormalForm normalize(const Cylinder& c,
                     const std::optional<std::string>& designated) {
  if (c.is_void()) throw std::invalid_argument("cannot normalize VOID");
  NormalForm nf;
  if (c.is_whole()) {
    if (!designated)
      throw std::invalid_argument(
          "whole-space cylinder needs a designated fiber to anchor S");
    if (!valid_fiber_label(*designated))
      throw std::invalid_argument("bad fiber label: '" + *designated + "'");
    nf.fibers = {*designated};
    nf.k = 1;
    nf.cylinder = Cylinder::from_constraints({{{*designated, 1}, 0}});
    return nf;
  }
  nf.k = 0;
  for (const auto& [coord, bit] : c.constraints()) {
    nf.fibers.insert(coord.fiber);
    nf.k = std::max(nf.k, coord.pos);
  }
  std::vector<std::pair<Coordinate, int>> filled;
  for (const auto& fiber : nf.fibers) {
    for (std::uint64_t i = 1; i <= nf.k; ++i) {
      auto it = c.constraints().find({fiber, i});
      filled.push_back({{fiber, i},
                        it == c.constraints().end() ? 0 : it->second});
    }
  }
  nf.cylinder = Cylinder::from_constraints(filled);
  return nf;
}

bool member(const Point& p, const Cylinder& c) {
  if (c.is_void()) return false;
  for (const auto& [coord, bit] : c.constraints())
    if (eval(p, coord) != bit) return false;
  return true;
}

bool subset_of(const Cylinder& inner, const Cylinder& outer) {
  if (inner.is_void()) return true;
  if (outer.is_void()) return false;
  for (const auto& [coord, bit] : outer.constraints()) {
    auto it = inner.constraints().find(coord);
    if (it == inner.constraints().end() || it->second != bit) return false;
  }
  return true;
}

Point zero_fill(const Cylinder& c) {
  if (c.is_void()) throw std::invalid_argument("VOID has no points");
  std::map<std::string, FiberWord> words;
  for (const auto& [coord, bit] : c.constraints()) {
    auto [it, inserted] = words.emplace(coord.fiber, FiberWord{"", "0"});
    std::string& t = it->second.transient;
    if (t.size() < coord.pos) t.resize(coord.pos, '0');
    t[coord.pos - 1] = static_cast<char>('0' + bit);
  }
  return Point::from_words(words);
}

}  // namespace cantor
