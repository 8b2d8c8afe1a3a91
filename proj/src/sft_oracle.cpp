#include "sft_oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "sampling.hpp"

namespace cantor {

namespace {

bool word_sorted_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string rotate_left_word(const std::string& s, std::uint64_t by) {
  if (s.empty()) return s;
  by %= s.size();
  return s.substr(by) + s.substr(0, by);
}

// Prefix of length `len` of the infinite repetition of `word`.
std::string repeat_to(const std::string& word, std::size_t len) {
  std::string out;
  out.reserve(len);
  while (out.size() < len) out += word;
  out.resize(len);
  return out;
}

}  // namespace

SftSystem make_sft(int alphabet, std::vector<std::string> forbidden) {
  if (alphabet < 2 || alphabet > 10)
    throw std::invalid_argument("alphabet size must be between 2 and 10");
  for (const auto& word : forbidden) {
    if (word.empty())
      throw std::invalid_argument("forbidden words must be nonempty");
    for (char c : word)
      if (c < '0' || c >= static_cast<char>('0' + alphabet))
        throw std::invalid_argument("symbol '" + std::string(1, c) +
                                    "' outside alphabet of size " +
                                    std::to_string(alphabet));
  }
  std::sort(forbidden.begin(), forbidden.end(), word_sorted_less);
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
  return SftSystem{alphabet, std::move(forbidden)};
}

std::size_t max_forbidden_len(const SftSystem& sys) {
  std::size_t n = 0;
  for (const auto& word : sys.forbidden) n = std::max(n, word.size());
  return n;
}

bool word_allowed(const SftSystem& sys, const std::string& word) {
  for (const auto& f : sys.forbidden)
    if (word.find(f) != std::string::npos) return false;
  return true;
}

bool periodic_word_allowed(const SftSystem& sys, const std::string& word) {
  if (word.empty()) return false;
  const std::size_t horizon =
      word.size() + std::max<std::size_t>(max_forbidden_len(sys), 1) - 1;
  return word_allowed(sys, repeat_to(word, horizon));
}

std::vector<std::string> allowed_words(const SftSystem& sys,
                                       std::uint64_t n) {
  std::vector<std::string> out;
  std::string current;
  // Lexicographic depth-first extension; a new symbol can only complete a
  // forbidden factor that ends at it.
  auto extend = [&](auto&& self) -> void {
    if (current.size() == n) {
      out.push_back(current);
      return;
    }
    for (int sym = 0; sym < sys.alphabet; ++sym) {
      current.push_back(static_cast<char>('0' + sym));
      bool ok = true;
      for (const auto& f : sys.forbidden) {
        if (f.size() > current.size()) continue;
        if (current.compare(current.size() - f.size(), f.size(), f) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

TransitivityVerdict transitive_verdict(const SftSystem& sys,
                                       std::uint64_t order) {
  if (order == 0) throw std::invalid_argument("window order must be >= 1");
  if (max_forbidden_len(sys) > order + 1)
    throw std::invalid_argument(
        "window order too small for the forbidden words");

  const std::vector<std::string> windows = allowed_words(sys, order);
  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < windows.size(); ++i) id[windows[i]] = i;

  const std::size_t count = windows.size();
  std::vector<std::vector<std::size_t>> out_edges(count), in_edges(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (int sym = 0; sym < sys.alphabet; ++sym) {
      std::string extended = windows[i] + static_cast<char>('0' + sym);
      if (!word_allowed(sys, extended)) continue;
      auto it = id.find(extended.substr(1));
      if (it == id.end()) continue;
      out_edges[i].push_back(it->second);
      in_edges[it->second].push_back(i);
    }
  }

  // Trim windows that cannot continue in both directions until stable.
  std::vector<bool> alive(count, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (!alive[i]) continue;
      auto live_any = [&](const std::vector<std::size_t>& v) {
        return std::any_of(v.begin(), v.end(),
                           [&](std::size_t j) { return alive[j]; });
      };
      if (!live_any(out_edges[i]) || !live_any(in_edges[i])) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  std::vector<std::size_t> essential;
  for (std::size_t i = 0; i < count; ++i)
    if (alive[i]) essential.push_back(i);
  if (essential.empty()) return TransitivityVerdict{false, true};

  auto reaches = [&](const std::vector<std::vector<std::size_t>>& edges) {
    std::vector<bool> seen(count, false);
    std::vector<std::size_t> stack{essential.front()};
    seen[essential.front()] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : edges[v]) {
        if (!alive[w] || seen[w]) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    return seen;
  };

  const std::vector<bool> forward = reaches(out_edges);
  const std::vector<bool> backward = reaches(in_edges);
  for (std::size_t i : essential)
    if (!forward[i] || !backward[i]) return TransitivityVerdict{false, false};
  return TransitivityVerdict{true, false};
}

PeriodicCount periodic_points(const SftSystem& sys, std::uint64_t n,
                              std::size_t max_representatives) {
  PeriodicCount result;
  for (const auto& word : allowed_words(sys, n)) {
    if (!periodic_word_allowed(sys, word)) continue;
    ++result.count;
    if (result.representatives.size() < max_representatives)
      result.representatives.push_back(word);
  }
  return result;
}

std::uint64_t transfer_matrix_trace(const SftSystem& sys, std::uint64_t n) {
  if (max_forbidden_len(sys) > 2)
    throw std::invalid_argument(
        "transfer-matrix trace needs forbidden words of length <= 2");
  if (n == 0) throw std::invalid_argument("trace needs n >= 1");

  const std::size_t a = static_cast<std::size_t>(sys.alphabet);
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  Matrix t(a, std::vector<std::uint64_t>(a, 0));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) {
      std::string edge{static_cast<char>('0' + i),
                       static_cast<char>('0' + j)};
      t[i][j] = word_allowed(sys, edge) ? 1 : 0;
    }

  Matrix power = t;
  for (std::uint64_t step = 1; step < n; ++step) {
    Matrix next(a, std::vector<std::uint64_t>(a, 0));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t l = 0; l < a; ++l) {
        if (power[i][l] == 0) continue;
        for (std::size_t j = 0; j < a; ++j)
          next[i][j] += power[i][l] * t[l][j];
      }
    power = std::move(next);
  }

  std::uint64_t trace = 0;
  for (std::size_t i = 0; i < a; ++i) trace += power[i][i];
  return trace;
}

namespace {

// Does the orbit point shift^time((word)^inf) start with w?
bool rotation_starts_with(const std::string& word, std::uint64_t time,
                          const std::string& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (word[(time + i) % word.size()] != w[i]) return false;
  return true;
}

std::vector<std::string> periodic_pool(const SftSystem& sys,
                                       std::uint64_t period_bound) {
  std::vector<std::string> pool;
  for (std::uint64_t len = 1; len <= period_bound; ++len)
    for (const auto& word : allowed_words(sys, len))
      if (periodic_word_allowed(sys, word)) pool.push_back(word);
  return pool;
}

}  // namespace

SharedOrbitSearch find_shared_periodic_orbit(const SftSystem& sys,
                                             const std::string& u,
                                             const std::string& v,
                                             std::uint64_t period_bound) {
  if (!word_allowed(sys, u) || !word_allowed(sys, v))
    throw std::invalid_argument("cylinder words must be allowed");
  for (const auto& word : periodic_pool(sys, period_bound)) {
    std::optional<std::uint64_t> hit_u, hit_v;
    for (std::uint64_t time = 0; time < word.size(); ++time) {
      if (!hit_u && rotation_starts_with(word, time, u)) hit_u = time;
      if (!hit_v && rotation_starts_with(word, time, v)) hit_v = time;
    }
    if (hit_u && hit_v) return SharedOrbitSearch{true, word, *hit_u, *hit_v};
  }
  return SharedOrbitSearch{};
}

OracleReport crosscheck(const SftSystem& sys, std::uint64_t depth,
                        std::uint64_t period_bound) {
  if (depth == 0 || period_bound == 0)
    throw std::invalid_argument("depth and period bound must be >= 1");

  OracleReport report;
  report.depth = depth;
  report.period_bound = period_bound;

  const std::size_t max_len = max_forbidden_len(sys);
  const std::uint64_t order = max_len <= 1 ? 1 : max_len - 1;
  TransitivityVerdict verdict = transitive_verdict(sys, order);
  report.transitive = verdict.transitive;

  std::vector<std::string> words;
  for (std::uint64_t len = 1; len <= depth; ++len)
    for (auto& w : allowed_words(sys, len)) words.push_back(std::move(w));

  if (words.empty()) {
    // Nothing to quantify over: the subshift is empty and all three
    // properties hold vacuously.
    report.empty_subshift = true;
    report.periodic_dense_to_depth = true;
    report.def7_to_depth = true;
    report.discrepancy = false;
    return report;
  }

  const std::vector<std::string> pool = periodic_pool(sys, period_bound);

  // For each cylinder word, the set of periodic words whose orbit enters
  // it.  The pool is closed under rotation, so a nonempty set also means a
  // periodic point starts with the word.
  std::vector<std::vector<bool>> enters(words.size(),
                                        std::vector<bool>(pool.size(), false));
  std::unordered_map<std::string, std::size_t> word_id;
  for (std::size_t i = 0; i < words.size(); ++i) word_id[words[i]] = i;
  for (std::size_t pi = 0; pi < pool.size(); ++pi) {
    const std::string& word = pool[pi];
    for (std::uint64_t time = 0; time < word.size(); ++time) {
      std::string prefix = repeat_to(rotate_left_word(word, time), depth);
      for (std::uint64_t len = 1; len <= depth; ++len) {
        auto it = word_id.find(prefix.substr(0, len));
        if (it != word_id.end()) enters[it->second][pi] = true;
      }
    }
  }

  auto any_entry = [&](std::size_t w) {
    return std::any_of(enters[w].begin(), enters[w].end(),
                       [](bool b) { return b; });
  };
  auto common_entry = [&](std::size_t wu, std::size_t wv) {
    for (std::size_t pi = 0; pi < pool.size(); ++pi)
      if (enters[wu][pi] && enters[wv][pi]) return true;
    return false;
  };

  report.periodic_dense_to_depth = true;
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (!any_entry(w)) {
      report.periodic_dense_to_depth = false;
      break;
    }
  }

  report.def7_to_depth = true;
  for (std::size_t wu = 0; wu < words.size() && report.def7_to_depth; ++wu) {
    for (std::size_t wv = wu; wv < words.size(); ++wv) {
      if (!common_entry(wu, wv)) {
        report.def7_to_depth = false;
        report.counterexample = {words[wu], words[wv]};
        break;
      }
    }
  }

  report.discrepancy =
      report.def7_to_depth !=
      (report.transitive && report.periodic_dense_to_depth);
  return report;
}

std::vector<std::pair<SftSystem, OracleReport>> sweep(
    std::uint64_t word_len, std::uint64_t depth, std::uint64_t period_bound) {
  if (word_len == 0 || word_len > 4)
    throw std::invalid_argument("sweep supports word lengths 1..4");
  const SftSystem full = make_sft(2, {});
  const std::vector<std::string> candidates = allowed_words(full, word_len);

  std::vector<std::pair<SftSystem, OracleReport>> results;
  for (std::uint64_t mask = 0; mask < (1ull << candidates.size()); ++mask) {
    std::vector<std::string> forbidden;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1ull << i)) forbidden.push_back(candidates[i]);
    SftSystem sys = make_sft(2, std::move(forbidden));
    OracleReport report = crosscheck(sys, depth, period_bound);
    results.push_back({std::move(sys), std::move(report)});
  }
  return results;
}

namespace {

FiberWord fiber_word_of(const Point& p, const std::string& fiber) {
  auto it = p.fibers().find(fiber);
  return it == p.fibers().end() ? FiberWord{"", "0"} : it->second;
}

Point with_fiber_word(const Point& p, const std::string& fiber,
                      const FiberWord& word) {
  std::map<std::string, FiberWord> words = p.fibers();
  words[fiber] = word;
  return Point::from_words(words);
}

}  // namespace

Point odometer_step(const Point& p, const std::string& fiber) {
  const FiberWord w = fiber_word_of(p, fiber);
  const std::uint64_t span = w.transient.size() + w.period.size();
  std::uint64_t first_zero = 0;  // 1-based; 0 = none
  for (std::uint64_t i = 1; i <= span; ++i) {
    if (word_eval(w, i) == 0) {
      first_zero = i;
      break;
    }
  }
  if (first_zero == 0)  // all ones: carry forever, wrap to zero
    return with_fiber_word(p, fiber, FiberWord{"", "0"});

  const std::uint64_t j = first_zero;
  std::string flipped(j - 1, '0');
  flipped += '1';
  if (j <= w.transient.size())
    return with_fiber_word(
        p, fiber, FiberWord{flipped + w.transient.substr(j), w.period});
  return with_fiber_word(
      p, fiber,
      FiberWord{flipped,
                rotate_left_word(w.period, j - w.transient.size())});
}

Point odometer_inverse(const Point& p, const std::string& fiber) {
  const FiberWord w = fiber_word_of(p, fiber);
  const std::uint64_t span = w.transient.size() + w.period.size();
  std::uint64_t first_one = 0;
  for (std::uint64_t i = 1; i <= span; ++i) {
    if (word_eval(w, i) == 1) {
      first_one = i;
      break;
    }
  }
  if (first_one == 0)  // zero borrows forever, wrap to all ones
    return with_fiber_word(p, fiber, FiberWord{"", "1"});

  const std::uint64_t j = first_one;
  std::string flipped(j - 1, '1');
  flipped += '0';
  if (j <= w.transient.size())
    return with_fiber_word(
        p, fiber, FiberWord{flipped + w.transient.substr(j), w.period});
  return with_fiber_word(
      p, fiber,
      FiberWord{flipped,
                rotate_left_word(w.period, j - w.transient.size())});
}

IndependenceReport remark_demos(std::uint64_t depth,
                                std::uint64_t period_bound,
                                std::size_t samples, std::uint64_t seed) {
  if (depth == 0 || depth > 20)
    throw std::invalid_argument("demo depth must be in 1..20");
  IndependenceReport report;

  // Half one: forbidding both mixed pairs leaves two fixed points, whose
  // cylinders are all of the space's allowed words -- dense periodic
  // points without transitivity.
  const SftSystem frozen = make_sft(2, {"01", "10"});
  report.rotation_analogue = crosscheck(frozen, depth, period_bound);
  report.rotation_holds = !report.rotation_analogue.transitive &&
                          report.rotation_analogue.periodic_dense_to_depth &&
                          !report.rotation_analogue.discrepancy;

  // Half two: the odometer visits every depth-d pattern from any start,
  // yet no sampled point returns to itself within the period bound.
  const std::string fiber = "a";
  OdometerReport odo;
  odo.fiber = fiber;
  odo.depth = depth;
  odo.prefixes_expected = 1ull << depth;
  std::set<std::uint64_t> visited;
  Point current;  // zero
  for (std::uint64_t step = 0; step < odo.prefixes_expected; ++step) {
    std::uint64_t pattern = 0;
    for (std::uint64_t i = 1; i <= depth; ++i)
      pattern |= static_cast<std::uint64_t>(eval(current, {fiber, i}))
                 << (i - 1);
    visited.insert(pattern);
    current = odometer_step(current, fiber);
  }
  odo.prefixes_visited = visited.size();
  odo.transitive_to_depth = visited.size() == odo.prefixes_expected;

  odo.samples = samples;
  odo.period_bound = period_bound;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Point x = random_single_fiber_point(rng, fiber);
    Point y = x;
    for (std::uint64_t n = 1; n <= period_bound; ++n) {
      y = odometer_step(y, fiber);
      if (y == x) {
        odo.periodic_point_found = true;
        break;
      }
    }
  }
  report.odometer = odo;
  report.odometer_holds =
      odo.transitive_to_depth && !odo.periodic_point_found;
  return report;
}

}  // namespace cantor
