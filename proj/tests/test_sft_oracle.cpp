#include <doctest.h>

#include <stdexcept>

#include "sampling.hpp"
#include "sft_oracle.hpp"
#include "text.hpp"

using namespace cantor;

namespace {

const SftSystem kFull = make_sft(2, {});
const SftSystem kGoldenMean = make_sft(2, {"11"});
const SftSystem kFrozen = make_sft(2, {"01", "10"});

Point pt(const std::string& text) { return parse_point(text); }

}  // namespace

TEST_CASE("allowed word enumeration") {
  CHECK(allowed_words(kFull, 2) ==
        std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(allowed_words(kGoldenMean, 3) ==
        std::vector<std::string>{"000", "001", "010", "100", "101"});
  CHECK(allowed_words(kFrozen, 3) == std::vector<std::string>{"000", "111"});

  SUBCASE("counts follow the two-term recurrence") {
    // without 11, a word is a shorter word plus 0, or plus 01
    std::vector<std::size_t> counts;
    for (std::uint64_t n = 1; n <= 10; ++n)
      counts.push_back(allowed_words(kGoldenMean, n).size());
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 3);
    for (std::size_t i = 2; i < counts.size(); ++i)
      CHECK(counts[i] == counts[i - 1] + counts[i - 2]);
  }
}

TEST_CASE("transitivity on the window graph") {
  CHECK(transitive_verdict(kFull, 1).transitive);
  CHECK(transitive_verdict(kGoldenMean, 1).transitive);
  CHECK(!transitive_verdict(kFrozen, 1).transitive);
  CHECK(!transitive_verdict(kFrozen, 1).empty_essential);

  TransitivityVerdict empty =
      transitive_verdict(make_sft(2, {"00", "01", "11"}), 1);
  CHECK(!empty.transitive);
  CHECK(empty.empty_essential);

  // a longer window must not change the verdicts
  CHECK(transitive_verdict(kGoldenMean, 3).transitive);
  CHECK(!transitive_verdict(kFrozen, 3).transitive);
}

TEST_CASE("periodic point counts match the transfer-matrix trace") {
  CHECK(periodic_points(kFull, 3).count == 8);
  CHECK(periodic_points(kFrozen, 4).count == 2);

  std::vector<std::uint64_t> golden;
  for (std::uint64_t n = 1; n <= 5; ++n)
    golden.push_back(periodic_points(kGoldenMean, n).count);
  CHECK(golden == std::vector<std::uint64_t>{1, 3, 4, 7, 11});

  for (std::uint64_t n = 1; n <= 12; ++n) {
    CHECK(periodic_points(kFull, n).count == transfer_matrix_trace(kFull, n));
    CHECK(periodic_points(kGoldenMean, n).count ==
          transfer_matrix_trace(kGoldenMean, n));
    CHECK(periodic_points(kFrozen, n).count ==
          transfer_matrix_trace(kFrozen, n));
  }
  CHECK_THROWS_AS(transfer_matrix_trace(make_sft(2, {"101"}), 3),
                  std::invalid_argument);
}

TEST_CASE("searching for a shared periodic orbit") {
  SharedOrbitSearch hit = find_shared_periodic_orbit(kFull, "0", "1", 10);
  CHECK(hit.found);
  CHECK(hit.word == "01");
  CHECK(hit.time_u == 0);
  CHECK(hit.time_v == 1);

  CHECK(!find_shared_periodic_orbit(kFrozen, "0", "1", 10).found);

  SharedOrbitSearch fixed = find_shared_periodic_orbit(kGoldenMean, "0", "0", 10);
  CHECK(fixed.found);
  CHECK(fixed.word == "0");
  CHECK(fixed.time_u == 0);
  CHECK(fixed.time_v == 0);

  CHECK_THROWS_AS(find_shared_periodic_orbit(kGoldenMean, "11", "0", 5),
                  std::invalid_argument);
}

TEST_CASE("equivalence crosscheck") {
  OracleReport full = crosscheck(kFull, 5, 10);
  CHECK(full.transitive);
  CHECK(full.periodic_dense_to_depth);
  CHECK(full.def7_to_depth);
  CHECK(!full.discrepancy);

  OracleReport frozen = crosscheck(kFrozen, 5, 10);
  CHECK(!frozen.transitive);
  CHECK(frozen.periodic_dense_to_depth);
  CHECK(!frozen.def7_to_depth);
  CHECK(!frozen.discrepancy);
  REQUIRE(frozen.counterexample.has_value());
  CHECK(!find_shared_periodic_orbit(kFrozen, frozen.counterexample->first,
                                    frozen.counterexample->second, 10)
             .found);

  SUBCASE("every forbidden-pair subset satisfies the biconditional") {
    auto results = sweep(2, 5, 10);
    CHECK(results.size() == 16);
    for (const auto& [sys, report] : results) {
      CAPTURE(print_sft(sys));
      CHECK(!report.discrepancy);
      for (std::uint64_t n = 1; n <= 12; ++n)
        CHECK(periodic_points(sys, n).count == transfer_matrix_trace(sys, n));
    }
  }
}

TEST_CASE("odometer steps with carry") {
  Point x;  // zero
  x = odometer_step(x, "a");
  CHECK(x == pt("a=1|0"));
  x = odometer_step(x, "a");
  CHECK(x == pt("a=01|0"));
  x = odometer_step(x, "a");
  CHECK(x == pt("a=11|0"));
  x = odometer_step(x, "a");
  CHECK(x == pt("a=001|0"));

  CHECK(odometer_step(pt("a=|1"), "a") == Point{});  // all ones wraps
  CHECK(odometer_inverse(Point{}, "a") == pt("a=|1"));

  SUBCASE("inverse undoes the step on sampled points") {
    Rng rng(61);
    for (int i = 0; i < 300; ++i) {
      Point p = random_single_fiber_point(rng, "a");
      CHECK(odometer_inverse(odometer_step(p, "a"), "a") == p);
      CHECK(odometer_step(odometer_inverse(p, "a"), "a") == p);
    }
  }
}

TEST_CASE("independence demos") {
  IndependenceReport report = remark_demos(6, 12, 200, 0);
  CHECK(report.rotation_holds);
  CHECK(report.odometer_holds);
  CHECK(report.holds());
  CHECK(report.odometer.prefixes_visited == 64);
  CHECK(!report.odometer.periodic_point_found);

  SUBCASE("prefix order at depth two") {
    // carry arithmetic: 00, 10, 01, 11, back to 00
    Point x;
    std::vector<std::string> prefixes;
    for (int step = 0; step < 5; ++step) {
      std::string prefix;
      prefix += static_cast<char>('0' + eval(x, {"a", 1}));
      prefix += static_cast<char>('0' + eval(x, {"a", 2}));
      prefixes.push_back(prefix);
      x = odometer_step(x, "a");
    }
    CHECK(prefixes ==
          std::vector<std::string>{"00", "10", "01", "11", "00"});
  }
}

TEST_CASE("sft validation") {
  CHECK_THROWS_AS(make_sft(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_sft(2, {""}), std::invalid_argument);
  CHECK_THROWS_AS(make_sft(2, {"12"}), std::invalid_argument);
  CHECK(make_sft(3, {"21", "002"}).forbidden ==
        std::vector<std::string>{"21", "002"});
}
