#include <doctest.h>

#include "sampling.hpp"
#include "sft_oracle.hpp"
#include "text.hpp"

using namespace cantor;

TEST_CASE("point grammar") {
  CHECK(print_point(parse_point("a=|10")) == "a=|10");
  CHECK(print_point(parse_point("zero")) == "zero");
  CHECK(print_point(parse_point("b=1|0;a=|10")) == "a=|10;b=1|0");
  CHECK(print_point(parse_point("a=|1010")) == "a=|10");  // canonicalized
  CHECK(print_point(parse_point("a=|0")) == "zero");

  CHECK_THROWS_AS(parse_point("a=|"), ParseError);
  CHECK_THROWS_AS(parse_point("a=10"), ParseError);
  CHECK_THROWS_AS(parse_point("a=|10;a=|1"), ParseError);
  CHECK_THROWS_AS(parse_point(""), ParseError);
  CHECK_THROWS_AS(parse_point("a=|12"), ParseError);
}

TEST_CASE("cylinder grammar") {
  CHECK(print_cylinder(parse_cylinder("{}")) == "{}");
  CHECK(print_cylinder(parse_cylinder("{b:2=0,a:1=1}")) == "{a:1=1,b:2=0}");

  CHECK_THROWS_AS(parse_cylinder("{a:0=1}"), ParseError);  // 1-based
  CHECK_THROWS_AS(parse_cylinder("{a:1=1,a:1=1}"), ParseError);
  CHECK_THROWS_AS(parse_cylinder("{a:1=2}"), ParseError);
  CHECK_THROWS_AS(parse_cylinder("{a:1=1"), ParseError);
  CHECK_THROWS_AS(parse_cylinder("a:1=1"), ParseError);

  SUBCASE("diagnostics carry the offending column") {
    try {
      parse_cylinder("{a:0=1}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 4);
    }
  }
}

TEST_CASE("index grammar") {
  CHECK(print_index(parse_index("<{a},2>")) == "<{a},2>");
  CHECK(print_index(parse_index("<{b,a},3>")) == "<{a,b},3>");
  CHECK_THROWS_AS(parse_index("<{},1>"), ParseError);
  CHECK_THROWS_AS(parse_index("<{a},0>"), ParseError);
}

TEST_CASE("sft grammar") {
  CHECK(print_sft(parse_sft("alphabet=2; forbid=11,101")) ==
        "alphabet=2; forbid=11,101");
  CHECK(print_sft(parse_sft("alphabet=2")) == "alphabet=2");
  CHECK(print_sft(parse_sft("alphabet=2; forbid=101,11")) ==
        "alphabet=2; forbid=11,101");
  CHECK_THROWS_AS(parse_sft("alphabet=1"), ParseError);
  CHECK_THROWS_AS(parse_sft("alphabet=2; forbid=12"), ParseError);
  CHECK_THROWS_AS(parse_sft("forbid=11"), ParseError);
}

TEST_CASE("printing and parsing are mutually inverse on canonical forms") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    Point p = random_point(rng);
    CHECK(parse_point(print_point(p)) == p);
    std::string text = print_point(p);
    CHECK(print_point(parse_point(text)) == text);

    Cylinder c = random_cylinder(rng);
    CHECK(parse_cylinder(print_cylinder(c)) == c);

    UIndex idx = random_index(rng);
    CHECK(parse_index(print_index(idx)) == idx);
  }
}
