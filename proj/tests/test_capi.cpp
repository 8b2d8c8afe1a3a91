#include <doctest.h>

#include <cstring>
#include <string>

#include "cantor/cantor.h"

namespace {

struct StringOut {
  char* value = nullptr;
  ~StringOut() { cantor_string_free(value); }
  std::string str() const { return value == nullptr ? "" : value; }
};

}  // namespace

TEST_CASE("c api: parse, print, evaluate") {
  cantor_point* p = nullptr;
  REQUIRE(cantor_point_parse("b=1|0;a=|10", &p) == CANTOR_OK);
  StringOut text{cantor_point_print(p)};
  CHECK(text.str() == "a=|10;b=1|0");
  CHECK(cantor_point_eval(p, "a", 1) == 1);
  CHECK(cantor_point_eval(p, "a", 2) == 0);
  CHECK(cantor_point_eval(p, "c", 7) == 0);
  CHECK(cantor_point_eval(p, "a", 0) == -1);  // 1-based

  cantor_point* shifted = nullptr;
  REQUIRE(cantor_point_shift(p, 1, &shifted) == CANTOR_OK);
  StringOut shifted_text{cantor_point_print(shifted)};
  CHECK(shifted_text.str() == "a=|01");

  int has_period = 0;
  uint64_t period = 0;
  REQUIRE(cantor_point_period(p, &has_period, &period) == CANTOR_OK);
  CHECK(has_period == 0);
  REQUIRE(cantor_point_period(shifted, &has_period, &period) == CANTOR_OK);
  CHECK(has_period == 1);
  CHECK(period == 2);

  cantor_point_free(shifted);
  cantor_point_free(p);
}

TEST_CASE("c api: error reporting") {
  cantor_point* p = nullptr;
  CHECK(cantor_point_parse("a=0", &p) == CANTOR_ERR_PARSE);
  CHECK(std::strlen(cantor_last_error()) > 0);
  CHECK(cantor_point_parse(nullptr, &p) == CANTOR_ERR_ARGUMENT);

  cantor_cylinder* whole = nullptr;
  REQUIRE(cantor_cylinder_parse("{}", &whole) == CANTOR_OK);
  cantor_cylinder* moved = nullptr;
  CHECK(cantor_cylinder_preimage(whole, 0, &moved) ==
        CANTOR_ERR_PRECONDITION);

  cantor_point* a = nullptr;
  REQUIRE(cantor_point_parse("zero", &a) == CANTOR_OK);
  cantor_index* sep = nullptr;
  CHECK(cantor_separating_index(a, a, &sep) == CANTOR_ERR_PRECONDITION);
  cantor_point_free(a);
  cantor_cylinder_free(whole);
}

TEST_CASE("c api: cylinder algebra and uniformity") {
  cantor_cylinder* u = nullptr;
  cantor_cylinder* v = nullptr;
  REQUIRE(cantor_cylinder_parse("{a:1=1}", &u) == CANTOR_OK);
  REQUIRE(cantor_cylinder_parse("{a:1=0}", &v) == CANTOR_OK);

  cantor_cylinder* conflict = nullptr;
  REQUIRE(cantor_cylinder_intersect(u, v, &conflict) == CANTOR_OK);
  CHECK(cantor_cylinder_is_void(conflict) == 1);

  cantor_cylinder* deeper = nullptr;
  REQUIRE(cantor_cylinder_preimage(u, 2, &deeper) == CANTOR_OK);
  StringOut deeper_text{cantor_cylinder_print(deeper)};
  CHECK(deeper_text.str() == "{a:3=1}");

  cantor_point* zero = nullptr;
  REQUIRE(cantor_point_parse("zero", &zero) == CANTOR_OK);
  CHECK(cantor_cylinder_member(zero, v) == 1);
  CHECK(cantor_cylinder_member(zero, u) == 0);

  cantor_index* ix = nullptr;
  REQUIRE(cantor_index_parse("<{a},2>", &ix) == CANTOR_OK);
  cantor_cylinder* b = nullptr;
  REQUIRE(cantor_ball(ix, zero, &b) == CANTOR_OK);
  StringOut ball_text{cantor_cylinder_print(b)};
  CHECK(ball_text.str() == "{a:1=0,a:2=0}");
  CHECK(cantor_relates(ix, zero, zero) == 1);
  CHECK(cantor_cylinder_subset(b, v) == 1);

  cantor_index* ix2 = nullptr;
  REQUIRE(cantor_index_parse("<{b},1>", &ix2) == CANTOR_OK);
  cantor_index* joined = nullptr;
  REQUIRE(cantor_index_join(ix, ix2, &joined) == CANTOR_OK);
  StringOut joined_text{cantor_index_print(joined)};
  CHECK(joined_text.str() == "<{a,b},2>");
  CHECK(cantor_index_refines(joined, ix) == 1);
  CHECK(cantor_index_refines(ix, joined) == 0);

  cantor_index_free(joined);
  cantor_index_free(ix2);
  cantor_index_free(ix);
  cantor_cylinder_free(b);
  cantor_point_free(zero);
  cantor_cylinder_free(deeper);
  cantor_cylinder_free(conflict);
  cantor_cylinder_free(v);
  cantor_cylinder_free(u);
}

TEST_CASE("c api: witnesses come back verified") {
  cantor_cylinder* u = nullptr;
  cantor_cylinder* v = nullptr;
  REQUIRE(cantor_cylinder_parse("{a:1=1}", &u) == CANTOR_OK);
  REQUIRE(cantor_cylinder_parse("{b:1=1}", &v) == CANTOR_OK);

  StringOut json;
  int verified = 0;
  REQUIRE(cantor_witness_transitivity(u, v, "a", &json.value, &verified) ==
          CANTOR_OK);
  CHECK(verified == 1);
  CHECK(json.str().find("{a:1=1,a:2=0,b:1=0,b:2=1}") != std::string::npos);

  StringOut orbit_json;
  REQUIRE(cantor_witness_shared_orbit(u, v, "a", &orbit_json.value,
                                      &verified) == CANTOR_OK);
  CHECK(verified == 1);

  StringOut periodic_json;
  REQUIRE(cantor_witness_periodic(u, "a", &periodic_json.value, &verified) ==
          CANTOR_OK);
  CHECK(verified == 1);

  cantor_point* x = nullptr;
  REQUIRE(cantor_point_parse("zero", &x) == CANTOR_OK);
  cantor_cylinder* whole = nullptr;
  REQUIRE(cantor_cylinder_parse("{}", &whole) == CANTOR_OK);
  StringOut sens_json;
  REQUIRE(cantor_witness_sensitivity(x, whole, "a", &sens_json.value,
                                     &verified) == CANTOR_OK);
  CHECK(verified == 1);
  CHECK(sens_json.str().find("\"m\":2") != std::string::npos);

  cantor_cylinder_free(whole);
  cantor_point_free(x);
  cantor_cylinder_free(v);
  cantor_cylinder_free(u);
}

TEST_CASE("c api: command runner exit codes") {
  const char* good[] = {"witness-transitivity", "--u", "{a:1=1}", "--v",
                        "{b:1=1}"};
  StringOut out, diag;
  CHECK(cantor_run(5, good, &out.value, &diag.value) == 0);
  CHECK(out.str().find("\"verified\": true") != std::string::npos);
  CHECK(out.str().find("\"command\": \"witness-transitivity\"") !=
        std::string::npos);

  const char* bad_parse[] = {"witness-transitivity", "--u", "{a:0=1}", "--v",
                             "{}"};
  StringOut out2, diag2;
  CHECK(cantor_run(5, bad_parse, &out2.value, &diag2.value) == 2);
  CHECK(diag2.str().find("1-based") != std::string::npos);

  const char* unknown[] = {"no-such-command"};
  StringOut out3, diag3;
  CHECK(cantor_run(1, unknown, &out3.value, &diag3.value) == 2);

  const char* tampered[] = {"witness-sensitivity", "--x",  "zero", "--nbhd",
                            "{}",                  "--tamper-chosen-x"};
  StringOut out4, diag4;
  CHECK(cantor_run(6, tampered, &out4.value, &diag4.value) == 1);
  CHECK(out4.str().find("\"verified\": false") != std::string::npos);
}
