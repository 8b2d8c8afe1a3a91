#include "cantor/cantor.h"

#include <cstring>
#include <new>
#include <string>

#include "chaos_witness.hpp"
#include "commands.hpp"
#include "json_io.hpp"
#include "sensitivity.hpp"
#include "text.hpp"
#include "uniformity.hpp"

struct cantor_point {
  cantor::Point v;
};
struct cantor_cylinder {
  cantor::Cylinder v;
};
struct cantor_index {
  cantor::UIndex v;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions to status codes.
template <typename Fn>
cantor_status guarded(Fn&& body) {
  try {
    body();
    return CANTOR_OK;
  } catch (const cantor::ParseError& e) {
    g_last_error = e.what();
    return CANTOR_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return CANTOR_ERR_PRECONDITION;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CANTOR_ERR_INTERNAL;
  }
}

// Same, for 0/1 predicates that report errors as -1.
template <typename Fn>
int guarded_flag(Fn&& body) {
  try {
    return body() ? 1 : 0;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return -1;
  }
}

cantor_status require(bool ok, const char* message) {
  if (ok) return CANTOR_OK;
  g_last_error = message;
  return CANTOR_ERR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* cantor_last_error(void) { return g_last_error.c_str(); }

void cantor_string_free(char* s) { delete[] s; }

/* ---- points ---- */

cantor_status cantor_point_parse(const char* text, cantor_point** out) {
  if (auto bad = require(text && out, "null argument")) return bad;
  return guarded([&] { *out = new cantor_point{cantor::parse_point(text)}; });
}

char* cantor_point_print(const cantor_point* p) {
  if (p == nullptr) return nullptr;
  return dup_string(cantor::print_point(p->v));
}

void cantor_point_free(cantor_point* p) { delete p; }

int cantor_point_eval(const cantor_point* p, const char* fiber,
                      uint64_t pos) {
  if (p == nullptr || fiber == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return guarded_flag(
      [&] { return cantor::eval(p->v, {fiber, pos}) == 1; });
}

cantor_status cantor_point_shift(const cantor_point* p, uint64_t m,
                                 cantor_point** out) {
  if (auto bad = require(p && out, "null argument")) return bad;
  return guarded([&] { *out = new cantor_point{cantor::shift(p->v, m)}; });
}

cantor_status cantor_point_period(const cantor_point* p, int* has_period,
                                  uint64_t* period) {
  if (auto bad = require(p && has_period && period, "null argument"))
    return bad;
  return guarded([&] {
    auto result = cantor::primitive_period(p->v);
    *has_period = result.has_value() ? 1 : 0;
    *period = result.value_or(0);
  });
}

int cantor_point_equal(const cantor_point* a, const cantor_point* b) {
  if (a == nullptr || b == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return a->v == b->v ? 1 : 0;
}

/* ---- cylinders ---- */

cantor_status cantor_cylinder_parse(const char* text, cantor_cylinder** out) {
  if (auto bad = require(text && out, "null argument")) return bad;
  return guarded(
      [&] { *out = new cantor_cylinder{cantor::parse_cylinder(text)}; });
}

char* cantor_cylinder_print(const cantor_cylinder* c) {
  if (c == nullptr) return nullptr;
  return dup_string(cantor::print_cylinder(c->v));
}

void cantor_cylinder_free(cantor_cylinder* c) { delete c; }

int cantor_cylinder_is_void(const cantor_cylinder* c) {
  if (c == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return c->v.is_void() ? 1 : 0;
}

cantor_status cantor_cylinder_intersect(const cantor_cylinder* a,
                                        const cantor_cylinder* b,
                                        cantor_cylinder** out) {
  if (auto bad = require(a && b && out, "null argument")) return bad;
  return guarded(
      [&] { *out = new cantor_cylinder{cantor::intersect(a->v, b->v)}; });
}

cantor_status cantor_cylinder_preimage(const cantor_cylinder* c, uint64_t m,
                                       cantor_cylinder** out) {
  if (auto bad = require(c && out, "null argument")) return bad;
  return guarded(
      [&] { *out = new cantor_cylinder{cantor::preimage(c->v, m)}; });
}

cantor_status cantor_cylinder_image(const cantor_cylinder* c, uint64_t m,
                                    cantor_cylinder** out) {
  if (auto bad = require(c && out, "null argument")) return bad;
  return guarded([&] { *out = new cantor_cylinder{cantor::image(c->v, m)}; });
}

int cantor_cylinder_member(const cantor_point* p, const cantor_cylinder* c) {
  if (p == nullptr || c == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return guarded_flag([&] { return cantor::member(p->v, c->v); });
}

int cantor_cylinder_subset(const cantor_cylinder* inner,
                           const cantor_cylinder* outer) {
  if (inner == nullptr || outer == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return guarded_flag([&] { return cantor::subset_of(inner->v, outer->v); });
}

/* ---- indices ---- */

cantor_status cantor_index_parse(const char* text, cantor_index** out) {
  if (auto bad = require(text && out, "null argument")) return bad;
  return guarded([&] { *out = new cantor_index{cantor::parse_index(text)}; });
}

char* cantor_index_print(const cantor_index* ix) {
  if (ix == nullptr) return nullptr;
  return dup_string(cantor::print_index(ix->v));
}

void cantor_index_free(cantor_index* ix) { delete ix; }

cantor_status cantor_index_join(const cantor_index* a, const cantor_index* b,
                                cantor_index** out) {
  if (auto bad = require(a && b && out, "null argument")) return bad;
  return guarded([&] { *out = new cantor_index{cantor::join(a->v, b->v)}; });
}

int cantor_index_refines(const cantor_index* a, const cantor_index* b) {
  if (a == nullptr || b == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return cantor::refines(a->v, b->v) ? 1 : 0;
}

cantor_status cantor_ball(const cantor_index* ix, const cantor_point* p,
                          cantor_cylinder** out) {
  if (auto bad = require(ix && p && out, "null argument")) return bad;
  return guarded(
      [&] { *out = new cantor_cylinder{cantor::ball(ix->v, p->v)}; });
}

int cantor_relates(const cantor_index* ix, const cantor_point* a,
                   const cantor_point* b) {
  if (ix == nullptr || a == nullptr || b == nullptr) {
    g_last_error = "null argument";
    return -1;
  }
  return guarded_flag([&] { return cantor::relates(ix->v, a->v, b->v); });
}

cantor_status cantor_separating_index(const cantor_point* a,
                                      const cantor_point* b,
                                      cantor_index** out) {
  if (auto bad = require(a && b && out, "null argument")) return bad;
  return guarded([&] {
    *out = new cantor_index{cantor::separating_index(a->v, b->v)};
  });
}

/* ---- witnesses ---- */

cantor_status cantor_witness_transitivity(const cantor_cylinder* u,
                                          const cantor_cylinder* v,
                                          const char* designated_fiber,
                                          char** witness_json,
                                          int* verified) {
  if (auto bad = require(u && v && designated_fiber && witness_json &&
                             verified,
                         "null argument"))
    return bad;
  return guarded([&] {
    cantor::TransitivityWitness w =
        cantor::transitivity_witness(u->v, v->v, designated_fiber);
    *verified = w.k >= 1 && !w.w.is_void() && cantor::subset_of(w.w, u->v) &&
                cantor::subset_of(cantor::image(w.w, w.k), v->v);
    *witness_json = dup_string(cantor::json_of(w).dump());
  });
}

cantor_status cantor_witness_periodic(const cantor_cylinder* u,
                                      const char* designated_fiber,
                                      char** witness_json, int* verified) {
  if (auto bad =
          require(u && designated_fiber && witness_json && verified,
                  "null argument"))
    return bad;
  return guarded([&] {
    cantor::Point f = cantor::periodic_point_in(u->v, designated_fiber);
    const std::uint64_t k = cantor::normalize(u->v, designated_fiber).k;
    *verified = cantor::member(f, u->v) && cantor::shift(f, k) == f;
    cantor::ojson j;
    j["point"] = cantor::print_point(f);
    j["k"] = k;
    *witness_json = dup_string(j.dump());
  });
}

cantor_status cantor_witness_shared_orbit(const cantor_cylinder* u,
                                          const cantor_cylinder* v,
                                          const char* designated_fiber,
                                          char** witness_json,
                                          int* verified) {
  if (auto bad = require(u && v && designated_fiber && witness_json &&
                             verified,
                         "null argument"))
    return bad;
  return guarded([&] {
    cantor::SharedOrbitWitness w =
        cantor::shared_orbit_witness(u->v, v->v, designated_fiber);
    *verified = cantor::primitive_period(w.p).has_value() &&
                cantor::member(cantor::shift(w.p, w.t_u), u->v) &&
                cantor::member(cantor::shift(w.p, w.t_v), v->v);
    *witness_json = dup_string(cantor::json_of(w).dump());
  });
}

cantor_status cantor_witness_sensitivity(const cantor_point* x,
                                         const cantor_cylinder* nbhd,
                                         const char* designated_fiber,
                                         char** witness_json, int* verified) {
  if (auto bad = require(x && nbhd && designated_fiber && witness_json &&
                             verified,
                         "null argument"))
    return bad;
  return guarded([&] {
    cantor::SensitivityWitness w =
        cantor::sensitivity_witness(x->v, nbhd->v, {designated_fiber});
    *verified = cantor::verify_sensitive(x->v, w, nbhd->v);
    *witness_json = dup_string(cantor::json_of(w).dump());
  });
}

/* ---- command runner ---- */

int cantor_run(int argc, const char* const* argv, char** stdout_text,
               char** stderr_text) {
  std::string out, diag;
  int code = 2;
  try {
    code = cantor::cli::run(argc, argv, out, diag);
  } catch (const std::exception& e) {
    diag = std::string("error: ") + e.what() + "\n";
  }
  if (stdout_text != nullptr)
    *stdout_text = out.empty() ? nullptr : dup_string(out);
  if (stderr_text != nullptr)
    *stderr_text = diag.empty() ? nullptr : dup_string(diag);
  return code;
}

}  // extern "C"
