#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <vector>

#include "chaos_witness.hpp"
#include "json_io.hpp"
#include "sensitivity.hpp"
#include "sft_oracle.hpp"
#include "text.hpp"
#include "uniformity.hpp"

namespace cantor::cli {

namespace {

std::uint64_t seed_from_env() {
  const char* env = std::getenv("CANTOR_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  unsigned long long value = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0')
    throw std::invalid_argument("CANTOR_SEED must be a nonnegative integer");
  return value;
}

int emit(const ojson& doc, bool verified, std::string& out) {
  out = doc.dump(2);
  out += '\n';
  return verified ? 0 : 1;
}

int run_witness_transitivity(const std::string& u_text,
                             const std::string& v_text,
                             const std::string& fiber, std::uint64_t seed,
                             std::string& out) {
  Cylinder u = parse_cylinder(u_text);
  Cylinder v = parse_cylinder(v_text);
  TransitivityWitness w = transitivity_witness(u, v, fiber);

  bool verified = w.k >= 1 && !w.w.is_void() && subset_of(w.w, u) &&
                  subset_of(image(w.w, w.k), v);

  ojson doc;
  doc["command"] = "witness-transitivity";
  doc["inputs"] = {{"u", u_text}, {"v", v_text}, {"fiber", fiber}};
  doc["witness"] = json_of(w);
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_witness_periodic(const std::string& u_text, const std::string& fiber,
                         std::uint64_t seed, std::string& out) {
  Cylinder u = parse_cylinder(u_text);
  Point f = periodic_point_in(u, fiber);
  const std::uint64_t k = normalize(u, fiber).k;

  bool verified = member(f, u) && shift(f, k) == f;

  ojson witness;
  witness["point"] = print_point(f);
  witness["k"] = k;
  auto period = primitive_period(f);
  witness["primitive_period"] = period ? ojson(*period) : ojson(nullptr);

  ojson doc;
  doc["command"] = "witness-periodic";
  doc["inputs"] = {{"u", u_text}, {"fiber", fiber}};
  doc["witness"] = witness;
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_witness_shared_orbit(const std::string& u_text,
                             const std::string& v_text,
                             const std::string& fiber, std::uint64_t seed,
                             std::string& out) {
  Cylinder u = parse_cylinder(u_text);
  Cylinder v = parse_cylinder(v_text);
  SharedOrbitWitness w = shared_orbit_witness(u, v, fiber);

  auto period = primitive_period(w.p);
  bool verified = period.has_value() && member(shift(w.p, w.t_u), u) &&
                  member(shift(w.p, w.t_v), v);
  if (verified) {
    // A positive exponent with shift^n(U) meeting V falls out of the
    // witness times and the orbit period.
    std::uint64_t n = (w.t_v - w.t_u) % *period;
    if (n == 0) n = *period;
    verified = member(shift(w.p, w.t_u + n), v);
  }

  ojson doc;
  doc["command"] = "witness-shared-orbit";
  doc["inputs"] = {{"u", u_text}, {"v", v_text}, {"fiber", fiber}};
  doc["witness"] = json_of(w);
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_witness_sensitivity(const std::string& x_text,
                            const std::string& nbhd_text,
                            const std::string& fiber, bool tamper,
                            std::uint64_t seed, std::string& out) {
  Point x = parse_point(x_text);
  Cylinder nbhd = parse_cylinder(nbhd_text);
  SensitivityWitness w = sensitivity_witness(x, nbhd, {fiber});

  if (tamper) {
    // Self-test fixture: overwrite the chosen point with x itself; the
    // verifier must reject it and drive the exit code to 1.
    if (w.chosen == SensitivityWitness::Choice::y)
      w.y = x;
    else
      w.p = x;
  }

  bool verified = verify_sensitive(x, w, nbhd);

  ojson doc;
  doc["command"] = "witness-sensitivity";
  doc["inputs"] = {{"x", x_text},
                   {"nbhd", nbhd_text},
                   {"fiber", fiber},
                   {"tamper", tamper}};
  doc["witness"] = json_of(w);
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_verify_uns(std::size_t samples, std::size_t pairs, std::uint64_t seed,
                   std::string& out) {
  std::vector<AxiomReport> reports = axiom_checks({seed, samples});
  AxiomReport separation = separation_check(pairs, seed + 1);

  bool verified = separation.pass();
  ojson axioms = ojson::array();
  for (const auto& report : reports) {
    verified = verified && report.pass();
    axioms.push_back(json_of(report));
  }

  ojson doc;
  doc["command"] = "verify-uns";
  doc["inputs"] = {{"samples", samples}, {"pairs", pairs}};
  doc["report"] = {{"axioms", axioms}, {"separation", json_of(separation)}};
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_sft_check(const std::string& system_text, std::uint64_t depth,
                  std::uint64_t period_bound, std::uint64_t seed,
                  std::string& out) {
  SftSystem sys = parse_sft(system_text);
  OracleReport report = crosscheck(sys, depth, period_bound);
  bool verified = !report.discrepancy;

  ojson doc;
  doc["command"] = "sft-check";
  doc["inputs"] = {{"system", system_text},
                   {"depth", depth},
                   {"period_bound", period_bound}};
  doc["report"] = json_of(sys, report);
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_sft_sweep(std::uint64_t word_len, std::uint64_t depth,
                  std::uint64_t period_bound, std::uint64_t seed,
                  std::string& out) {
  auto results = sweep(word_len, depth, period_bound);
  bool verified = true;
  ojson systems = ojson::array();
  for (const auto& [sys, report] : results) {
    verified = verified && !report.discrepancy;
    systems.push_back(json_of(sys, report));
  }

  ojson doc;
  doc["command"] = "sft-sweep";
  doc["inputs"] = {{"max_forbidden_len", word_len},
                   {"depth", depth},
                   {"period_bound", period_bound}};
  doc["report"] = {{"system_count", results.size()},
                   {"systems", systems},
                   {"all_hold", verified}};
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

int run_remark_demos(std::uint64_t depth, std::uint64_t period_bound,
                     std::size_t samples, std::uint64_t seed,
                     std::string& out) {
  IndependenceReport report = remark_demos(depth, period_bound, samples, seed);
  bool verified = report.holds();

  ojson doc;
  doc["command"] = "remark-demos";
  doc["inputs"] = {{"depth", depth},
                   {"period_bound", period_bound},
                   {"samples", samples}};
  doc["report"] = json_of(report);
  doc["verified"] = verified;
  doc["seed"] = seed;
  return emit(doc, verified, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::string& out,
        std::string& diag) {
  out.clear();
  diag.clear();

  CLI::App app{"witness generators and brute-force checks for the shift on "
               "generalized Cantor space"};
  app.name("cantor");
  app.require_subcommand(1);

  std::string u_text = "{}", v_text = "{}", x_text = "zero";
  std::string nbhd_text = "{}", system_text = "alphabet=2";
  std::string fiber = "a";
  bool tamper = false;
  std::uint64_t depth = 5, period_bound = 10, word_len = 2;
  std::size_t samples = 1000, pairs = 500;
  std::uint64_t demo_depth = 6, demo_bound = 12;
  std::size_t demo_samples = 200;

  CLI::App* wt = app.add_subcommand(
      "witness-transitivity",
      "cylinder W inside U whose k-th shift image lies inside V");
  wt->add_option("--u", u_text, "source cylinder")->required();
  wt->add_option("--v", v_text, "target cylinder")->required();
  wt->add_option("--fiber", fiber, "fiber anchoring whole-space inputs");

  CLI::App* wp = app.add_subcommand("witness-periodic",
                                    "periodic point inside a cylinder");
  wp->add_option("--u", u_text, "cylinder")->required();
  wp->add_option("--fiber", fiber, "fiber anchoring whole-space inputs");

  CLI::App* ws = app.add_subcommand(
      "witness-shared-orbit", "periodic orbit meeting both cylinders");
  ws->add_option("--u", u_text, "first cylinder")->required();
  ws->add_option("--v", v_text, "second cylinder")->required();
  ws->add_option("--fiber", fiber, "fiber anchoring whole-space inputs");

  CLI::App* wx = app.add_subcommand(
      "witness-sensitivity",
      "point near x whose orbit separates from x's at an explicit time");
  wx->add_option("--x", x_text, "base point")->required();
  wx->add_option("--nbhd", nbhd_text, "neighborhood cylinder of x")
      ->required();
  wx->add_option("--fiber", fiber, "fiber carrying the reference orbits");
  wx->add_flag("--tamper-chosen-x", tamper,
               "self-test: corrupt the witness so verification must fail");

  CLI::App* vu = app.add_subcommand(
      "verify-uns", "sampled neighborhood-system and entourage axiom checks");
  vu->add_option("--samples", samples, "instances per axiom");
  vu->add_option("--pairs", pairs, "distinct point pairs for separation");

  CLI::App* sc = app.add_subcommand(
      "sft-check", "equivalence crosscheck on one subshift of finite type");
  sc->add_option("--system", system_text, "e.g. \"alphabet=2; forbid=11\"")
      ->required();
  sc->add_option("--depth", depth, "cylinder word depth");
  sc->add_option("--period-bound", period_bound, "max period searched");

  CLI::App* sw = app.add_subcommand(
      "sft-sweep", "equivalence crosscheck over every forbidden-word subset");
  sw->add_option("--max-forbidden-len", word_len,
                 "forbidden words drawn from this exact length");
  sw->add_option("--depth", depth, "cylinder word depth");
  sw->add_option("--period-bound", period_bound, "max period searched");

  CLI::App* rd = app.add_subcommand(
      "remark-demos",
      "independence of transitivity and dense periodic points");
  rd->add_option("--depth", demo_depth, "odometer cylinder depth");
  rd->add_option("--period-bound", demo_bound, "periods ruled out");
  rd->add_option("--samples", demo_samples, "points sampled");

  try {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = argc - 1; i >= 0; --i) args.emplace_back(argv[i]);
    app.parse(args);

    const std::uint64_t seed = seed_from_env();
    if (wt->parsed())
      return run_witness_transitivity(u_text, v_text, fiber, seed, out);
    if (wp->parsed()) return run_witness_periodic(u_text, fiber, seed, out);
    if (ws->parsed())
      return run_witness_shared_orbit(u_text, v_text, fiber, seed, out);
    if (wx->parsed())
      return run_witness_sensitivity(x_text, nbhd_text, fiber, tamper, seed,
                                     out);
    if (vu->parsed()) return run_verify_uns(samples, pairs, seed, out);
    if (sc->parsed())
      return run_sft_check(system_text, depth, period_bound, seed, out);
    if (sw->parsed())
      return run_sft_sweep(word_len, depth, period_bound, seed, out);
    if (rd->parsed())
      return run_remark_demos(demo_depth, demo_bound, demo_samples, seed,
                              out);
    diag = "no subcommand selected\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out = app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out = app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    diag = std::string(e.what()) + "\n";
    return 2;
  } catch (const ParseError& e) {
    diag = std::string("parse error: ") + e.what() + "\n";
    return 2;
  } catch (const std::exception& e) {
    diag = std::string("error: ") + e.what() + "\n";
    return 2;
  }
}

}  // namespace cantor::cli
