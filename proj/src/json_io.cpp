#include "json_io.hpp"

#include "text.hpp"

namespace cantor {

ojson json_of(const TransitivityWitness& w) {
  ojson j;
  j["k"] = w.k;
  j["w"] = print_cylinder(w.w);
  return j;
}

ojson json_of(const SharedOrbitWitness& w) {
  ojson j;
  j["p"] = print_point(w.p);
  j["t_u"] = w.t_u;
  j["t_v"] = w.t_v;
  return j;
}

ojson json_of(const SensitivityWitness& w) {
  ojson j;
  j["alpha"] = print_index(w.alpha);
  j["q"] = print_point(w.q);
  j["n"] = w.n;
  ojson chain = ojson::array();
  for (const auto& link : w.chain) chain.push_back(print_cylinder(link));
  j["chain"] = chain;
  j["k"] = w.k;
  j["a"] = w.a;
  j["b"] = w.b;
  j["m"] = w.m;
  j["y"] = print_point(w.y);
  j["p"] = print_point(w.p);
  j["chosen"] = w.chosen == SensitivityWitness::Choice::y ? "y" : "p";
  j["chosen_point"] = print_point(w.chosen_point());
  return j;
}

ojson json_of(const AxiomReport& r) {
  ojson j;
  j["id"] = r.id;
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  return j;
}

ojson json_of(const OracleReport& r) {
  ojson j;
  j["transitive"] = r.transitive;
  j["periodic_dense_to_depth"] = r.periodic_dense_to_depth;
  j["def7_to_depth"] = r.def7_to_depth;
  j["depth"] = r.depth;
  j["period_bound"] = r.period_bound;
  j["empty_subshift"] = r.empty_subshift;
  j["equivalence_holds"] = !r.discrepancy;
  if (r.counterexample) {
    j["counterexample"] = {r.counterexample->first, r.counterexample->second};
  } else {
    j["counterexample"] = nullptr;
  }
  j["reading"] =
      "open sets are cylinders of allowed words within the subshift";
  return j;
}

ojson json_of(const SftSystem& sys, const OracleReport& r) {
  ojson j;
  j["system"] = print_sft(sys);
  ojson body = json_of(r);
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

ojson json_of(const IndependenceReport& r) {
  ojson j;
  ojson rotation = json_of(make_sft(2, {"01", "10"}), r.rotation_analogue);
  rotation["expected"] = "dense periodic points without transitivity";
  rotation["holds"] = r.rotation_holds;
  j["rotation_analogue"] = rotation;

  ojson odo;
  odo["fiber"] = r.odometer.fiber;
  odo["depth"] = r.odometer.depth;
  odo["prefixes_expected"] = r.odometer.prefixes_expected;
  odo["prefixes_visited"] = r.odometer.prefixes_visited;
  odo["transitive_to_depth"] = r.odometer.transitive_to_depth;
  odo["samples"] = r.odometer.samples;
  odo["period_bound"] = r.odometer.period_bound;
  odo["periodic_point_found"] = r.odometer.periodic_point_found;
  odo["expected"] = "cylinder transitivity without periodic points";
  odo["holds"] = r.odometer_holds;
  j["odometer"] = odo;
  return j;
}

}  // namespace cantor
