#pragma once

#include <json.hpp>

#include "chaos_witness.hpp"
#include "sensitivity.hpp"
#include "sft_oracle.hpp"
#include "uniformity.hpp"

// Witnesses and reports as JSON with a stable field order; points,
// cylinders and indices appear as their grammar strings.

namespace cantor {

using ojson = nlohmann::ordered_json;

ojson json_of(const TransitivityWitness& w);
ojson json_of(const SharedOrbitWitness& w);
ojson json_of(const SensitivityWitness& w);
ojson json_of(const AxiomReport& r);
ojson json_of(const OracleReport& r);
ojson json_of(const SftSystem& sys, const OracleReport& r);
ojson json_of(const IndependenceReport& r);

}  // namespace cantor
