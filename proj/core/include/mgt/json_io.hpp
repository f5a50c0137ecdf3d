#pragma once

#include <json.hpp>

#include "mgt/classes.hpp"
#include "mgt/gated.hpp"
#include "mgt/transit.hpp"

namespace mgt {

using json = nlohmann::ordered_json;

json to_json(const ConditionWitness& cw);
/// Array of {"class": ..., "verdict": ..., "witness": ...} entries, one per
/// membership flag, witness null for true verdicts.
json to_json(const ClassificationReport& r);
json to_json(const AxiomReport& r);

json to_json(const AmalgamSpec& spec);
AmalgamSpec amalgam_spec_from_json(const json& j);

} // namespace mgt
