#pragma once

#include <json.hpp>
#include <string>

#include "rsz/classify.hpp"
#include "rsz/decide.hpp"
#include "rsz/ff_oracle.hpp"
#include "rsz/quiver.hpp"

namespace rsz {

// Ordinary quivers label vertices by block number, separated quivers by
// [block, level] pairs; arrows are index pairs into the vertex list.
nlohmann::ordered_json quiver_json(const Quiver& q);
std::string quiver_dot(const Quiver& q);

nlohmann::ordered_json classification_json(const GraphClassification& cls);
nlohmann::ordered_json verdict_json(const Verdict& v);
nlohmann::ordered_json report_json(const ValidationReport& r);
nlohmann::ordered_json growth_json(const GrowthTable& t);

}  // namespace rsz
