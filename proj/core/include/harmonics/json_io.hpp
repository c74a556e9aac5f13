#pragma once

// String-level JSON encodings for the documented interchange formats.
// Heavier report assembly lives in the workspace/runner layer.

#include <string>

#include "harmonics/measure.hpp"
#include "harmonics/rep.hpp"

namespace harmonics {

std::string group_spec_to_json_string(const GroupSpec& spec);
GroupSpec group_spec_from_json_string(const std::string& text);

std::string element_to_json_string(const Group& group, const GroupElement& element);
GroupElement element_from_json_string(const Group& group, const std::string& text);

std::string measure_to_json_string(const FinMeasure& mu);
FinMeasure measure_from_json_string(const GroupPtr& group, const std::string& text);

std::string rep_to_json_string(const UnitaryRep& rep);
UnitaryRep rep_from_json_string(const GroupPtr& group, const std::string& text,
                                const Tolerances& tol = {});

}  // namespace harmonics
