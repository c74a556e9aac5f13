#pragma once

// Internal nlohmann-based converters shared by json_io, workspace and the
// runner. Not installed; the public surface is string-based.

#include <json.hpp>

#include "harmonics/cocycle.hpp"
#include "harmonics/harmonic_functions.hpp"
#include "harmonics/harmonize.hpp"
#include "harmonics/induction.hpp"
#include "harmonics/measure.hpp"
#include "harmonics/products.hpp"
#include "harmonics/rep.hpp"
#include "harmonics/selftest.hpp"

namespace harmonics::jsonio {

using json = nlohmann::json;

/// Parses or throws a harmonics ParseError (never an nlohmann exception).
json parse_text(const std::string& text);
const json& require_field(const json& j, const char* name);

json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const json& j);

json element_to_json(const Group& group, const GroupElement& element);
GroupElement element_from_json(const Group& group, const json& j);

json matrix_to_json(const Matrix& m, Field field);
Matrix matrix_from_json(const json& j, Field field);
json vector_to_json(const Vector& v, Field field);
Vector vector_from_json(const json& j, Field field);

json measure_to_json(const FinMeasure& mu);
FinMeasure measure_from_json(const GroupPtr& group, const json& j, const Tolerances& tol = {});

json rep_to_json(const UnitaryRep& rep);
UnitaryRep rep_from_json(const GroupPtr& group, const json& j, const Tolerances& tol = {});

json cocycle_to_json(const Cocycle& c, const std::string& rep_name);

json reasonableness_to_json(const ReasonablenessReport& report);
json validation_to_json(const ValidationReport& report);
json dims_to_json(const CohomologyDims& dims);
json harmonize_report_to_json(const HarmonizeReport& report);
json ball_function_to_json(const Group& group, const BallFunction& f);
json certificate_to_json(const LipschitzCertificate& cert);
json selftest_to_json(const SelftestReport& report);

std::map<GroupElement, double> boundary_from_json(const Group& group, const json& j);

}  // namespace harmonics::jsonio
