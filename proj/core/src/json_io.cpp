#include "harmonics/json_io.hpp"

#include "json_detail.hpp"

namespace harmonics {

namespace jsonio {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
  return j;
}

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(ErrorKind::ParseError, std::string("missing field '") + name + "'");
  return *it;
}

namespace {
const json& field(const json& j, const char* name) { return require_field(j, name); }
}  // namespace

json group_spec_to_json(const GroupSpec& spec) {
  json params = json::object();
  switch (spec.kind) {
    case GroupKind::FinitePerm:
      params["degree"] = spec.degree;
      params["generators"] = spec.perm_generators;
      break;
    case GroupKind::FiniteCyclic:
      params["n"] = spec.modulus;
      break;
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
      params["rank"] = spec.rank;
      break;
    case GroupKind::Heisenberg:
      break;
    case GroupKind::Product: {
      json factors = json::array();
      for (const auto& f : spec.factors) factors.push_back(group_spec_to_json(f));
      params["factors"] = std::move(factors);
      break;
    }
  }
  return json{{"kind", group_kind_name(spec.kind)},
              {"params", std::move(params)},
              {"generator_labels", spec.generator_labels}};
}

GroupSpec group_spec_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorKind::ParseError, "group spec must be an object");
  std::string kind = field(j, "kind").get<std::string>();
  json params = j.value("params", json::object());
  GroupSpec spec;
  if (kind == "finite_perm") {
    spec = GroupSpec::finite_perm(field(params, "degree").get<int>(),
                                  field(params, "generators").get<std::vector<std::vector<int>>>());
  } else if (kind == "finite_cyclic") {
    spec = GroupSpec::finite_cyclic(field(params, "n").get<long long>());
  } else if (kind == "free_abelian") {
    spec = GroupSpec::free_abelian(field(params, "rank").get<int>());
  } else if (kind == "free") {
    spec = GroupSpec::free_group(field(params, "rank").get<int>());
  } else if (kind == "heisenberg") {
    spec = GroupSpec::heisenberg();
  } else if (kind == "product") {
    std::vector<GroupSpec> factors;
    for (const auto& f : field(params, "factors")) factors.push_back(group_spec_from_json(f));
    spec = GroupSpec::product(std::move(factors));
  } else {
    fail(ErrorKind::ParseError, "unknown group kind '" + kind + "'");
  }
  if (j.contains("generator_labels") && !j["generator_labels"].empty() &&
      spec.kind != GroupKind::Product)
    spec.generator_labels = j["generator_labels"].get<std::vector<std::string>>();
  return spec;
}

json element_to_json(const Group& group, const GroupElement& element) {
  group.check_element(element);
  switch (group.kind()) {
    case GroupKind::FinitePerm:
      return json(element.perm().img);
    case GroupKind::FiniteCyclic:
      return json(element.residue().r);
    case GroupKind::FreeAbelian:
      return json(element.int_vec().c);
    case GroupKind::Free:
      return json(element.word().letters);
    case GroupKind::Heisenberg:
      return json::array({element.heis().a, element.heis().b, element.heis().c});
    case GroupKind::Product: {
      json out = json::array();
      for (int i = 0; i < group.factor_count(); ++i)
        out.push_back(element_to_json(*group.factor(i), element.tuple()[i]));
      return out;
    }
  }
  fail(ErrorKind::ParseError, "unreachable");
}

GroupElement element_from_json(const Group& group, const json& j) {
  GroupElement out;
  switch (group.kind()) {
    case GroupKind::FinitePerm:
      out = GroupElement(Perm{j.get<std::vector<int>>()});
      break;
    case GroupKind::FiniteCyclic: {
      long long r = j.get<long long>();
      long long n = group.spec().modulus;
      out = GroupElement(Residue{((r % n) + n) % n});
      break;
    }
    case GroupKind::FreeAbelian:
      out = GroupElement(IntVec{j.get<std::vector<long long>>()});
      break;
    case GroupKind::Free:
      out = GroupElement(Word{j.get<std::vector<int>>()});
      break;
    case GroupKind::Heisenberg: {
      auto v = j.get<std::vector<long long>>();
      if (v.size() != 3) fail(ErrorKind::ParseError, "heisenberg element needs [a,b,c]");
      out = GroupElement(Heis{v[0], v[1], v[2]});
      break;
    }
    case GroupKind::Product: {
      if (!j.is_array() || static_cast<int>(j.size()) != group.factor_count())
        fail(ErrorKind::ParseError, "product element needs one entry per factor");
      GroupElement::Tuple t;
      for (int i = 0; i < group.factor_count(); ++i)
        t.push_back(element_from_json(*group.factor(i), j[static_cast<std::size_t>(i)]));
      out = GroupElement(std::move(t));
      break;
    }
  }
  group.check_element(out);
  return out;
}

namespace {

json complex_to_json(const Complex& z, Field field) {
  if (field == Field::Real) return json(z.real());
  return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j, Field field) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (field == Field::Real)
    fail(ErrorKind::ParseError, "real-field entries must be plain numbers");
  if (!j.is_array() || j.size() != 2)
    fail(ErrorKind::ParseError, "complex entries are [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

json matrix_to_json(const Matrix& m, Field field) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k), field));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, Field field) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::ParseError, "matrix must be a nonempty array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols)
      fail(ErrorKind::ParseError, "matrix rows have unequal lengths");
    for (Eigen::Index k = 0; k < cols; ++k)
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], field);
  }
  return m;
}

json vector_to_json(const Vector& v, Field field) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i), field));
  return out;
}

Vector vector_from_json(const json& j, Field field) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "vector must be an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = complex_from_json(j[static_cast<std::size_t>(i)], field);
  return v;
}

json measure_to_json(const FinMeasure& mu) {
  json support = json::array();
  for (const auto& e : mu.support()) support.push_back(element_to_json(mu.group(), e));
  return json{{"support", std::move(support)}, {"weights", mu.weights()}};
}

FinMeasure measure_from_json(const GroupPtr& group, const json& j, const Tolerances& tol) {
  std::vector<GroupElement> support;
  for (const auto& e : field(j, "support")) support.push_back(element_from_json(*group, e));
  auto weights = field(j, "weights").get<std::vector<double>>();
  return FinMeasure::make(group, std::move(support), std::move(weights), tol);
}

json rep_to_json(const UnitaryRep& rep) {
  json matrices = json::object();
  for (int i = 0; i < rep.group().generator_count(); ++i)
    matrices[rep.group().generator_labels()[i]] =
        matrix_to_json(rep.generator_matrix(i), rep.field());
  return json{{"dim", rep.dim()}, {"field", field_name(rep.field())},
              {"matrices", std::move(matrices)}};
}

UnitaryRep rep_from_json(const GroupPtr& group, const json& j, const Tolerances& tol) {
  std::string field_text = field(j, "field").get<std::string>();
  Field f;
  if (field_text == "real")
    f = Field::Real;
  else if (field_text == "complex")
    f = Field::Complex;
  else
    fail(ErrorKind::ParseError, "field must be 'real' or 'complex'");
  int dim = field(j, "dim").get<int>();
  std::map<std::string, Matrix> matrices;
  for (const auto& [label, m] : field(j, "matrices").items())
    matrices.emplace(label, matrix_from_json(m, f));
  auto rep = UnitaryRep::from_label_map(group, f, matrices, tol);
  if (rep.dim() != dim)
    fail(ErrorKind::ParseError, "declared dim does not match the matrices");
  return rep;
}

json cocycle_to_json(const Cocycle& c, const std::string& rep_name) {
  json values = json::object();
  for (int i = 0; i < c.group().generator_count(); ++i)
    values[c.group().generator_labels()[i]] =
        vector_to_json(c.generator_value(i), c.rep().field());
  return json{{"rep", rep_name}, {"gen_values", std::move(values)}};
}

json reasonableness_to_json(const ReasonablenessReport& report) {
  return json{{"symmetric", report.symmetric},
              {"generates", tri_state_name(report.generates)},
              {"second_moment", report.second_moment},
              {"nonsingular", report.nonsingular},
              {"admissible", report.admissible()},
              {"reasonable", report.reasonable()}};
}

json validation_to_json(const ValidationReport& report) {
  return json{{"max_unitary_residual", report.max_unitary_residual},
              {"max_relator_residual", report.max_relator_residual},
              {"max_pair_residual", report.max_pair_residual},
              {"pairs_checked", report.pairs_checked}};
}

json dims_to_json(const CohomologyDims& dims) {
  json out{{"dim_Z1", dims.dim_z1}, {"dim_B1", dims.dim_b1}, {"dim_H1", dims.dim_h1}};
  if (dims.dim_harmonic) out["dim_harmonic"] = *dims.dim_harmonic;
  if (dims.dim_z1_complex) {
    out["complex"] = json{{"dim_Z1", *dims.dim_z1_complex},
                          {"dim_B1", *dims.dim_b1_complex},
                          {"dim_H1", *dims.dim_h1_complex}};
    if (dims.dim_harmonic_complex) out["complex"]["dim_harmonic"] = *dims.dim_harmonic_complex;
  }
  if (dims.dim_harmonic) {
    out["kernel_exceeds_fixed"] = dims.kernel_exceeds_fixed;
    out["measure_generates"] = tri_state_name(dims.measure_generates);
  }
  // finite-dimensional B^1 is closed, so H1 here is also the reduced H1
  out["reduced_equals_unreduced"] = true;
  return out;
}

json harmonize_report_to_json(const HarmonizeReport& report) {
  const Cocycle& h = report.harmonic;
  json values = json::object();
  for (int i = 0; i < h.group().generator_count(); ++i)
    values[h.group().generator_labels()[i]] =
        vector_to_json(h.generator_value(i), h.rep().field());
  double max_uptick = 0.0;
  for (std::size_t i = 1; i < report.energy_trace.size(); ++i)
    max_uptick = std::max(max_uptick, report.energy_trace[i] - report.energy_trace[i - 1]);
  json trace{{"length", report.energy_trace.size()}, {"max_uptick", max_uptick}};
  if (!report.energy_trace.empty()) {
    trace["first"] = report.energy_trace.front();
    trace["last"] = report.energy_trace.back();
  }
  return json{{"method", report.method},
              {"iterations", report.iterations},
              {"converged", report.converged},
              {"center_residual", report.center_residual},
              {"energy_before", report.energy_before},
              {"energy_after", report.energy_after},
              {"energy_trace", std::move(trace)},
              {"shift", vector_to_json(report.shift, h.rep().field())},
              {"harmonic_gen_values", std::move(values)},
              {"kernel_exceeds_fixed", report.kernel_exceeds_fixed},
              {"dims", dims_to_json(report.dims)}};
}

json ball_function_to_json(const Group& group, const BallFunction& f) {
  json rows = json::array();
  for (const auto& [e, len] : f.domain)
    rows.push_back(json::array({element_to_json(group, e), len, f.values.at(e)}));
  return json{{"boundary_radius", f.boundary_radius},
              {"residual", f.residual},
              {"rows", std::move(rows)}};
}

json certificate_to_json(const LipschitzCertificate& cert) {
  return json{{"generator_norm_max", cert.generator_norm_max},
              {"analytic_bound", cert.analytic_bound},
              {"empirical_constant", cert.empirical_constant},
              {"max_harmonic_residual", cert.max_harmonic_residual},
              {"phi_at_identity", cert.phi_at_identity},
              {"pass", cert.pass}};
}

json selftest_to_json(const SelftestReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name},
                          {"passed", c.passed},
                          {"details", c.details},
                          {"millis", c.millis}});
  return json{{"seed", report.seed},
              {"all_passed", report.all_passed},
              {"total_millis", report.total_millis},
              {"checks", std::move(checks)}};
}

std::map<GroupElement, double> boundary_from_json(const Group& group, const json& j) {
  if (!j.is_array()) fail(ErrorKind::ParseError, "boundary values must be [[element, value], ...]");
  std::map<GroupElement, double> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      fail(ErrorKind::ParseError, "boundary entries are [element, value] pairs");
    out[element_from_json(group, pair[0])] = pair[1].get<double>();
  }
  return out;
}

}  // namespace jsonio

// ---------------------------------------------------------------------------
// Public string-level API

std::string group_spec_to_json_string(const GroupSpec& spec) {
  return jsonio::group_spec_to_json(spec).dump();
}

GroupSpec group_spec_from_json_string(const std::string& text) {
  return jsonio::group_spec_from_json(jsonio::parse_text(text));
}

std::string element_to_json_string(const Group& group, const GroupElement& element) {
  return jsonio::element_to_json(group, element).dump();
}

GroupElement element_from_json_string(const Group& group, const std::string& text) {
  return jsonio::element_from_json(group, jsonio::parse_text(text));
}

std::string measure_to_json_string(const FinMeasure& mu) {
  return jsonio::measure_to_json(mu).dump();
}

FinMeasure measure_from_json_string(const GroupPtr& group, const std::string& text) {
  return jsonio::measure_from_json(group, jsonio::parse_text(text));
}

std::string rep_to_json_string(const UnitaryRep& rep) { return jsonio::rep_to_json(rep).dump(); }

UnitaryRep rep_from_json_string(const GroupPtr& group, const std::string& text,
                                const Tolerances& tol) {
  return jsonio::rep_from_json(group, jsonio::parse_text(text), tol);
}

}  // namespace harmonics
