#include "harmonics/workspace.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace harmonics {

namespace {

using jsonio::json;

Options options_from_json(const json& j) {
  Options opt;
  opt.seed = j.value("seed", opt.seed);
  opt.radius_cap = j.value("radius_cap", opt.radius_cap);
  opt.ball_limit = j.value("ball_limit", opt.ball_limit);
  opt.gen_radius = j.value("gen_radius", opt.gen_radius);
  opt.iter_tol = j.value("iter_tol", opt.iter_tol);
  opt.max_iter = j.value("max_iter", opt.max_iter);
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    opt.tol.mass = t.value("mass", opt.tol.mass);
    opt.tol.unitary = t.value("unitary", opt.tol.unitary);
    opt.tol.relator = t.value("relator", opt.tol.relator);
    opt.tol.harmonic = t.value("harmonic", opt.tol.harmonic);
    opt.tol.rank_rel = t.value("rank_rel", opt.tol.rank_rel);
    opt.tol.solve_rank_rel = t.value("solve_rank_rel", opt.tol.solve_rank_rel);
    opt.tol.subspace = t.value("subspace", opt.tol.subspace);
    opt.tol.dirichlet_residual = t.value("dirichlet_residual", opt.tol.dirichlet_residual);
  }
  return opt;
}

Cocycle cocycle_from_json(const json& j, const std::map<std::string, UnitaryRep>& reps,
                          std::string& rep_name_out, const Tolerances& tol) {
  rep_name_out = jsonio::require_field(j, "rep").get<std::string>();
  auto it = reps.find(rep_name_out);
  if (it == reps.end())
    fail(ErrorKind::ParseError, "cocycle references unknown rep '" + rep_name_out + "'");
  const UnitaryRep& rep = it->second;
  std::map<std::string, Vector> values;
  for (const auto& [label, v] : jsonio::require_field(j, "gen_values").items())
    values.emplace(label, jsonio::vector_from_json(v, rep.field()));
  return Cocycle::from_label_map(rep, values, tol);
}

}  // namespace

Workspace Workspace::from_json_string(const std::string& text) {
  json j = jsonio::parse_text(text);
  Workspace ws;
  ws.options = options_from_json(j.value("options", json::object()));
  ws.group = Group::make(jsonio::group_spec_from_json(jsonio::require_field(j, "group")));

  for (const auto& [name, m] : j.value("measures", json::object()).items())
    ws.measures.emplace(name, jsonio::measure_from_json(ws.group, m, ws.options.tol));
  for (const auto& [name, r] : j.value("reps", json::object()).items())
    ws.reps.emplace(name, jsonio::rep_from_json(ws.group, r, ws.options.tol));
  for (const auto& [name, cj] : j.value("cocycles", json::object()).items()) {
    std::string rep_name;
    auto c = cocycle_from_json(cj, ws.reps, rep_name, ws.options.tol);
    ws.cocycles.emplace(name, std::move(c));
    ws.cocycle_reps.emplace(name, std::move(rep_name));
  }

  for (const auto& [name, sj] : j.value("subgroups", json::object()).items()) {
    if (sj.contains("ambient")) {
      auto ambient_spec = jsonio::group_spec_from_json(sj["ambient"]);
      auto declared = Group::make(ambient_spec);
      if (jsonio::group_spec_to_json(declared->spec()) !=
          jsonio::group_spec_to_json(ws.group->spec()))
        fail(ErrorKind::ParseError,
             "subgroup '" + name + "' declares an ambient different from the workspace group");
    }
    auto lambda = Group::make(jsonio::group_spec_from_json(jsonio::require_field(sj, "subgroup")));
    std::vector<GroupElement> images;
    for (const auto& e : jsonio::require_field(sj, "subgroup_generators"))
      images.push_back(jsonio::element_from_json(*ws.group, e));
    std::vector<GroupElement> coset_reps;
    for (const auto& e : jsonio::require_field(sj, "coset_reps"))
      coset_reps.push_back(jsonio::element_from_json(*ws.group, e));
    SubgroupEntry entry{
        FiniteIndexSubgroup::make(ws.group, lambda, std::move(images), std::move(coset_reps)),
        {},
        {},
        {}};
    for (const auto& [rname, r] : sj.value("reps", json::object()).items())
      entry.reps.emplace(rname, jsonio::rep_from_json(lambda, r, ws.options.tol));
    for (const auto& [cname, cj] : sj.value("cocycles", json::object()).items()) {
      std::string rep_name;
      auto c = cocycle_from_json(cj, entry.reps, rep_name, ws.options.tol);
      entry.cocycles.emplace(cname, std::move(c));
      entry.cocycle_reps.emplace(cname, std::move(rep_name));
    }
    ws.subgroups.emplace(name, std::move(entry));
  }
  return ws;
}

Workspace Workspace::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open workspace file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_string(buffer.str());
}

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& map, const std::string& name,
                                        const char* what) {
  auto it = map.find(name);
  if (it == map.end())
    fail(ErrorKind::InvalidArgument, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

const FinMeasure& Workspace::measure(const std::string& name) const {
  return lookup(measures, name, "measure");
}
const UnitaryRep& Workspace::rep(const std::string& name) const {
  return lookup(reps, name, "rep");
}
const Cocycle& Workspace::cocycle(const std::string& name) const {
  return lookup(cocycles, name, "cocycle");
}
const SubgroupEntry& Workspace::subgroup(const std::string& name) const {
  return lookup(subgroups, name, "subgroup");
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << "fnv1a:" << std::hex << h;
  return out.str();
}

}  // namespace harmonics
