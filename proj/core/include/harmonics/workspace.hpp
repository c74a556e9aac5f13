#pragma once

#include <map>
#include <string>

#include "harmonics/cocycle.hpp"
#include "harmonics/induction.hpp"

namespace harmonics {

/// Run-wide knobs; the tolerance block mirrors the Tolerances struct.
struct Options {
  std::uint64_t seed = 0;
  int radius_cap = limits::radius_cap;
  std::size_t ball_limit = limits::ball_limit;
  int gen_radius = limits::gen_radius;
  double iter_tol = limits::iteration_tol;
  int max_iter = limits::max_iterations;
  Tolerances tol;
};

struct SubgroupEntry {
  FiniteIndexSubgroup subgroup;
  std::map<std::string, UnitaryRep> reps;          // on the subgroup
  std::map<std::string, Cocycle> cocycles;         // on the subgroup
  std::map<std::string, std::string> cocycle_reps; // cocycle name -> rep name
};

/// One JSON document holding a group with named measures, representations,
/// cocycles and finite-index subgroups. Parsing constructs every object
/// through its validating constructor, so a loaded workspace is valid.
struct Workspace {
  GroupPtr group;
  std::map<std::string, FinMeasure> measures;
  std::map<std::string, UnitaryRep> reps;
  std::map<std::string, Cocycle> cocycles;
  std::map<std::string, std::string> cocycle_reps;  // cocycle name -> rep name
  std::map<std::string, SubgroupEntry> subgroups;
  Options options;

  static Workspace from_json_string(const std::string& text);
  static Workspace from_file(const std::string& path);

  const FinMeasure& measure(const std::string& name) const;
  const UnitaryRep& rep(const std::string& name) const;
  const Cocycle& cocycle(const std::string& name) const;
  const SubgroupEntry& subgroup(const std::string& name) const;
};

/// FNV-1a of the raw bytes; used to stamp reports with their input.
std::string content_digest(const std::string& bytes);

}  // namespace harmonics
