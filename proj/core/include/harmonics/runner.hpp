#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "harmonics/workspace.hpp"

namespace harmonics {

/// Parsed command line for the CLI; `run_command` is the whole program so
/// tests can drive it without spawning processes.
struct CliOptions {
  std::string command;
  std::string workspace_path;

  std::string cocycle_name;
  std::string rep_name;
  std::string measure_name;
  std::string subgroup_name;
  std::vector<std::string> measure_names;  // decompose: one per factor

  std::string method = "direct";  // harmonize
  int radius = 3;                 // dirichlet / phiv
  std::string shift_json;         // energy
  std::string direction_json;     // energy
  std::string vector_json;        // phiv
  std::string boundary_spec;      // dirichlet: inline JSON or a file path

  std::optional<double> iter_tol;
  std::optional<int> max_iter;
  std::optional<std::uint64_t> seed;
  std::optional<double> relator_tol;
  std::optional<double> harmonic_tol;
  std::optional<double> rank_rel_tol;
  bool pretty = false;
};

/// Returns the process exit code: 0 success, 1 validation error, 2 numerical
/// failure, 3 internal invariant violation. Reports go to `out` as a single
/// JSON document; errors go to `err` as a machine-readable JSON object.
int run_command(const CliOptions& cli, std::ostream& out, std::ostream& err);

}  // namespace harmonics
