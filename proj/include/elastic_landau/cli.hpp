#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <elastic_landau/model.hpp>

namespace elastic_landau::cli {

enum class OutputFormat { csv, json };

struct PhaseSweep {
  double start = 0.0;
  double stop = 0.0;
  int steps = 2;  // number of sample points, endpoints included
};

/// Everything a subcommand needs. Loaded from a flat JSON object whose keys
/// are the field names below, then overridden by command-line flags.
struct RunConfig {
  SystemParams params;
  std::optional<double> b_z;            // with areal_density, defines omega
  std::optional<double> areal_density;
  std::optional<double> rho_b;
  int n_max = 2;
  int l_min = -2;
  int l_max = 2;
  std::vector<Spin> s_set{Spin::up, Spin::down};
  std::optional<PhaseSweep> phi_sweep;
  std::optional<std::vector<StateLabel>> occupation;
  OutputFormat output_format = OutputFormat::csv;
  int oracle_points = 4000;
  std::optional<double> oracle_rho_max;
  double tol = 1e-6;
  double bracket_step = 0.0;
  double root_tol = 1e-12;
  std::string method;  // per command: landau | exact | asymptotic
  std::string quantity = "energy";  // sweep: energy | current
  double derivative_step = 1e-5;
  bool one_sided = false;
  double rho = 1.0;      // geometry-verify sample radius
  double fd_step = 0.0;  // geometry-verify exterior-derivative step (0 = 1e-5 rho)

  /// DomainError naming the first offending field.
  void validate() const;
};

/// Applies a flat JSON object onto cfg. Unknown keys and ill-typed values are
/// rejected with a DomainError naming the key.
void apply_config_json(const nlohmann::json& j, RunConfig& cfg);

/// Entry point shared by the executable and the tests. Exit codes: 0 success,
/// 1 validation error, 2 numerical failure (including failed verification).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace elastic_landau::cli
