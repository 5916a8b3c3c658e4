#pragma once

#include <optional>
#include <string>
#include <vector>

#include <elastic_landau/hardwall.hpp>
#include <elastic_landau/model.hpp>

namespace elastic_landau::oracle {

/// Uniform radial grid; the origin is never an unknown of the half-power scheme.
struct RadialGrid {
  int n_points = 4000;
  double rho_max = 1.0;
  /// true: rho_max is a physical hard wall; false: rho_max truncates a
  /// Gaussian-decaying natural domain (the boundary condition is the same).
  bool dirichlet_at_rho_max = false;

  void validate() const;
};

/// Symmetric tridiagonal matrix (single off-diagonal array).
struct TridiagonalOperator {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  [[nodiscard]] std::size_t size() const noexcept { return diagonal.size(); }
};

enum class RadialScheme {
  /// u = sqrt(rho) R on nodes rho_j = j h, j = 1..N, h = rho_max / (N + 1):
  ///   -u''/2m + [(gamma^2 - 1/4)/(2 m rho^2) + V(rho)] u = E u,
  /// Dirichlet at both ends. Second order once |gamma| >= 1; for smaller
  /// |gamma| the u ~ rho^(|gamma|+1/2) behaviour at the origin limits the
  /// eigenvalue error to O(h^(2|gamma|)).
  half_power,
  /// R = rho^|gamma| w with w smooth and even: the Sturm-Liouville problem
  ///   -(1/2m) rho^-q (rho^q w')' + V w = E w,  q = 2|gamma| + 1,
  /// discretized by vertex-centred finite volumes on rho_j = j h,
  /// j = 0..N-1, h = rho_max / N, with exact rho^q cell weights and the
  /// Dirichlet node at rho_max. Symmetrized by the square root of the weights.
  /// Second order for every gamma.
  regular_factor,
};

/// V(rho) = Omega^2 k^2 rho^2 / 2m - Omega k gamma / m + (k + s Omega/2)^2 / 2m, with s from p.
double radial_potential(double rho, double gamma, const SystemParams& p) noexcept;

TridiagonalOperator discretize_radial(double gamma, const SystemParams& p, const RadialGrid& g,
                                      RadialScheme scheme = RadialScheme::half_power);

/// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
std::size_t sturm_count(const TridiagonalOperator& op, double x);

/// The `count` smallest eigenvalues, ascending, by Sturm bisection. Each is
/// bisected until its bracket is below abs_tol (default 1e-12 * max|diag|)
/// or below machine resolution.
std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count,
                                       std::optional<double> abs_tol = std::nullopt);

/// rho_max with exp(-Omega k rho^2 / 2) = 1e-12.
double natural_rho_max(const SystemParams& p);

struct VerifyOptions {
  double tol = 1e-6;
  int n_points = 4000;                 // coarse grid; the fine grid uses 2N
  std::optional<double> rho_max;       // natural domain; default natural_rho_max
  std::optional<WallConfig> wall;      // set: compare against energy_exact
  RadialScheme scheme = RadialScheme::regular_factor;
  unsigned threads = 1;
};

struct StateCheck {
  StateLabel state;
  double gamma = 0.0;
  double analytic = 0.0;
  double oracle = 0.0;  // Richardson extrapolation (4 E_2N - E_N) / 3
  double rel_error = 0.0;
  bool passed = false;
  std::string error;  // non-empty when the state could not be evaluated
};

struct VerificationReport {
  std::vector<StateCheck> checks;  // in the order of the requested states
  Method reference = Method::analytic;

  [[nodiscard]] bool all_passed() const noexcept;
  [[nodiscard]] double max_rel_error() const noexcept;
};

/// Compares the finite-difference spectrum of each (l, s) channel with
/// energy_level (natural domain) or energy_exact (opt.wall set). Per-state
/// failures are recorded in the report; the batch is never aborted.
VerificationReport verify_spectrum(const std::vector<StateLabel>& states, const SystemParams& p,
                                   const VerifyOptions& opt = {});

}  // namespace elastic_landau::oracle
