#pragma once

#include <vector>

#include <elastic_landau/model.hpp>
#include <elastic_landau/spectrum.hpp>

namespace elastic_landau {

/// Impenetrable wall R(rho_b) = 0.
struct WallConfig {
  double rho_b = 1.0;
  /// Energy step for isolating sign changes; 0 selects 1/20 of the lowest
  /// asymptotic level spacing of the (l, s) channel.
  double bracket_step = 0.0;
  /// Absolute tolerance on the bisected energy.
  double root_tol = 1e-12;

  void validate() const;
};

/// n pi + |gamma| pi / 2 + 3 pi / 4: rho_b sqrt(beta) at the n-th zero of the
/// cosine in the large-|a| Kummer approximation.
double wall_phase_bracket(int n, double gamma) noexcept;

/// Hard-wall levels from the large-|a| Kummer approximation:
///
///   E = [n pi + |gamma| pi/2 + 3 pi/4]^2 / (2 m rho_b^2) - (Omega k / m) gamma + (k + s Omega/2)^2 / (2m).
///
/// Finite for Omega = 0, where it reduces to the defect-free quantum dot.
double energy_asymptotic(const StateLabel& state, const SystemParams& p, const WallConfig& w);

/// Hard-wall level from the (n+1)-th zero, in increasing E, of
/// M(a(E), |gamma| + 1, Omega k rho_b^2) with a(E) = |gamma|/2 + 1/2 - beta(E) / (4 Omega k).
///
/// M has no zero for beta <= 0, so the scan starts at beta = 0 and counts sign
/// changes upward in steps of w.bracket_step; each bracket is bisected to
/// w.root_tol. Requires Omega k > 0 (DomainError). RootNotFoundError if n+1
/// zeros are not found below a bound derived from the wall spectrum plus the
/// largest harmonic term.
double energy_exact(const StateLabel& state, const SystemParams& p, const WallConfig& w);

enum class WallMethod { exact, asymptotic };

std::vector<EnergyLevel> wall_spectrum_table(int n_max, int l_min, int l_max,
                                             const std::vector<Spin>& spins,
                                             const SystemParams& p, const WallConfig& w,
                                             WallMethod method, unsigned threads = 1);

}  // namespace elastic_landau
