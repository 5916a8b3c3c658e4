#pragma once

#include <functional>
#include <vector>

#include <elastic_landau/hardwall.hpp>
#include <elastic_landau/model.hpp>

namespace elastic_landau {

/// The occupied states summed over in a persistent current. Kept sorted by
/// (n, l, s) so sums have a fixed order.
class OccupationSet {
 public:
  OccupationSet() = default;
  /// DomainError on duplicates or negative n.
  explicit OccupationSet(std::vector<StateLabel> states);

  [[nodiscard]] const std::vector<StateLabel>& states() const noexcept { return states_; }
  [[nodiscard]] std::size_t size() const noexcept { return states_.size(); }

 private:
  std::vector<StateLabel> states_;
};

/// -dE/dphi for one Landau level: -(s / 2pi)(Omega k / m)[sgn(gamma) - 1].
/// NonDifferentiableError when gamma == 0.
double landau_current_contribution(const StateLabel& state, const SystemParams& p);

/// -dE/dphi for one asymptotic hard-wall level:
/// -(s / 4 m rho_b^2)[n pi + |gamma| pi/2 + 3pi/4] sgn(gamma) + (s / 2pi)(Omega k / m).
double hardwall_current_contribution(const StateLabel& state, const SystemParams& p,
                                     const WallConfig& w);

double current_landau(const OccupationSet& occ, const SystemParams& p);
double current_hardwall(const OccupationSet& occ, const SystemParams& p, const WallConfig& w);

/// Left and right limits (in phi) of a per-state current at a kink.
struct OneSidedCurrent {
  double left = 0.0;
  double right = 0.0;
};

OneSidedCurrent landau_current_limits(const StateLabel& state, const SystemParams& p);
OneSidedCurrent hardwall_current_limits(const StateLabel& state, const SystemParams& p,
                                        const WallConfig& w);

using LevelFunction = std::function<double(double)>;

/// Central difference [f(phi + h) - f(phi - h)] / (2h). DomainError for h <= 0.
double numeric_phase_derivative(const LevelFunction& level, double phi, double h);

enum class Spectrum { landau, hardwall_asymptotic, hardwall_exact };

/// dE/dphi of one state by central differences in phi_ac. Throws StraddleError
/// when gamma changes sign (or vanishes) on [phi - h, phi + h].
double state_phase_derivative(const StateLabel& state, const SystemParams& p, double h,
                              Spectrum spectrum, const WallConfig* wall = nullptr);

}  // namespace elastic_landau
