#include <elastic_landau/currents.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <elastic_landau/error.hpp>
#include <elastic_landau/spectrum.hpp>

namespace elastic_landau {

namespace {

constexpr double kPi = std::numbers::pi;

double signum_or_throw(const StateLabel& state, const SystemParams& p) {
  const double g = effective_angular(state, p.phi_ac());
  if (g == 0.0)
    throw NonDifferentiableError("gamma_s = 0 for state " + to_string(state) +
                                 ": the level has a kink in phi_ac, current undefined");
  return g > 0.0 ? 1.0 : -1.0;
}

double landau_term(const StateLabel& state, const SystemParams& p, double sgn) {
  const double s = sign(state.s);
  return -(s / (2.0 * kPi)) * (p.omega * p.k / p.m) * (sgn - 1.0);
}

double hardwall_term(const StateLabel& state, const SystemParams& p, const WallConfig& w,
                     double sgn) {
  const double s = sign(state.s);
  const double g = effective_angular(state, p.phi_ac());
  return -(s / (4.0 * p.m * w.rho_b * w.rho_b)) * wall_phase_bracket(state.n, g) * sgn +
         (s / (2.0 * kPi)) * (p.omega * p.k / p.m);
}

// Moving phi to the left lowers gamma for s = +1 and raises it for s = -1.
OneSidedCurrent limits(const StateLabel& state, auto&& term) {
  const double left_sgn = state.s == Spin::up ? -1.0 : 1.0;
  return {term(left_sgn), term(-left_sgn)};
}

}  // namespace

OccupationSet::OccupationSet(std::vector<StateLabel> states) : states_(std::move(states)) {
  std::sort(states_.begin(), states_.end());
  for (const auto& st : states_)
    if (st.n < 0) throw DomainError("occupied state " + to_string(st) + " has n < 0");
  const auto dup = std::adjacent_find(states_.begin(), states_.end());
  if (dup != states_.end()) throw DomainError("duplicate occupied state " + to_string(*dup));
}

double landau_current_contribution(const StateLabel& state, const SystemParams& p) {
  p.validate();
  return landau_term(state, p, signum_or_throw(state, p));
}

double hardwall_current_contribution(const StateLabel& state, const SystemParams& p,
                                     const WallConfig& w) {
  p.validate();
  w.validate();
  return hardwall_term(state, p, w, signum_or_throw(state, p));
}

double current_landau(const OccupationSet& occ, const SystemParams& p) {
  double total = 0.0;
  for (const auto& st : occ.states()) total += landau_current_contribution(st, p);
  return total;
}

double current_hardwall(const OccupationSet& occ, const SystemParams& p, const WallConfig& w) {
  double total = 0.0;
  for (const auto& st : occ.states()) total += hardwall_current_contribution(st, p, w);
  return total;
}

OneSidedCurrent landau_current_limits(const StateLabel& state, const SystemParams& p) {
  p.validate();
  return limits(state, [&](double sgn) { return landau_term(state, p, sgn); });
}

OneSidedCurrent hardwall_current_limits(const StateLabel& state, const SystemParams& p,
                                        const WallConfig& w) {
  p.validate();
  w.validate();
  return limits(state, [&](double sgn) { return hardwall_term(state, p, w, sgn); });
}

double numeric_phase_derivative(const LevelFunction& level, double phi, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step h must be > 0");
  return (level(phi + h) - level(phi - h)) / (2.0 * h);
}

double state_phase_derivative(const StateLabel& state, const SystemParams& p, double h,
                              Spectrum spectrum, const WallConfig* wall) {
  if (!(h > 0.0)) throw DomainError("finite-difference step h must be > 0");
  const double phi = p.phi_ac();
  const double g_lo = effective_angular(state, phi - h);
  const double g_hi = effective_angular(state, phi + h);
  if (g_lo * g_hi <= 0.0)
    throw StraddleError("gamma_s changes sign inside the stencil for state " + to_string(state));
  if (spectrum != Spectrum::landau && wall == nullptr)
    throw DomainError("hard-wall derivative needs a wall configuration");

  const LevelFunction level = [&](double ph) {
    const SystemParams q = p.with_phase(ph);
    switch (spectrum) {
      case Spectrum::landau: return energy_level(state, q);
      case Spectrum::hardwall_asymptotic: return energy_asymptotic(state, q, *wall);
      case Spectrum::hardwall_exact: return energy_exact(state, q, *wall);
    }
    return 0.0;
  };
  return numeric_phase_derivative(level, phi, h);
}

}  // namespace elastic_landau
