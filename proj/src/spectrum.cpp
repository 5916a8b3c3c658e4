#include <elastic_landau/spectrum.hpp>

#include <algorithm>
#include <cmath>
#include <tuple>

#include <elastic_landau/error.hpp>
#include <elastic_landau/parallel.hpp>
#include <elastic_landau/specfun.hpp>

namespace elastic_landau {

std::string to_string(Method m) {
  switch (m) {
    case Method::analytic: return "analytic";
    case Method::hardwall_exact: return "hardwall_exact";
    case Method::hardwall_asymptotic: return "hardwall_asymptotic";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

void sort_levels(std::vector<EnergyLevel>& levels) {
  std::stable_sort(levels.begin(), levels.end(), [](const EnergyLevel& x, const EnergyLevel& y) {
    return std::tie(x.energy, x.state) < std::tie(y.energy, y.state);
  });
}

std::vector<StateLabel> enumerate_states(int n_max, int l_min, int l_max,
                                         const std::vector<Spin>& spins) {
  if (n_max < 0) throw DomainError("n_max must be >= 0");
  if (l_min > l_max) throw DomainError("l_min must not exceed l_max");
  if (spins.empty()) throw DomainError("spin set must not be empty");
  std::vector<StateLabel> states;
  for (int n = 0; n <= n_max; ++n)
    for (int l = l_min; l <= l_max; ++l)
      for (Spin s : spins) states.push_back({n, l, s});
  return states;
}

double energy_level(const StateLabel& state, const SystemParams& p) {
  p.validate();
  if (state.n < 0) throw DomainError("radial quantum number n must be >= 0");
  const double wk = p.omega * p.k;
  if (wk == 0.0)
    throw UnboundSystemError(
        "unbound system: Omega*k = 0 leaves no radial confinement, the neutral particle is free");
  const double g = effective_angular(state, p.phi_ac());
  return (2.0 * wk / p.m) * (state.n + std::abs(g) / 2.0 - g / 2.0 + 0.5) +
         longitudinal_energy(p, state.s);
}

double radial_wavefunction(double rho, const StateLabel& state, const SystemParams& p) {
  if (!(rho > 0.0)) throw DomainError("radial_wavefunction requires rho > 0");
  p.validate();
  if (state.n < 0) throw DomainError("radial quantum number n must be >= 0");
  const double wk = p.omega * p.k;
  if (wk == 0.0) throw UnboundSystemError("unbound system: Omega*k = 0");
  const double g = std::abs(effective_angular(state, p.phi_ac()));
  const double xi = wk * rho * rho;
  return std::exp(-xi / 2.0) * std::pow(xi, g / 2.0) *
         specfun::kummer_m(-static_cast<double>(state.n), g + 1.0, xi);
}

std::vector<EnergyLevel> spectrum_table(int n_max, int l_min, int l_max,
                                        const std::vector<Spin>& spins, const SystemParams& p,
                                        unsigned threads) {
  const auto states = enumerate_states(n_max, l_min, l_max, spins);
  std::vector<EnergyLevel> levels(states.size());
  parallel_for(states.size(), threads, [&](std::size_t i) {
    levels[i] = {states[i], energy_level(states[i], p), Method::analytic};
  });
  sort_levels(levels);
  return levels;
}

}  // namespace elastic_landau
