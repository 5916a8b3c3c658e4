#pragma once

#include <string>
#include <vector>

#include <elastic_landau/model.hpp>

namespace elastic_landau {

/// How an energy was obtained.
enum class Method { analytic, hardwall_exact, hardwall_asymptotic, oracle };

std::string to_string(Method m);

struct EnergyLevel {
  StateLabel state;
  double energy = 0.0;
  Method method = Method::analytic;
};

/// Sorts ascending by energy, ties broken by (n, l, s).
void sort_levels(std::vector<EnergyLevel>& levels);

/// Enumerates n in [0, n_max] x l in [l_min, l_max] x spins (spins in the given order).
std::vector<StateLabel> enumerate_states(int n_max, int l_min, int l_max,
                                         const std::vector<Spin>& spins);

/// Elastic Landau levels
///
///   E = (2 Omega k / m) [n + |gamma|/2 - gamma/2 + 1/2] + (k + s Omega/2)^2 / (2m).
///
/// The state's spin overrides p.s. Throws UnboundSystemError when Omega k == 0.
double energy_level(const StateLabel& state, const SystemParams& p);

/// Unnormalized radial function e^(-xi/2) xi^(|gamma|/2) M(-n, |gamma|+1, xi),
/// xi = Omega k rho^2. DomainError for rho <= 0.
double radial_wavefunction(double rho, const StateLabel& state, const SystemParams& p);

/// All levels for n <= n_max, l_min <= l <= l_max, s in spins, sorted.
std::vector<EnergyLevel> spectrum_table(int n_max, int l_min, int l_max,
                                        const std::vector<Spin>& spins, const SystemParams& p,
                                        unsigned threads = 1);

}  // namespace elastic_landau
