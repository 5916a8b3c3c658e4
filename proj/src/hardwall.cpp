#include <elastic_landau/hardwall.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include <elastic_landau/error.hpp>
#include <elastic_landau/parallel.hpp>
#include <elastic_landau/specfun.hpp>

namespace elastic_landau {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisections = 200;

void check_state(const StateLabel& state) {
  if (state.n < 0) throw DomainError("radial quantum number n must be >= 0");
}

// Energy for a given beta in the (gamma, s) channel.
struct Channel {
  double m;
  double wk;
  double gamma;
  double longitudinal;  // (k + s Omega/2)^2

  [[nodiscard]] double energy(double beta) const {
    return (beta - 2.0 * wk * gamma + longitudinal) / (2.0 * m);
  }
  [[nodiscard]] double beta_of(double energy) const {
    return 2.0 * m * energy + 2.0 * wk * gamma - longitudinal;
  }
};

}  // namespace

void WallConfig::validate() const {
  if (!(rho_b > 0.0) || !std::isfinite(rho_b)) throw DomainError("wall radius rho_b must be > 0");
  if (!(root_tol > 0.0)) throw DomainError("root_tol must be > 0");
  if (bracket_step < 0.0 || !std::isfinite(bracket_step))
    throw DomainError("bracket_step must be >= 0 (0 = automatic)");
}

double wall_phase_bracket(int n, double gamma) noexcept {
  return n * kPi + std::abs(gamma) * kPi / 2.0 + 3.0 * kPi / 4.0;
}

double energy_asymptotic(const StateLabel& state, const SystemParams& p, const WallConfig& w) {
  p.validate();
  w.validate();
  check_state(state);
  const double g = effective_angular(state, p.phi_ac());
  const double bracket = wall_phase_bracket(state.n, g);
  return bracket * bracket / (2.0 * p.m * w.rho_b * w.rho_b) - p.omega * p.k * g / p.m +
         longitudinal_energy(p, state.s);
}

double energy_exact(const StateLabel& state, const SystemParams& p, const WallConfig& w) {
  p.validate();
  w.validate();
  check_state(state);
  const double wk = p.omega * p.k;
  if (!(wk > 0.0))
    throw DomainError("exact hard-wall spectrum needs Omega*k > 0 (use energy_asymptotic at Omega = 0)");

  const double g = effective_angular(state, p.phi_ac());
  const double abs_g = std::abs(g);
  const double rb2 = w.rho_b * w.rho_b;
  const double xi0 = wk * rb2;
  const double b = abs_g + 1.0;
  const double shifted = p.k + sign(state.s) * p.omega / 2.0;
  const Channel ch{p.m, wk, g, shifted * shifted};

  // R(rho_b) = prefactor * M; the prefactor must stay nonzero in floating point
  // or every energy would satisfy the wall condition.
  const double log_prefactor = -xi0 / 2.0 + abs_g / 2.0 * std::log(xi0);
  if (!(std::exp(log_prefactor) > 0.0))
    throw NumericalError("radial prefactor underflows at the wall; wall condition is degenerate");

  auto wall_value = [&](double energy) {
    const double a = abs_g / 2.0 + 0.5 - ch.beta_of(energy) / (4.0 * wk);
    return specfun::kummer_m(a, b, xi0);
  };

  const double x0 = wall_phase_bracket(0, g);
  const double lowest_spacing = ((x0 + kPi) * (x0 + kPi) - x0 * x0) / (2.0 * p.m * rb2);
  const double step = w.bracket_step > 0.0 ? w.bracket_step : lowest_spacing / 20.0;

  const double xn = wall_phase_bracket(state.n, g);
  const double beta_cap = ((xn + kPi) * (xn + kPi) + xi0 * xi0) / rb2;
  const double e_cap = ch.energy(beta_cap);

  double lo = ch.energy(0.0);
  double f_lo = wall_value(lo);
  int found = 0;
  while (lo < e_cap) {
    const double hi = lo + step;
    const double f_hi = wall_value(hi);
    if ((f_lo > 0.0) != (f_hi > 0.0)) {
      if (found == state.n) {
        double a = lo;
        double c = hi;
        double fa = f_lo;
        for (int it = 0; it < kMaxBisections && c - a > w.root_tol; ++it) {
          const double mid = 0.5 * (a + c);
          const double fm = wall_value(mid);
          if (fm == 0.0) return mid;
          if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
          } else {
            c = mid;
          }
        }
        return 0.5 * (a + c);
      }
      ++found;
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw RootNotFoundError("no Kummer zero #" + std::to_string(state.n + 1) + " for state " +
                          to_string(state) + " below E = " + std::to_string(e_cap));
}

std::vector<EnergyLevel> wall_spectrum_table(int n_max, int l_min, int l_max,
                                             const std::vector<Spin>& spins,
                                             const SystemParams& p, const WallConfig& w,
                                             WallMethod method, unsigned threads) {
  const auto states = enumerate_states(n_max, l_min, l_max, spins);
  std::vector<EnergyLevel> levels(states.size());
  parallel_for(states.size(), threads, [&](std::size_t i) {
    if (method == WallMethod::exact)
      levels[i] = {states[i], energy_exact(states[i], p, w), Method::hardwall_exact};
    else
      levels[i] = {states[i], energy_asymptotic(states[i], p, w), Method::hardwall_asymptotic};
  });
  sort_levels(levels);
  return levels;
}

}  // namespace elastic_landau
