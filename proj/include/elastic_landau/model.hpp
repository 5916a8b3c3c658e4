#pragma once

#include <compare>
#include <numbers>
#include <optional>
#include <string>

namespace elastic_landau {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Flux quantum of the Aharonov-Casher phase in natural units (hbar = c = 1).
inline constexpr double kPhaseQuantum = kTwoPi;

/// Eigenvalue of sigma^3.
enum class Spin : int { down = -1, up = +1 };

constexpr int sign(Spin s) noexcept { return static_cast<int>(s); }

/// Converts +1/-1 into a Spin; anything else is a DomainError.
Spin spin_from_int(int s);

std::string to_string(Spin s);

/// Physical configuration of the dipole in the dislocated medium.
struct SystemParams {
  double m = 1.0;       // mass
  double mu = 0.0;      // magnetic dipole moment (sign encodes orientation)
  double lambda = 0.0;  // linear charge density on the dislocation axis
  double k = 1.0;       // longitudinal wavenumber
  Spin s = Spin::up;
  double omega = 0.0;   // dislocation strength
  std::optional<double> phi_ac_override;

  /// Geometric phase in use: the override when set, 2*pi*mu*lambda otherwise.
  [[nodiscard]] double phi_ac() const noexcept;

  /// Throws DomainError unless m > 0, k > 0, omega >= 0 and all fields are finite.
  void validate() const;

  [[nodiscard]] SystemParams with_spin(Spin spin) const {
    SystemParams p = *this;
    p.s = spin;
    return p;
  }
  [[nodiscard]] SystemParams with_phase(double phi) const {
    SystemParams p = *this;
    p.phi_ac_override = phi;
    return p;
  }
  [[nodiscard]] SystemParams with_omega(double w) const {
    SystemParams p = *this;
    p.omega = w;
    return p;
  }
};

/// Quantum numbers of one bound state. j = l + 1/2 is implied.
struct StateLabel {
  int n = 0;
  int l = 0;
  Spin s = Spin::up;

  friend auto operator<=>(const StateLabel&, const StateLabel&) = default;
};

std::string to_string(const StateLabel& st);

/// Omega = b_z * A / 2 for Burgers component b_z and areal density A >= 0.
double dislocation_strength(double b_z, double areal_density);

/// Aharonov-Casher phase 2*pi*mu*lambda.
double ac_phase(double mu, double lambda) noexcept;

/// gamma_s = l + (1 - s)/2 + s * phi_ac / (2 pi).
double effective_angular(int l, Spin s, double phi_ac) noexcept;

inline double effective_angular(const StateLabel& st, double phi_ac) noexcept {
  return effective_angular(st.l, st.s, phi_ac);
}

/// beta_s = 2 m E + 2 Omega k gamma - (k + s Omega / 2)^2, with s taken from p.
double beta(double energy, double gamma, const SystemParams& p) noexcept;

/// (k + s Omega / 2)^2 / (2m): the longitudinal plus spin-torsion energy.
double longitudinal_energy(const SystemParams& p, Spin s) noexcept;

}  // namespace elastic_landau
