#include <elastic_landau/model.hpp>

#include <cmath>

#include <elastic_landau/error.hpp>

namespace elastic_landau {

Spin spin_from_int(int s) {
  if (s == 1) return Spin::up;
  if (s == -1) return Spin::down;
  throw DomainError("spin must be +1 or -1, got " + std::to_string(s));
}

std::string to_string(Spin s) { return s == Spin::up ? "+1" : "-1"; }

std::string to_string(const StateLabel& st) {
  return "(n=" + std::to_string(st.n) + ", l=" + std::to_string(st.l) +
         ", s=" + to_string(st.s) + ")";
}

double SystemParams::phi_ac() const noexcept {
  return phi_ac_override ? *phi_ac_override : ac_phase(mu, lambda);
}

void SystemParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(m) || !finite(mu) || !finite(lambda) || !finite(k) || !finite(omega) ||
      (phi_ac_override && !finite(*phi_ac_override)))
    throw DomainError("system parameters must be finite");
  if (m <= 0.0) throw DomainError("mass m must be positive");
  if (k <= 0.0) throw DomainError("wavenumber k must be positive");
  if (omega < 0.0) throw DomainError("dislocation strength omega must be non-negative");
  (void)spin_from_int(sign(s));
}

double dislocation_strength(double b_z, double areal_density) {
  if (!(areal_density >= 0.0)) throw DomainError("areal dislocation density must be >= 0");
  return b_z * areal_density / 2.0;
}

double ac_phase(double mu, double lambda) noexcept { return kTwoPi * mu * lambda; }

double effective_angular(int l, Spin s, double phi_ac) noexcept {
  const int sg = sign(s);
  return static_cast<double>(l) + 0.5 * (1 - sg) + sg * phi_ac / kPhaseQuantum;
}

double beta(double energy, double gamma, const SystemParams& p) noexcept {
  const double shifted = p.k + sign(p.s) * p.omega / 2.0;
  return 2.0 * p.m * energy + 2.0 * p.omega * p.k * gamma - shifted * shifted;
}

double longitudinal_energy(const SystemParams& p, Spin s) noexcept {
  const double shifted = p.k + sign(s) * p.omega / 2.0;
  return shifted * shifted / (2.0 * p.m);
}

}  // namespace elastic_landau
