#include <elastic_landau/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include <elastic_landau/error.hpp>
#include <elastic_landau/parallel.hpp>
#include <elastic_landau/spectrum.hpp>

namespace elastic_landau::oracle {

namespace {

// -ln(1e-12), the Gaussian tail cut of the natural domain.
constexpr double kTailExponent = 27.631021115928547;

TridiagonalOperator half_power(double gamma, const SystemParams& p, const RadialGrid& g) {
  const auto n = static_cast<std::size_t>(g.n_points);
  const double h = g.rho_max / (g.n_points + 1);
  const double kinetic = 1.0 / (2.0 * p.m * h * h);
  TridiagonalOperator op;
  op.diagonal.resize(n);
  op.off_diagonal.assign(n - 1, -kinetic);
  for (std::size_t j = 0; j < n; ++j) {
    const double rho = h * static_cast<double>(j + 1);
    op.diagonal[j] = 2.0 * kinetic + (gamma * gamma - 0.25) / (2.0 * p.m * rho * rho) +
                     radial_potential(rho, gamma, p);
  }
  return op;
}

TridiagonalOperator regular_factor(double gamma, const SystemParams& p, const RadialGrid& g) {
  const auto n = static_cast<std::size_t>(g.n_points);
  const double h = g.rho_max / g.n_points;
  const double q = 2.0 * std::abs(gamma) + 1.0;

  // weight[j] = int over [max(0, (j - 1/2) h), (j + 1/2) h] of rho^q.
  std::vector<double> weight(n);
  std::vector<double> flux(n);  // rho^q at the face (j + 1/2) h
  for (std::size_t j = 0; j < n; ++j) {
    const double hi = (static_cast<double>(j) + 0.5) * h;
    const double lo = j == 0 ? 0.0 : (static_cast<double>(j) - 0.5) * h;
    weight[j] = (std::pow(hi, q + 1.0) - std::pow(lo, q + 1.0)) / (q + 1.0);
    flux[j] = std::pow(hi, q);
  }

  TridiagonalOperator op;
  op.diagonal.resize(n);
  op.off_diagonal.resize(n - 1);
  const double scale = 1.0 / (2.0 * p.m * h);
  for (std::size_t j = 0; j < n; ++j) {
    const double left = j == 0 ? 0.0 : flux[j - 1];
    op.diagonal[j] = scale * (left + flux[j]) / weight[j] +
                     radial_potential(h * static_cast<double>(j), gamma, p);
    if (j + 1 < n) op.off_diagonal[j] = -scale * flux[j] / std::sqrt(weight[j] * weight[j + 1]);
  }
  return op;
}

double bisect_eigenvalue(const TridiagonalOperator& op, std::size_t index, double lo, double hi,
                         double abs_tol) {
  // Invariant: sturm_count(lo) <= index < sturm_count(hi).
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double resolution =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    if (hi - lo <= std::max(abs_tol, resolution)) break;
    if (sturm_count(op, mid) > index)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void RadialGrid::validate() const {
  if (n_points < 100) throw DomainError("radial grid needs at least 100 points");
  if (!(rho_max > 0.0) || !std::isfinite(rho_max)) throw DomainError("rho_max must be > 0");
}

double radial_potential(double rho, double gamma, const SystemParams& p) noexcept {
  const double wk = p.omega * p.k;
  return wk * wk * rho * rho / (2.0 * p.m) - wk * gamma / p.m + longitudinal_energy(p, p.s);
}

TridiagonalOperator discretize_radial(double gamma, const SystemParams& p, const RadialGrid& g,
                                      RadialScheme scheme) {
  p.validate();
  g.validate();
  return scheme == RadialScheme::half_power ? half_power(gamma, p, g) : regular_factor(gamma, p, g);
}

std::size_t sturm_count(const TridiagonalOperator& op, double x) {
  const std::size_t n = op.size();
  std::size_t negatives = 0;
  double pivot = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < n; ++i) {
    const double coupling = i == 0 ? 0.0 : op.off_diagonal[i - 1] * op.off_diagonal[i - 1];
    pivot = (op.diagonal[i] - x) - (i == 0 ? 0.0 : coupling / pivot);
    if (pivot == 0.0) pivot = -tiny;
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

std::vector<double> lowest_eigenvalues(const TridiagonalOperator& op, int count,
                                       std::optional<double> abs_tol) {
  const std::size_t n = op.size();
  if (count < 1 || static_cast<std::size_t>(count) > n)
    throw DomainError("eigenvalue count must lie in [1, matrix dimension]");
  if (op.off_diagonal.size() + 1 != n) throw DomainError("malformed tridiagonal operator");

  // Gershgorin interval.
  double lower = std::numeric_limits<double>::infinity();
  double upper = -lower;
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
    lower = std::min(lower, op.diagonal[i] - radius);
    upper = std::max(upper, op.diagonal[i] + radius);
    scale = std::max(scale, std::abs(op.diagonal[i]));
  }
  const double pad = 1e-12 * std::max(scale, 1.0);
  lower -= pad;
  upper += pad;
  const double tol = abs_tol.value_or(1e-12 * scale);

  std::vector<double> values(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = bisect_eigenvalue(op, k, lower, upper, tol);
  return values;
}

double natural_rho_max(const SystemParams& p) {
  const double wk = p.omega * p.k;
  if (!(wk > 0.0)) throw UnboundSystemError("unbound system: Omega*k = 0 has no natural domain");
  return std::sqrt(2.0 * kTailExponent / wk);
}

bool VerificationReport::all_passed() const noexcept {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(),
                                        [](const StateCheck& c) { return c.passed; });
}

double VerificationReport::max_rel_error() const noexcept {
  double worst = 0.0;
  for (const auto& c : checks)
    worst = std::max(worst, c.error.empty() ? c.rel_error : std::numeric_limits<double>::infinity());
  return worst;
}

VerificationReport verify_spectrum(const std::vector<StateLabel>& states, const SystemParams& p,
                                   const VerifyOptions& opt) {
  VerificationReport report;
  report.reference = opt.wall ? Method::hardwall_exact : Method::analytic;
  report.checks.resize(states.size());

  // Channels (l, s) and the highest n requested in each.
  std::map<std::pair<int, Spin>, int> channels;
  for (const auto& st : states) {
    if (st.n < 0) continue;
    auto& top = channels[{st.l, st.s}];
    top = std::max(top, st.n);
  }
  std::vector<std::pair<std::pair<int, Spin>, int>> work(channels.begin(), channels.end());
  std::vector<std::vector<double>> extrapolated(work.size());
  std::vector<std::string> channel_error(work.size());

  parallel_for(work.size(), opt.threads, [&](std::size_t c) {
    const auto [ls, top] = work[c];
    try {
      const SystemParams q = p.with_spin(ls.second);
      q.validate();
      double rho_max = 0.0;
      if (opt.wall) {
        opt.wall->validate();
        if (!(q.omega * q.k > 0.0))
          throw UnboundSystemError("unbound system: Omega*k = 0, no Kummer wall spectrum");
        rho_max = opt.wall->rho_b;
      } else {
        rho_max = opt.rho_max.value_or(natural_rho_max(q));
      }
      const double gamma = effective_angular(ls.first, ls.second, q.phi_ac());
      const RadialGrid coarse{opt.n_points, rho_max, opt.wall.has_value()};
      const RadialGrid fine{2 * opt.n_points, rho_max, opt.wall.has_value()};
      const auto e1 = lowest_eigenvalues(discretize_radial(gamma, q, coarse, opt.scheme), top + 1, 1e-14);
      const auto e2 = lowest_eigenvalues(discretize_radial(gamma, q, fine, opt.scheme), top + 1, 1e-14);
      auto& out = extrapolated[c];
      out.resize(e1.size());
      for (std::size_t i = 0; i < e1.size(); ++i) out[i] = (4.0 * e2[i] - e1[i]) / 3.0;
    } catch (const std::exception& e) {
      channel_error[c] = e.what();
    }
  });

  parallel_for(states.size(), opt.threads, [&](std::size_t i) {
    const auto& st = states[i];
    auto& check = report.checks[i];
    check.state = st;
    check.gamma = effective_angular(st, p.phi_ac());
    if (st.n < 0) {
      check.error = "radial quantum number n must be >= 0";
      return;
    }
    const auto it = std::find_if(work.begin(), work.end(), [&](const auto& w) {
      return w.first == std::make_pair(st.l, st.s);
    });
    const auto c = static_cast<std::size_t>(it - work.begin());
    if (!channel_error[c].empty()) {
      check.error = channel_error[c];
      return;
    }
    try {
      check.analytic = opt.wall ? energy_exact(st, p, *opt.wall) : energy_level(st, p);
      check.oracle = extrapolated[c][static_cast<std::size_t>(st.n)];
      check.rel_error = std::abs(check.oracle - check.analytic) / std::abs(check.analytic);
      check.passed = check.rel_error <= opt.tol;
    } catch (const std::exception& e) {
      check.error = e.what();
    }
  });
  return report;
}

}  // namespace elastic_landau::oracle
