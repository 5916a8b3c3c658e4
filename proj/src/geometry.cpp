#include <elastic_landau/geometry.hpp>

#include <algorithm>
#include <cmath>

#include <elastic_landau/error.hpp>

namespace elastic_landau::geometry {

namespace {

// Orientation of eps_{t rho phi z}; fixed so that S^0 = -4 Omega.
constexpr double kOrientation = -1.0;

void check_rho(double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("radius rho must be > 0");
}

// Sign of the permutation (a, b, c, d) of (0, 1, 2, 3); 0 if any index repeats.
int permutation_sign(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  int sgn = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sgn = -sgn;
    }
  return sgn;
}

double det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 inverse3(const Mat3& m) {
  const double det = det3(m);
  Mat3 inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return inv;
}

// Triad as a function of the full coordinate point (rho, phi, z).
Mat3 triad_at(const std::array<double, 3>& x, double omega) { return triad(x[0], omega); }

double sqrt_det4(const Mat4& g4) {
  Mat3 spatial{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) spatial[i][j] = g4[i + 1][j + 1];
  return std::sqrt(g4[0][0] * det3(spatial));
}

}  // namespace

Mat3 triad(double rho, double omega) {
  check_rho(rho);
  Mat3 e{};
  e[0][0] = 1.0;
  e[1][1] = rho;
  e[2][1] = omega * rho * rho;
  e[2][2] = 1.0;
  return e;
}

Mat3 inverse_triad(double rho, double omega) {
  check_rho(rho);
  Mat3 e{};
  e[0][0] = 1.0;
  e[1][1] = 1.0 / rho;
  e[2][1] = -omega * rho;
  e[2][2] = 1.0;
  return e;
}

Mat3 metric_from_triad(double rho, double omega) {
  const Mat3 e = triad(rho, omega);
  Mat3 g{};
  for (int mu = 0; mu < 3; ++mu)
    for (int nu = 0; nu < 3; ++nu)
      for (int a = 0; a < 3; ++a) g[mu][nu] += e[a][mu] * e[a][nu];
  return g;
}

Tensor3 spin_connection(double rho) {
  check_rho(rho);
  Tensor3 w{};
  w[1][0][1] = -1.0;
  w[1][1][0] = 1.0;
  return w;
}

Tensor3 torsion_two_form(double rho, double omega, double h) {
  check_rho(rho);
  if (!(h > 0.0) || h >= rho)
    throw DomainError("finite-difference step must satisfy 0 < h < rho");

  const std::array<double, 3> x{rho, 0.0, 0.0};
  // de[mu][a][nu] = d_mu e^a_nu.
  Tensor3 de{};
  for (int mu = 0; mu < 3; ++mu) {
    auto xp = x;
    auto xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    const Mat3 ep = triad_at(xp, omega);
    const Mat3 em = triad_at(xm, omega);
    for (int a = 0; a < 3; ++a)
      for (int nu = 0; nu < 3; ++nu) de[mu][a][nu] = (ep[a][nu] - em[a][nu]) / (2.0 * h);
  }

  const Mat3 e = triad(rho, omega);
  const Tensor3 w = spin_connection(rho);
  Tensor3 t{};
  for (int a = 0; a < 3; ++a)
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        double v = de[mu][a][nu] - de[nu][a][mu];
        for (int b = 0; b < 3; ++b) v += w[mu][a][b] * e[b][nu] - w[nu][a][b] * e[b][mu];
        t[a][mu][nu] = v;
      }
  return t;
}

Tensor3 coordinate_torsion(const Tensor3& two_form, const Mat3& inverse) {
  Tensor3 t{};
  for (int b = 0; b < 3; ++b)
    for (int nu = 0; nu < 3; ++nu)
      for (int mu = 0; mu < 3; ++mu)
        for (int a = 0; a < 3; ++a) t[b][nu][mu] += inverse[b][a] * two_form[a][nu][mu];
  return t;
}

Tensor3 contortion_tensor(const Tensor3& torsion, const Mat3& metric) {
  const Mat3 inv = inverse3(metric);
  // mixed[nu][b][mu] = T_nu^b_mu = g_{nu a} g^{b c} T^a_{c mu}
  Tensor3 mixed{};
  for (int nu = 0; nu < 3; ++nu)
    for (int b = 0; b < 3; ++b)
      for (int mu = 0; mu < 3; ++mu)
        for (int a = 0; a < 3; ++a)
          for (int c = 0; c < 3; ++c) mixed[nu][b][mu] += metric[nu][a] * inv[b][c] * torsion[a][c][mu];

  Tensor3 k{};
  for (int b = 0; b < 3; ++b)
    for (int nu = 0; nu < 3; ++nu)
      for (int mu = 0; mu < 3; ++mu)
        k[b][nu][mu] = 0.5 * (torsion[b][nu][mu] - mixed[nu][b][mu] - mixed[mu][b][nu]);
  return k;
}

Tensor3 torsion_from_contortion(const Tensor3& k) {
  Tensor3 t{};
  for (int b = 0; b < 3; ++b)
    for (int nu = 0; nu < 3; ++nu)
      for (int mu = 0; mu < 3; ++mu) t[b][nu][mu] = k[b][nu][mu] - k[b][mu][nu];
  return t;
}

Tensor3 contortion_from_torsion(const TorsionData& t) {
  const Tensor3 kup = contortion_tensor(t.torsion, t.metric);
  // K_{b nu mu} with the first index lowered.
  Tensor3 klow{};
  for (int b = 0; b < 3; ++b)
    for (int nu = 0; nu < 3; ++nu)
      for (int mu = 0; mu < 3; ++mu)
        for (int c = 0; c < 3; ++c) klow[b][nu][mu] += t.metric[b][c] * kup[c][nu][mu];

  const Mat3& e = t.inverse_triad;  // e[mu][a] = e^mu_a
  Tensor3 out{};
  for (int mu = 0; mu < 3; ++mu)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double v = 0.0;
        for (int beta = 0; beta < 3; ++beta)
          for (int nu = 0; nu < 3; ++nu)
            v += klow[beta][nu][mu] * (e[nu][a] * e[beta][b] - e[nu][b] * e[beta][a]);
        out[mu][a][b] = v;
      }
  return out;
}

Mat4 embed_metric(const Mat3& metric) {
  Mat4 g{};
  g[0][0] = 1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i + 1][j + 1] = metric[i][j];
  return g;
}

double levi_civita_lower(const Mat4& metric4, int a, int b, int c, int d) {
  return kOrientation * sqrt_det4(metric4) * permutation_sign(a, b, c, d);
}

double levi_civita_upper(const Mat4& metric4, int a, int b, int c, int d) {
  return kOrientation * permutation_sign(a, b, c, d) / sqrt_det4(metric4);
}

TorsionDecomposition decompose_torsion(const TorsionData& t) {
  const Mat4 g = embed_metric(t.metric);
  Mat4 ginv{};
  {
    const Mat3 inv = inverse3(t.metric);
    ginv[0][0] = 1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) ginv[i + 1][j + 1] = inv[i][j];
  }

  // T^b_{nu mu} and T_{b nu mu} in 4-D.
  Tensor4 up{};
  for (int b = 0; b < 3; ++b)
    for (int nu = 0; nu < 3; ++nu)
      for (int mu = 0; mu < 3; ++mu) up[b + 1][nu + 1][mu + 1] = t.torsion[b][nu][mu];
  Tensor4 low{};
  for (int b = 0; b < 4; ++b)
    for (int nu = 0; nu < 4; ++nu)
      for (int mu = 0; mu < 4; ++mu)
        for (int c = 0; c < 4; ++c) low[b][nu][mu] += g[b][c] * up[c][nu][mu];

  TorsionDecomposition d;
  for (int mu = 0; mu < 4; ++mu)
    for (int b = 0; b < 4; ++b) d.trace[mu] += up[b][mu][b];

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu)
          d.axial[a] += levi_civita_upper(g, a, b, nu, mu) * low[b][nu][mu];

  double residual = 0.0;
  for (int b = 0; b < 4; ++b)
    for (int nu = 0; nu < 4; ++nu)
      for (int mu = 0; mu < 4; ++mu) {
        const double trace_part = (d.trace[nu] * g[b][mu] - d.trace[mu] * g[b][nu]) / 3.0;
        const double antisym = (low[b][nu][mu] + low[nu][mu][b] + low[mu][b][nu]) / 3.0;
        double axial_part = 0.0;
        for (int c = 0; c < 4; ++c) axial_part -= levi_civita_lower(g, b, nu, mu, c) * d.axial[c] / 6.0;
        d.q[b][nu][mu] = low[b][nu][mu] - trace_part - antisym;
        residual = std::max(residual,
                            std::abs(low[b][nu][mu] - (trace_part + axial_part + d.q[b][nu][mu])));
      }
  d.reconstruction_residual = residual;

  for (int mu = 0; mu < 4; ++mu) {
    double tr = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) tr += ginv[b][c] * d.q[c][mu][b];
    d.q_trace_residual = std::max(d.q_trace_residual, std::abs(tr));
  }
  for (int a = 0; a < 4; ++a) {
    double ax = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu) ax += levi_civita_upper(g, a, b, nu, mu) * d.q[b][nu][mu];
    d.q_axial_residual = std::max(d.q_axial_residual, std::abs(ax));
  }
  return d;
}

TorsionData torsion_data(double rho, double omega, double h) {
  check_rho(rho);
  TorsionData t;
  t.rho = rho;
  t.omega = omega;
  t.triad = triad(rho, omega);
  t.inverse_triad = inverse_triad(rho, omega);
  t.metric = metric_from_triad(rho, omega);
  t.torsion_two_form = torsion_two_form(rho, omega, h > 0.0 ? h : 1e-5 * rho);
  t.torsion = coordinate_torsion(t.torsion_two_form, t.inverse_triad);
  t.contortion = contortion_from_torsion(t);
  t.decomposition = decompose_torsion(t);
  return t;
}

}  // namespace elastic_landau::geometry
