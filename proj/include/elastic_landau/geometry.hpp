#pragma once

#include <array>

namespace elastic_landau::geometry {

// Coordinate indices (rho, phi, z) = (0, 1, 2); frame indices a = 1, 2, 3 are
// stored as 0, 1, 2. Four-dimensional quantities prepend a static, flat,
// torsion-free time direction at index 0.
using Vec4 = std::array<double, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Tensor3 = std::array<Mat3, 3>;
using Tensor4 = std::array<Mat4, 4>;

/// e^a_mu for theta^1 = d rho, theta^2 = rho d phi, theta^3 = dz + Omega rho^2 d phi.
/// Row a, column mu. DomainError for rho <= 0.
Mat3 triad(double rho, double omega);

/// e^mu_a (row mu, column a), the inverse of triad().
Mat3 inverse_triad(double rho, double omega);

/// g_{mu nu} = e^a_mu e^b_nu delta_ab.
Mat3 metric_from_triad(double rho, double omega);

/// omega_mu^a_b (index [mu][a][b]); only omega_phi^1_2 = -omega_phi^2_1 = -1.
Tensor3 spin_connection(double rho);

/// T^a_{mu nu} = (d theta^a)_{mu nu} + omega_mu^a_b e^b_nu - omega_nu^a_b e^b_mu,
/// the exterior derivative taken by central differences of step h in every
/// coordinate. DomainError unless 0 < h < rho.
Tensor3 torsion_two_form(double rho, double omega, double h);

/// Irreducible parts of the torsion in the 4-D embedding.
///
/// The Levi-Civita tensor is eps_{t rho phi z} = -sqrt(det g), raised with the
/// (Euclidean-signature) 4-metric diag(1, g). That sign makes the uniform screw
/// dislocation density give S^0 = -4 Omega, and the signature makes
///   T_{bnm} = (1/3)(T_n g_{bm} - T_m g_{bn}) - (1/6) eps_{bnmc} S^c + q_{bnm}
/// hold with q traceless and axial-free.
struct TorsionDecomposition {
  Vec4 trace{};  // T_mu = T^b_{mu b}
  Vec4 axial{};  // S^a = eps^{abnm} T_{bnm}
  Tensor4 q{};   // remainder T - trace part - totally antisymmetric part of T
  /// max |T - (trace part - eps S / 6 + q)|; nonzero only if the axial vector
  /// fails to reproduce the totally antisymmetric part of T.
  double reconstruction_residual = 0.0;
  double q_trace_residual = 0.0;  // max |q^b_{mu b}|
  double q_axial_residual = 0.0;  // max |eps^{abnm} q_{bnm}|
};

struct TorsionData {
  double rho = 0.0;
  double omega = 0.0;
  Mat3 triad{};
  Mat3 inverse_triad{};
  Mat3 metric{};
  Tensor3 torsion_two_form{};  // T^a_{mu nu}
  Tensor3 torsion{};           // T^b_{nu mu} in coordinate indices
  Tensor3 contortion{};        // K_{mu a b}
  TorsionDecomposition decomposition{};
};

/// Builds every field of TorsionData; h <= 0 selects 1e-5 * rho.
TorsionData torsion_data(double rho, double omega, double h = 0.0);

/// T^b_{nu mu} = e^b_a T^a_{nu mu}.
Tensor3 coordinate_torsion(const Tensor3& two_form, const Mat3& inverse_triad);

/// K^b_{nu mu} = (1/2)(T^b_{nu mu} - T_nu^b_mu - T_mu^b_nu), indices moved with g.
Tensor3 contortion_tensor(const Tensor3& torsion, const Mat3& metric);

/// Inverse of contortion_tensor: T^b_{nu mu} = K^b_{nu mu} - K^b_{mu nu}.
Tensor3 torsion_from_contortion(const Tensor3& contortion);

/// K_{mu a b} = K_{b nu mu} (e^nu_a e^b_b - e^nu_b e^b_a), from t.torsion and t.metric.
Tensor3 contortion_from_torsion(const TorsionData& t);

TorsionDecomposition decompose_torsion(const TorsionData& t);

/// Full 4-metric diag(1, g).
Mat4 embed_metric(const Mat3& metric);

/// Levi-Civita tensor components for the 4-metric, with the sign convention above.
double levi_civita_lower(const Mat4& metric4, int a, int b, int c, int d);
double levi_civita_upper(const Mat4& metric4, int a, int b, int c, int d);

}  // namespace elastic_landau::geometry
