#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include <elastic_landau/error.hpp>
#include <elastic_landau/specfun.hpp>

using namespace elastic_landau;
using namespace elastic_landau::specfun;

namespace {

struct Reference {
  double a, b, x, value, scale;
};

// 20-digit values from an arbitrary-precision evaluation. scale is max(|M|, oscillation envelope).
constexpr Reference kReferences[] = {
    {0.5, 1.5, 2.0, 2.3644538928052092846, 2.36445},
    {-2.5, 0.5, 3.0, 3.393009798012870703, 4.48169},
    {3.7, 1.0, 20.0, 526998735957.42082793, 5.26999e11},
    {-4.3, 3.0, 15.0, 9.9869673274929388424, 9.98697},
    {-10.3, 1.5, 50.0, -4084431905.0334419833, 4.08443e9},
    {-50.7, 1.25, 0.1, -0.28527287564254001646, 0.29113},
    {-50.7, 2.7, 10.0, -0.07353265364465991908, 0.132946},
    {-200.2, 1.5, 5.0, 0.091929946392814555019, 0.192166},
    {-1000.5, 1.3, 1.0, 0.036285311903270438627, 0.0526493},
    {-6800.1, 4.0, 0.01, 0.0005617887331108509454, 0.00211165},
    {-75.25, 1.0, 100.0, 3.4001317128209904622e20, 3.40013e20},
    {-20.5, 2.0, 100.0, -93299559136169607774.0, 9.32996e19},
    {-100.5, 1.5, 50.0, 463141054.67461877749, 5.05999e8},
    {-3.0000001, 1.5, 2.0, -0.40952378061441652713, 0.496288},
    {1.25, 3.0, -4.0, 0.28725247769451130023, 0.287252},
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("ln_gamma") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0));
  CHECK(std::abs(ln_gamma(1.0)) <= 1e-15);
  CHECK(rel(ln_gamma(0.5), 0.57236494292470008707) <= 1e-12);
  CHECK(rel(ln_gamma(6.0), std::log(120.0)) <= 1e-12);
  CHECK(rel(ln_gamma(0.001), 6.9071788853838536825) <= 1e-12);
  CHECK(rel(ln_gamma(200.0), 857.93366982585743682) <= 1e-12);
  CHECK(rel(ln_gamma(2.5), 0.28468287047291915963) <= 1e-12);
  CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
  CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
}

TEST_CASE("kummer basic values") {
  for (double a : {-7.3, -1.0, 0.0, 2.5, 40.0}) CHECK(kummer_m(a, 1.5, 0.0) == 1.0);
  CHECK(rel(kummer_m(1.0, 1.0, 1.0), std::numbers::e) <= 1e-14);
  CHECK(rel(kummer_m(-1.0, 2.0, 1.0), 0.5) <= 1e-15);

  SUBCASE("terminating series is the Laguerre polynomial") {
    // M(-2, b, x) = 1 - 2x/b + x^2/(b(b+1))
    for (double x : {0.3, 2.0, 7.5}) {
      const double b = 1.7;
      CHECK(rel(kummer_m(-2.0, b, x), 1.0 - 2.0 * x / b + x * x / (b * (b + 1.0))) <= 1e-13);
    }
  }
}

TEST_CASE("kummer against high-precision references") {
  for (const auto& r : kReferences) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CAPTURE(r.x);
    const double got = kummer_m(r.a, r.b, r.x);
    CHECK(std::abs(got - r.value) / r.scale <= 1e-11);
  }
}

TEST_CASE("kummer domain and convergence errors") {
  CHECK_THROWS_AS(kummer_m(1.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), DomainError);
  CHECK_NOTHROW(kummer_m(1.0, -2.5, 1.0));
  CHECK_THROWS_AS(kummer_series({1.0, 1.0, 1e6}), NonConvergenceError);
}

TEST_CASE("M(a, a, x) = e^x") {
  for (double a : {0.5, 1.0, 2.3, 7.0})
    for (double x = 0.0; x <= 10.0; x += 0.5) CHECK(rel(kummer_m(a, a, x), std::exp(x)) <= 1e-12);
}

TEST_CASE("kummer transformation") {
  double worst = 0.0;
  for (double a = -5.0; a <= 5.0; a += 0.5)
    for (double b : {0.5, 1.0, 1.5, 3.0})
      for (double x = 0.0; x <= 20.0; x += 1.0) {
        const double lhs = kummer_m(a, b, x);
        const double rhs = std::exp(x) * kummer_m(b - a, b, -x);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
      }
  CHECK(worst <= 1e-10);

  SUBCASE("routed and raw series agree where the series is benign") {
    for (double x : {-3.0, -1.0, -0.2})
      CHECK(rel(kummer_m(1.5, 2.5, x), kummer_series({1.5, 2.5, x})) <= 1e-13);
  }
}

TEST_CASE("derivative identity dM/dx = (a/b) M(a+1, b+1, x)") {
  for (double a : {-3.5, -0.7, 0.4, 2.2})
    for (double b : {0.75, 1.5, 4.0})
      for (double x : {0.5, 2.0, 6.0}) {
        const double h = 1e-5 * std::max(1.0, x);
        const double fd = (kummer_m(a, b, x + h) - kummer_m(a, b, x - h)) / (2.0 * h);
        const double exact = a / b * kummer_m(a + 1.0, b + 1.0, x);
        CHECK(std::abs(fd - exact) <= 1e-6 * std::max(std::abs(exact), 1e-3));
      }
}

TEST_CASE("large-|a| approximation") {
  const auto err_at = [](double a) {
    return std::abs(kummer_m_asymptotic({a, 1.5, 0.1}) - kummer_m(a, 1.5, 0.1)) /
           std::abs(kummer_m(a, 1.5, 0.1));
  };
  CHECK(err_at(-50.0) <= 0.02);
  CHECK(err_at(-200.0) <= 0.005);

  SUBCASE("zeros of the cosine are zeros of the approximation") {
    // sqrt(2bx - 4ax) = b pi / 2 + pi / 4 puts the phase at pi / 2.
    const double b = 1.5, x = 0.1;
    const double root = b * std::numbers::pi / 2.0 + std::numbers::pi / 4.0;
    const double a = (2.0 * b * x - root * root) / (4.0 * x);
    CHECK(std::abs(kummer_asymptotic_phase({a, b, x}) - std::numbers::pi / 2.0) <= 1e-14);
    CHECK(std::abs(kummer_m_asymptotic({a, b, x})) <= 1e-14 * kummer_envelope({a, b, x}));
  }

  SUBCASE("unreduced exponent differs by ((b/2 - a) x)^(1/4)") {
    const KummerArgs args{-80.0, 2.2, 0.3};
    const double ratio = kummer_m_asymptotic(args, AsymptoticPrefactor::unreduced) /
                         kummer_m_asymptotic(args, AsymptoticPrefactor::standard);
    CHECK(rel(ratio, std::pow((1.1 + 80.0) * 0.3, 0.25)) <= 1e-13);
  }

  SUBCASE("envelope-scaled error shrinks from a ~ -20 to a ~ -200") {
    // Pointwise errors oscillate with the phase of the cosine, so compare the
    // worst envelope-scaled error over a window of a.
    const auto window_max = [](double centre) {
      double worst = 0.0;
      for (double a = centre - 5.0; a <= centre + 5.0; a += 0.25) {
        const KummerArgs args{a, 1.5, 0.1};
        worst = std::max(worst, std::abs(kummer_m_asymptotic(args) - kummer_m(args)) /
                                    kummer_envelope(args));
      }
      return worst;
    };
    const double w20 = window_max(-25.0), w200 = window_max(-200.0);
    CAPTURE(w20);
    CAPTURE(w200);
    CHECK(w200 < w20);
  }

  CHECK_THROWS_AS(kummer_m_asymptotic({1.0, 1.5, 0.1}), DomainError);
  CHECK_THROWS_AS(kummer_m_asymptotic({-20.0, 1.5, 0.0}), DomainError);
}
