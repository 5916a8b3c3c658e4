#include <doctest.h>

#include <cmath>
#include <numbers>

#include <elastic_landau/error.hpp>
#include <elastic_landau/model.hpp>

using namespace elastic_landau;
using std::numbers::pi;

TEST_CASE("dislocation strength is b A / 2") {
  CHECK(dislocation_strength(0.0, 5.0) == 0.0);
  CHECK(dislocation_strength(0.2, 1.0) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(dislocation_strength(1.0, 2.0) == 1.0);
  CHECK(dislocation_strength(-0.4, 1.0) == doctest::Approx(-0.2));
  CHECK_THROWS_AS(dislocation_strength(1.0, -1.0), DomainError);
}

TEST_CASE("ac phase") {
  CHECK(ac_phase(0.0, 3.0) == 0.0);
  CHECK(ac_phase(1.0, 1.0) == doctest::Approx(2.0 * pi).epsilon(1e-15));
  CHECK(ac_phase(1.0, 0.25) == doctest::Approx(pi / 2.0).epsilon(1e-15));

  SUBCASE("linear in each argument") {
    CHECK(ac_phase(3.0, 0.7) == doctest::Approx(3.0 * ac_phase(1.0, 0.7)).epsilon(1e-15));
    CHECK(ac_phase(0.3, 1.2 + 0.5) ==
          doctest::Approx(ac_phase(0.3, 1.2) + ac_phase(0.3, 0.5)).epsilon(1e-15));
  }
}

TEST_CASE("phase override bypasses mu lambda") {
  SystemParams p;
  p.mu = 1.0;
  p.lambda = 0.25;
  CHECK(p.phi_ac() == ac_phase(1.0, 0.25));
  CHECK(p.with_phase(0.3).phi_ac() == 0.3);
}

TEST_CASE("effective angular number") {
  CHECK(effective_angular(0, Spin::up, 0.0) == 0.0);
  CHECK(effective_angular(0, Spin::up, pi / 2.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(effective_angular(1, Spin::down, pi / 2.0) == doctest::Approx(1.75).epsilon(1e-15));

  SUBCASE("shift by one flux quantum moves l by s") {
    for (int l = -5; l <= 5; ++l)
      for (Spin s : {Spin::up, Spin::down})
        for (double phi : {0.0, 0.3, 1.7, -2.2}) {
          const double lhs = effective_angular(l, s, phi + kTwoPi);
          const double rhs = effective_angular(l + sign(s), s, phi);
          CHECK(std::abs(lhs - rhs) <= 1e-14);
        }
  }
}

TEST_CASE("beta") {
  SystemParams p;
  p.omega = 0.0;
  CHECK(beta(0.0, 0.0, p) == -1.0);

  // E = 0.65125 is the n = 0 level at gamma = 0.25, where beta = 4 Omega k (n + 1/2) + 2 Omega k |gamma|.
  p.omega = 0.1;
  CHECK(beta(0.65125, 0.25, p) == doctest::Approx(0.25).epsilon(1e-13));

  p.s = Spin::down;
  CHECK(beta(0.0, 1.0, p) == doctest::Approx(-0.7025).epsilon(1e-14));

  SUBCASE("affine in E with slope 2m") {
    p.m = 1.7;
    const double b0 = beta(0.0, 0.4, p);
    CHECK(beta(2.5, 0.4, p) - b0 == doctest::Approx(2.0 * 1.7 * 2.5).epsilon(1e-14));
  }
}

TEST_CASE("parameter validation") {
  SystemParams p;
  CHECK_NOTHROW(p.validate());
  p.m = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = SystemParams{};
  p.k = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = SystemParams{};
  p.omega = -0.1;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = SystemParams{};
  p.mu = std::nan("");
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(spin_from_int(0), DomainError);
  CHECK(spin_from_int(-1) == Spin::down);
}
