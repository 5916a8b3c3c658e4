#include <elastic_landau/specfun.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include <elastic_landau/error.hpp>

namespace elastic_landau::specfun {

namespace {

constexpr long double kSeriesTol = 1e-13L;
constexpr int kMaxTerms = 100000;
// The series is benign for a >= -x * kAnchorFraction - 1, or while
// |a| x <= kBesselProduct: there the largest term is about exp(2 sqrt(|a| x)),
// at most e^16 times the result. Elsewhere the recurrence takes over, anchored
// on the first bound. An anchor deep in the oscillatory region would amplify
// its own rounding by the inverse phase step sqrt(|a| / x).
constexpr double kAnchorFraction = 0.2;
constexpr double kBesselProduct = 64.0;
constexpr double kMaxRecurrenceSteps = 1e7;

void check_b(double b) {
  if (!std::isfinite(b) || (b <= 0.0 && b == std::floor(b)))
    throw DomainError("Kummer parameter b must not be zero or a negative integer (b=" +
                      std::to_string(b) + ")");
}

// Neumaier's variant of compensated summation.
struct CompensatedSum {
  long double sum = 0.0L;
  long double carry = 0.0L;

  void add(long double v) {
    const long double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v))
      carry += (sum - t) + v;
    else
      carry += (v - t) + sum;
    sum = t;
  }
  [[nodiscard]] long double value() const { return sum + carry; }
};

long double series(long double a, long double b, long double x) {
  CompensatedSum acc;
  acc.add(1.0L);
  long double term = 1.0L;
  int small_run = 0;
  for (int j = 0; j < kMaxTerms; ++j) {
    const long double jj = j;
    term *= (a + jj) * x / ((b + jj) * (jj + 1.0L));
    if (term == 0.0L) return acc.value();  // terminating polynomial
    acc.add(term);
    // Terms decrease monotonically only once j exceeds both -a and |x|.
    if (jj + 1.0L > -a && jj + 1.0L > std::fabs(x)) {
      if (std::fabs(term) <= kSeriesTol * std::fabs(acc.value())) {
        if (++small_run == 3) return acc.value();
      } else {
        small_run = 0;
      }
    }
  }
  throw NonConvergenceError("Kummer series did not converge within " +
                            std::to_string(kMaxTerms) + " terms");
}

// M(a, b, x) for x >= 0.
long double evaluate_nonnegative(double a, double b, double x) {
  const double threshold = -kAnchorFraction * x - 1.0;
  if (a >= threshold || -a * x <= kBesselProduct || b <= 0.0) return series(a, b, x);

  if (threshold - a > kMaxRecurrenceSteps)
    throw NonConvergenceError("Kummer recurrence would need more than 1e7 steps (a=" + std::to_string(a) +
                              ", x=" + std::to_string(x) + ")");
  // Anchor a' = a + shift sits just above the threshold; shift >= 1.
  const auto shift = static_cast<long>(std::floor(threshold - a)) + 1;
  const long double la = a;
  const long double lb = b;
  const long double lx = x;
  long double anchor = la + static_cast<long double>(shift);
  long double upper = series(anchor, lb, lx);         // M(a')
  long double lower = series(anchor - 1.0L, lb, lx);  // M(a' - 1)
  long double cur_a = anchor - 1.0L;
  // (b - c) M(c - 1) + (2c - b + x) M(c) - c M(c + 1) = 0, walked downward.
  for (long step = 1; step < shift; ++step) {
    const long double next = (-(2.0L * cur_a - lb + lx) * lower + cur_a * upper) / (lb - cur_a);
    upper = lower;
    lower = next;
    cur_a -= 1.0L;
  }
  return lower;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError("ln_gamma requires x > 0 (x=" + std::to_string(x) + ")");
  return std::lgamma(x);
}

double kummer_series(const KummerArgs& args) {
  check_b(args.b);
  return static_cast<double>(series(args.a, args.b, args.x));
}

double kummer_m(const KummerArgs& args) {
  check_b(args.b);
  if (!std::isfinite(args.a) || !std::isfinite(args.x))
    throw DomainError("Kummer arguments must be finite");
  if (args.x == 0.0) return 1.0;
  if (args.x < 0.0) {
    const long double transformed = evaluate_nonnegative(args.b - args.a, args.b, -args.x);
    return static_cast<double>(std::exp(static_cast<long double>(args.x)) * transformed);
  }
  return static_cast<double>(evaluate_nonnegative(args.a, args.b, args.x));
}

double kummer_asymptotic_phase(const KummerArgs& args) {
  const double radicand = 2.0 * args.b * args.x - 4.0 * args.a * args.x;
  if (!(radicand > 0.0))
    throw DomainError("asymptotic Kummer form requires (b/2 - a) x > 0");
  return std::sqrt(radicand) - args.b * std::numbers::pi / 2.0 + std::numbers::pi / 4.0;
}

double kummer_envelope(const KummerArgs& args) {
  const double q = (args.b / 2.0 - args.a) * args.x;
  if (!(q > 0.0)) throw DomainError("asymptotic Kummer form requires (b/2 - a) x > 0");
  return std::exp(ln_gamma(args.b) + args.x / 2.0 + (0.25 - args.b / 2.0) * std::log(q)) /
         std::sqrt(std::numbers::pi);
}

double kummer_m_asymptotic(const KummerArgs& args, AsymptoticPrefactor prefactor) {
  const double q = (args.b / 2.0 - args.a) * args.x;
  if (!(q > 0.0)) throw DomainError("asymptotic Kummer form requires (b/2 - a) x > 0");
  const double exponent =
      prefactor == AsymptoticPrefactor::standard ? 0.25 - args.b / 2.0 : (1.0 - args.b) / 2.0;
  const double amplitude =
      std::exp(ln_gamma(args.b) + args.x / 2.0 + exponent * std::log(q)) /
      std::sqrt(std::numbers::pi);
  return amplitude * std::cos(kummer_asymptotic_phase(args));
}

}  // namespace elastic_landau::specfun
