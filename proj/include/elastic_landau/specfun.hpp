#pragma once

namespace elastic_landau::specfun {

/// ln Gamma(x) for x > 0; DomainError otherwise.
double ln_gamma(double x);

/// Arguments of the Kummer function M(a, b, x).
struct KummerArgs {
  double a = 0.0;
  double b = 1.0;
  double x = 0.0;
};

/// Kummer confluent hypergeometric function of the first kind,
///
///   M(a, b, x) = sum_j (a)_j x^j / ((b)_j j!).
///
/// Strategy:
///  - x < 0 goes through Kummer's transformation M(a,b,x) = e^x M(b-a,b,-x);
///  - when a is far below -x/5 and |a| x > 64 the power series cancels
///    catastrophically, so M is carried down from an anchor a' = a + N
///    (where the series is benign) with the three-term recurrence in a,
///    which is neutrally stable in the oscillatory region;
///  - otherwise the series is summed directly with compensated summation.
/// Non-positive integer a gives the terminating (Laguerre) polynomial exactly.
///
/// Accuracy: relative error <= 1e-11 measured against max(|M|, E), where E is
/// the amplitude of the large-|a| oscillation (see kummer_envelope), over
/// |a| <= 1e4, |a| x <= 1e4, b in (0, 10], x <= 1e3. Larger |a| with
/// |a| x > 64 walks a long recurrence and degrades to about 1e-9 at |a| = 1e5.
///
/// Throws DomainError when b is zero or a negative integer, and
/// NonConvergenceError when 1e5 series terms do not reach the tolerance or the
/// recurrence would need more than 1e7 steps (|a| x > 64 with |a| > 1e7).
double kummer_m(const KummerArgs& args);

inline double kummer_m(double a, double b, double x) { return kummer_m(KummerArgs{a, b, x}); }

/// The plain power series, for any sign of x, without transformation or
/// recurrence. Loses digits to cancellation when terms alternate; exposed so
/// callers can cross-check the routed evaluation where both are accurate.
double kummer_series(const KummerArgs& args);

/// Prefactor exponent used in the large-|a| approximation.
enum class AsymptoticPrefactor {
  /// ((b/2 - a) x)^(1/4 - b/2): the leading term of the Bessel expansion.
  standard,
  /// ((b/2 - a) x)^((1 - b)/2): the exponent as it is sometimes quoted; it
  /// differs from `standard` by ((b/2 - a) x)^(1/4) and has the same zeros.
  unreduced,
};

/// Large negative-a approximation
///
///   M(a,b,x) ~ Gamma(b) pi^(-1/2) e^(x/2) ((b/2 - a) x)^p cos(sqrt(2bx - 4ax) - b pi/2 + pi/4).
///
/// Validated for a <= -20, b > 0, x > 0. DomainError if (b/2 - a) x <= 0.
double kummer_m_asymptotic(const KummerArgs& args,
                           AsymptoticPrefactor prefactor = AsymptoticPrefactor::standard);

/// Phase of the cosine in kummer_m_asymptotic: sqrt(2bx - 4ax) - b pi/2 + pi/4.
double kummer_asymptotic_phase(const KummerArgs& args);

/// |kummer_m_asymptotic| without the cosine factor (standard prefactor).
double kummer_envelope(const KummerArgs& args);

}  // namespace elastic_landau::specfun
