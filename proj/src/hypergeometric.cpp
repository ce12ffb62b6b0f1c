#include <cmath>
#include <sstream>

#include "twave/errors.hpp"
#include "twave/specfun.hpp"

namespace twave::specfun {

namespace {

constexpr double kTailTolerance = 1e-14;

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::round(v); }

bool is_integer(double v) { return v == std::round(v); }

double reciprocal_gamma(double v) { return is_nonpositive_integer(v) ? 0.0 : 1.0 / std::tgamma(v); }

// Direct power series, stopped once the geometric bound on the tail
// |t_n| r/(1-r), r >= every later term ratio, falls below the tolerance.
double series(double a, double b, double c, double x, long max_terms) {
  double sum = 1.0;
  double term = 1.0;
  for (long n = 0; n < max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum += term;
    if (term == 0.0) return sum;
    const double next = std::abs((a + dn + 1.0) * (b + dn + 1.0) / ((c + dn + 1.0) * (dn + 2.0)) * x);
    const double r = std::max(next, std::abs(x));
    if (r < 1.0 && std::abs(term) * r / (1.0 - r) <= kTailTolerance * std::abs(sum)) {
      return sum;
    }
  }
  std::ostringstream msg;
  msg << "gauss_2f1: series at x = " << x << " did not converge in " << max_terms << " terms";
  throw DomainError(msg.str());
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(x)) {
    throw DomainError("gauss_2f1: non-finite argument");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("gauss_2f1: c must not be a nonpositive integer");
  }
  if (!(x < 1.0)) {
    throw DomainError("gauss_2f1: implemented for real x < 1 only");
  }
  if (x == 0.0) return 1.0;
  if (x >= -0.5) {
    return series(a, b, c, x, 2'000'000);
  }
  if (x < -9.0 && !is_integer(b - a)) {
    // Connection onto 1/x, |1/x| < 1/9.
    const double y = 1.0 / x;
    const double gc = std::tgamma(c);
    const double t1 = gc * std::tgamma(b - a) * reciprocal_gamma(b) * reciprocal_gamma(c - a) *
                      std::pow(-x, -a) * series(a, a - c + 1.0, a - b + 1.0, y, 100'000);
    const double t2 = gc * std::tgamma(a - b) * reciprocal_gamma(a) * reciprocal_gamma(c - b) *
                      std::pow(-x, -b) * series(b, b - c + 1.0, b - a + 1.0, y, 100'000);
    return t1 + t2;
  }
  // Pfaff: 2F1(a, b; c; x) = (1 - x)^-a 2F1(a, c - b; c; x / (x - 1)).
  const double w = x / (x - 1.0);
  return std::pow(1.0 - x, -a) * series(a, c - b, c, w, 2'000'000);
}

}  // namespace twave::specfun
