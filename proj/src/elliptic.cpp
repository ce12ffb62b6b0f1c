#include "twave/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "twave/errors.hpp"

namespace twave::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// AGM / descending Landen for 0 < m < 1.
JacobiTriple jacobi_agm(double u, double m) {
  constexpr int kMaxLevels = 40;
  std::array<double, kMaxLevels> a{};
  std::array<double, kMaxLevels> c{};
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (std::abs(c[n]) > kEps * a[n] && n + 1 < kMaxLevels) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  if (n == 0) {
    return {std::sin(u), std::cos(u), 1.0};
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j >= 1; --j) {
    phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  const double cn = std::cos(phi);
  // cn / cos(phi_1 - phi_0) loses everything as cn -> 0; this sum does not.
  return {std::sin(phi), cn, std::sqrt((1.0 - m) + m * cn * cn)};
}

}  // namespace

double carlson_rf(double x, double y, double z) {
  if (!(x >= 0.0 && y >= 0.0 && z >= 0.0)) {
    throw DomainError("carlson_rf: arguments must be nonnegative");
  }
  if (int(x == 0.0) + int(y == 0.0) + int(z == 0.0) > 1) {
    throw DomainError("carlson_rf: at most one argument may be zero");
  }
  if (!std::isfinite(x + y + z)) {
    throw DomainError("carlson_rf: arguments must be finite");
  }
  // Carlson's duplication with the Q-bound stopping rule; truncation error of
  // the fifth-order expansion is below double rounding once 4^-n Q < |A|.
  const double a0 = (x + y + z) / 3.0;
  double an = a0;
  double q = std::pow(3.0 * kEps, -1.0 / 6.0) *
             std::max({std::abs(a0 - x), std::abs(a0 - y), std::abs(a0 - z)});
  double xn = x, yn = y, zn = z;
  double scale = 1.0;
  while (q >= std::abs(an) * scale) {
    const double sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
    const double lambda = sx * sy + sy * sz + sz * sx;
    an = 0.25 * (an + lambda);
    xn = 0.25 * (xn + lambda);
    yn = 0.25 * (yn + lambda);
    zn = 0.25 * (zn + lambda);
    scale *= 4.0;
  }
  const double dx = (a0 - x) / (an * scale);
  const double dy = (a0 - y) / (an * scale);
  const double dz = -dx - dy;
  const double e2 = dx * dy - dz * dz;
  const double e3 = dx * dy * dz;
  return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / std::sqrt(an);
}

double ellint_k(double m) {
  if (!(m < 1.0)) {
    throw DomainError("ellint_k: requires m < 1");
  }
  return carlson_rf(0.0, 1.0 - m, 1.0);
}

double ellint_f(double phi, double m) {
  if (!std::isfinite(phi) || !std::isfinite(m)) {
    throw DomainError("ellint_f: non-finite argument");
  }
  if (phi == 0.0) return 0.0;
  if (m > 1.0) {
    const double k = std::sqrt(m);
    const double s = k * std::sin(phi);
    if (std::abs(phi) > 0.5 * kPi || std::abs(s) > 1.0 + 4.0 * kEps) {
      throw DomainError("ellint_f: |sin phi| > 1/sqrt(m) leaves the real domain");
    }
    const double beta = std::asin(std::clamp(s, -1.0, 1.0));
    return ellint_f(beta, 1.0 / m) / k;
  }
  if (m == 1.0 && std::abs(phi) >= 0.5 * kPi) {
    throw DomainError("ellint_f: F(phi; 1) diverges at |phi| >= pi/2");
  }
  const double n = std::round(phi / kPi);
  const double r = phi - n * kPi;
  const double s = std::sin(r);
  const double c = std::cos(r);
  // 1 - m s^2 written as a sum of nonnegative terms, exact as phi -> pi/2 at m = 1.
  double value = s * carlson_rf(c * c, c * c + (1.0 - m) * s * s, 1.0);
  if (n != 0.0) value += 2.0 * n * ellint_k(m);
  return value;
}

JacobiTriple jacobi_sn_cn_dn(double u, double m) {
  if (!std::isfinite(u) || !std::isfinite(m)) {
    throw DomainError("jacobi_sn_cn_dn: non-finite argument");
  }
  if (u == 0.0) return {0.0, 1.0, 1.0};
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
  }
  if (m > 1.0) {
    const double k = std::sqrt(m);
    const JacobiTriple t = jacobi_sn_cn_dn(u * k, 1.0 / m);
    return {t.sn / k, t.dn, t.cn};
  }
  if (m < 0.0) {
    const double mu = m / (m - 1.0);
    const double s = std::sqrt(1.0 - m);
    const JacobiTriple t = jacobi_sn_cn_dn(u * s, mu);
    return {t.sn / (s * t.dn), t.cn / t.dn, 1.0 / t.dn};
  }
  // 0 < m < 1: reduce onto one real period 4K before the descent.
  const double period = 4.0 * ellint_k(m);
  if (std::abs(u) > period) {
    u -= period * std::round(u / period);
  }
  return jacobi_agm(u, m);
}

double jacobi_am(double u, double m) {
  if (!std::isfinite(u) || !std::isfinite(m)) {
    throw DomainError("jacobi_am: non-finite argument");
  }
  if (m == 0.0) return u;
  if (m == 1.0) return 2.0 * std::atan(std::tanh(0.5 * u));
  if (m > 1.0) {
    // cn(u; m) = dn(u sqrt(m); 1/m) > 0, so the principal atan2 is continuous.
    const JacobiTriple t = jacobi_sn_cn_dn(u, m);
    return std::atan2(t.sn, t.cn);
  }
  const double half_period = 2.0 * ellint_k(m);
  const double n = std::round(u / half_period);
  const JacobiTriple t = jacobi_sn_cn_dn(u - n * half_period, m);
  return n * kPi + std::atan2(t.sn, t.cn);
}

}  // namespace twave::specfun
