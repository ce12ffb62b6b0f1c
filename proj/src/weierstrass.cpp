#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <numbers>
#include <sstream>

#include "twave/errors.hpp"
#include "twave/specfun.hpp"

namespace twave::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleExclusion = 1e-3;

// Repeated root e of the degenerate cubic; e > 0 is the hyperbolic
// degeneration (g3 < 0), e < 0 the trigonometric one (g3 > 0).
double repeated_root(const WeierstrassInvariants& inv) {
  if (inv.g2 == 0.0) return 0.0;
  return -1.5 * inv.g3 / inv.g2;
}

double cubic(double t, const WeierstrassInvariants& inv) {
  return (4.0 * t * t - inv.g2) * t - inv.g3;
}

double polish(double t, const WeierstrassInvariants& inv) {
  const double d = 12.0 * t * t - inv.g2;
  if (d == 0.0) return t;
  const double next = t - cubic(t, inv) / d;
  return std::abs(cubic(next, inv)) <= std::abs(cubic(t, inv)) ? next : t;
}

// A&S 18.9.11 form for one real root: p = e2 + H2 cn^2/(sn^2 dn^2) at v = sqrt(H2) z.
struct ComplexPairReduction {
  double e2;
  double h2;
  double m;
};

ComplexPairReduction complex_pair_reduction(const CubicRoots& roots, const WeierstrassInvariants& inv) {
  const double e2 = roots.e2;
  const double h2 = std::sqrt(3.0 * e2 * e2 - 0.25 * inv.g2);
  return {e2, h2, 0.5 - 0.75 * e2 / h2};
}

}  // namespace

bool WeierstrassInvariants::degenerate() const {
  const double scale = std::max(std::abs(g2 * g2 * g2), 27.0 * g3 * g3);
  return std::abs(discriminant()) <= 1e-12 * scale;
}

CubicRoots weierstrass_roots(const WeierstrassInvariants& inv) {
  CubicRoots r;
  if (inv.degenerate()) {
    const double e = repeated_root(inv);
    if (e >= 0.0) {
      r.e1 = e, r.e2 = e, r.e3 = -2.0 * e;
    } else {
      r.e1 = -2.0 * e, r.e2 = e, r.e3 = e;
    }
    return r;
  }
  if (inv.discriminant() > 0.0) {
    // Viete: t = 2 s cos(theta/3 - 2 pi k/3), s = sqrt(g2/12).
    const double s = std::sqrt(inv.g2 / 12.0);
    const double cos_theta = std::clamp(3.0 * std::sqrt(3.0) * inv.g3 / std::pow(inv.g2, 1.5), -1.0, 1.0);
    const double third = std::acos(cos_theta) / 3.0;
    std::array<double, 3> t = {2.0 * s * std::cos(third), 2.0 * s * std::cos(third - 2.0 * kPi / 3.0),
                               2.0 * s * std::cos(third + 2.0 * kPi / 3.0)};
    for (double& x : t) x = polish(x, inv);
    std::sort(t.begin(), t.end(), std::greater<>());
    r.e1 = t[0], r.e2 = t[1], r.e3 = t[2];
    return r;
  }
  // Cardano on t^3 + P t + Q with P = -g2/4, Q = -g3/4; the larger cube root
  // is taken first and the second recovered from A B = -P/3.
  const double p = -0.25 * inv.g2;
  const double q = -0.25 * inv.g3;
  const double d = 0.25 * q * q + p * p * p / 27.0;
  const double half = -0.5 * q;
  const double a = std::cbrt(half + std::copysign(std::sqrt(d), half == 0.0 ? 1.0 : half));
  const double b = a == 0.0 ? 0.0 : -p / (3.0 * a);
  const double e = polish(a + b, inv);
  r.all_real = false;
  r.e2 = e;
  r.re = -0.5 * e;
  r.im = 0.5 * std::sqrt(std::max(0.0, 3.0 * e * e - inv.g2));
  return r;
}

std::optional<double> weierstrass_real_period(const WeierstrassInvariants& inv) {
  if (inv.degenerate()) {
    const double e = repeated_root(inv);
    if (e >= 0.0) return std::nullopt;
    return kPi / std::sqrt(-3.0 * e);
  }
  const CubicRoots roots = weierstrass_roots(inv);
  if (roots.all_real) {
    const double span = roots.e1 - roots.e3;
    return 2.0 * ellint_k((roots.e2 - roots.e3) / span) / std::sqrt(span);
  }
  const ComplexPairReduction red = complex_pair_reduction(roots, inv);
  return 2.0 * ellint_k(red.m) / std::sqrt(red.h2);
}

double weierstrass_length_scale(const WeierstrassInvariants& inv) {
  if (auto period = weierstrass_real_period(inv)) return *period;
  const double e = repeated_root(inv);
  if (e > 0.0) return kPi / std::sqrt(3.0 * e);
  return 1.0;
}

double weierstrass_pole_distance(double z, const WeierstrassInvariants& inv) {
  if (auto period = weierstrass_real_period(inv)) {
    return std::abs(z - *period * std::round(z / *period));
  }
  return std::abs(z);
}

WeierstrassValue weierstrass_p_real_roots(double z, double e1, double e2, double e3) {
  const double span = e1 - e3;
  const double root = std::sqrt(span);
  const JacobiTriple t = jacobi_sn_cn_dn(root * z, (e2 - e3) / span);
  const double s2 = t.sn * t.sn;
  return {e3 + span / s2, -2.0 * span * root * t.cn * t.dn / (s2 * t.sn)};
}

WeierstrassValue weierstrass_p(double z, const WeierstrassInvariants& inv) {
  if (!std::isfinite(z) || !std::isfinite(inv.g2) || !std::isfinite(inv.g3)) {
    throw DomainError("weierstrass_p: non-finite argument");
  }
  const double dist = weierstrass_pole_distance(z, inv);
  const double radius = kPoleExclusion * weierstrass_length_scale(inv);
  if (dist < radius) {
    std::ostringstream msg;
    msg << "weierstrass_p: z = " << z << " is " << dist << " from a pole (exclusion radius " << radius << ")";
    throw PoleProximityError(msg.str(), dist);
  }

  if (inv.degenerate()) {
    const double e = repeated_root(inv);
    if (e == 0.0) {
      return {1.0 / (z * z), -2.0 / (z * z * z)};
    }
    if (e > 0.0) {
      const double s = std::sqrt(3.0 * e);
      const double sh = std::sinh(s * z);
      const double csch2 = 1.0 / (sh * sh);
      return {e + 3.0 * e * csch2, -6.0 * e * s * csch2 * std::cosh(s * z) / sh};
    }
    const double t = -e;
    const double s = std::sqrt(3.0 * t);
    const double sn = std::sin(s * z);
    const double csc2 = 1.0 / (sn * sn);
    return {-t + 3.0 * t * csc2, -6.0 * t * s * csc2 * std::cos(s * z) / sn};
  }

  const CubicRoots roots = weierstrass_roots(inv);
  if (roots.all_real) {
    return weierstrass_p_real_roots(z, roots.e1, roots.e2, roots.e3);
  }
  const ComplexPairReduction red = complex_pair_reduction(roots, inv);
  const double root = std::sqrt(red.h2);
  const JacobiTriple t = jacobi_sn_cn_dn(root * z, red.m);
  const double sn2 = t.sn * t.sn;
  const double dn2 = t.dn * t.dn;
  const double cn2 = t.cn * t.cn;
  const double p = red.e2 + red.h2 * cn2 / (sn2 * dn2);
  const double dp = 2.0 * red.h2 * root * t.cn * (red.m * sn2 * cn2 - dn2) / (sn2 * t.sn * dn2 * t.dn);
  return {p, dp};
}

}  // namespace twave::specfun
