#pragma once

// Real-argument special functions used by the traveling-wave constructors.
//
// Elliptic functions use the PARAMETER convention throughout: m enters as
// F(phi; m) = int_0^phi dt / sqrt(1 - m sin^2 t). A value quoted as a modulus k
// converts by m = k^2.

#include <optional>

namespace twave::specfun {

/// Carlson's symmetric integral R_F(x, y, z) = 1/2 int_0^inf dt / sqrt((t+x)(t+y)(t+z)).
/// Arguments must be nonnegative with at most one of them zero.
double carlson_rf(double x, double y, double z);

/// Complete integral K(m) for m < 1.
double ellint_k(double m);

/// Incomplete integral of the first kind F(phi; m).
///
/// m <= 1: any real phi, extended quasi-periodically by F(phi + n pi) = F(phi) + 2nK.
///   For m == 1 the integral diverges at |phi| >= pi/2 (domain error).
/// m > 1: real only while the path 0..phi keeps 1 - m sin^2 >= 0, i.e.
///   |phi| <= asin(1/sqrt(m)); evaluated by the reciprocal-parameter
///   transformation F(phi; m) = F(beta; 1/m) / sqrt(m), sin beta = sqrt(m) sin phi.
double ellint_f(double phi, double m);

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// sn, cn, dn for any real u and real m.
///   0 < m < 1 : arithmetic-geometric mean with descending Landen back-substitution
///   m < 0     : negative-parameter transformation onto m/(m-1) in (0, 1)
///   m > 1     : reciprocal-parameter transformation onto 1/m
///   m = 0, 1  : trigonometric and hyperbolic degenerations
JacobiTriple jacobi_sn_cn_dn(double u, double m);

/// Jacobi amplitude am(u; m), the inverse of F(.; m).
/// For m < 1 the continuous (unwrapped) branch, am(u + 2K) = am(u) + pi.
/// For m > 1 the bounded periodic branch with |am| <= asin(1/sqrt(m)).
double jacobi_am(double u, double m);

struct WeierstrassInvariants {
  double g2 = 0.0;
  double g3 = 0.0;

  double discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }
  /// |Delta| <= 1e-12 * max(|g2|^3, 27 g3^2)
  bool degenerate() const;
};

/// Roots of s3(t) = 4t^3 - g2 t - g3.
struct CubicRoots {
  bool all_real = true;
  // all_real: e1 >= e2 >= e3. Otherwise e2 holds the single real root and
  // e1, e3 are unused; the conjugate pair is re +- i im.
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double re = 0.0;
  double im = 0.0;
};

/// Viete for three distinct real roots, Cardano for one real root, and the
/// exact repeated-root form when the invariants are degenerate.
CubicRoots weierstrass_roots(const WeierstrassInvariants& inv);

struct WeierstrassValue {
  double p;
  double dp;
};

/// Period of the real pole lattice of p(z; g2, g3), or nullopt when p has a
/// single real pole (Delta = 0 with g3 <= 0). Poles sit at z = n * period.
std::optional<double> weierstrass_real_period(const WeierstrassInvariants& inv);

/// Length used for the pole exclusion radius: the real period if any,
/// otherwise pi / sqrt(3 e) for the hyperbolic degeneration and 1 for g2 = g3 = 0.
double weierstrass_length_scale(const WeierstrassInvariants& inv);

/// Distance from z to the nearest real pole.
double weierstrass_pole_distance(double z, const WeierstrassInvariants& inv);

/// p(z) and p'(z) for real z. Throws PoleProximityError when z lies within
/// 1e-3 * weierstrass_length_scale of a pole.
WeierstrassValue weierstrass_p(double z, const WeierstrassInvariants& inv);

/// Jacobi-route evaluation from three real roots e1 >= e2 >= e3 (any spacing,
/// including repeated roots): p = e3 + (e1 - e3) / sn^2(sqrt(e1 - e3) z; m),
/// m = (e2 - e3)/(e1 - e3). No pole check.
WeierstrassValue weierstrass_p_real_roots(double z, double e1, double e2, double e3);

/// Gauss hypergeometric 2F1(a, b; c; x) for real parameters and real x < 1.
///   |x| <= 1/2        : direct series
///   1/2 < x < 1       : direct series (slow near 1)
///   x < -1/2          : Pfaff transformation onto x/(x-1); for x < -9 with
///                       b - a non-integer the 1/x connection formula instead
double gauss_2f1(double a, double b, double c, double x);

}  // namespace twave::specfun
