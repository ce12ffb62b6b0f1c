#pragma once

// Numerical oracles for constructed solutions.
//
// The finite-difference oracles (ode, first integral, PDE) only sample the
// solution; the shooting oracle only integrates the ODE from a matched initial
// state. Residuals are relative: divided by max(1, |reference term|).

#include <string>
#include <vector>

#include "twave/reduction.hpp"
#include "twave/solutions.hpp"

namespace twave {

struct Exclusion {
  double center = 0.0;
  double radius = 0.0;
};

class Grid {
 public:
  /// Throws InvalidArgument unless n >= 16 and xi_min < xi_max (both finite).
  Grid(double xi_min, double xi_max, int n, std::vector<Exclusion> excluded = {});

  /// Exclusions built from the singular set of `sol` and its default radii.
  static Grid around(const Solution& sol, double xi_min, double xi_max, int n);
  /// Exclusions of 0.05 * period around the real pole lattice of p.
  static Grid around_lattice(const specfun::WeierstrassInvariants& inv, double xi_min, double xi_max, int n);

  double xi_min() const { return xi_min_; }
  double xi_max() const { return xi_max_; }
  int n() const { return n_; }
  const std::vector<Exclusion>& excluded() const { return excluded_; }

  /// Uniform nodes with the excluded ones removed, increasing.
  std::vector<double> points() const;

 private:
  double xi_min_;
  double xi_max_;
  int n_;
  std::vector<Exclusion> excluded_;
};

struct VerificationReport {
  std::string oracle;
  double max_residual = 0.0;
  double rms_residual = 0.0;
  long points_used = 0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kOdeTolerance = 1e-8;
inline constexpr double kWeierstrassTolerance = 1e-10;
inline constexpr double kShootingTolerance = 1e-6;
inline constexpr double kConservationTolerance = 1e-8;
inline constexpr double kPdeTolerance = 1e-6;
inline constexpr double kImplicitTolerance = 1e-8;

/// Central-difference step at xi: min(5e-3 * length scale, d / 300) with d the
/// distance to the nearest singularity. Richardson extrapolation removes the
/// h^2 term, so truncation and rounding stay well below 1e-8 relative.
double fd_step(const Solution& sol, double xi);

/// First and second derivatives of the primary variable (h, or psi for the
/// Gordon families) by Richardson-extrapolated central differences.
struct Derivatives {
  double value;
  double d1;
  double d2;
};
Derivatives fd_derivatives(const Solution& sol, double xi);

/// h h'' - h'^2 - f(h) over max(1, |f|); psi'' - F(psi)/L over max(1, |F/L|)
/// for the Gordon families.
VerificationReport ode_residual(const Solution& sol, const Grid& grid, double tol = kOdeTolerance);
/// Signed relative ODE residual at one point; NaN outside the real domain.
double ode_residual_at(const Solution& sol, double xi);

/// (h')^2 - (2/L) h^2 G(h) over max(1, |rhs|), or the psi analogue.
VerificationReport first_integral_residual(const Solution& sol, const Grid& grid, double tol = kOdeTolerance);
VerificationReport first_integral_residual(const Solution& sol, double c1, const Grid& grid,
                                           double tol = kOdeTolerance);

/// |p'^2 - (4p^3 - g2 p - g3)| / max(1, |p|^3).
VerificationReport weierstrass_ode_residual(const specfun::WeierstrassInvariants& inv, const Grid& grid,
                                            double tol = kWeierstrassTolerance);

/// Integrates the ODE from (v, v') read off the closed form at xi_start with an
/// embedded Dormand-Prince 5(4) pair (absolute and relative tolerance 1e-10)
/// and reports max |v_numeric - v_closed| on 501 points over [xi_start, xi_start + span].
/// Families in h integrate h'' = (2 c1 h + alpha (a+2)/a h^{a+1} + beta (b+2)/b h^{b+1}) / L,
/// with c1 taken from the initial state; Gordon families integrate psi'' = F(psi)/L.
/// Throws DomainError if the window meets a singular exclusion zone and
/// StepUnderflowError if the integrator stalls.
VerificationReport shoot_and_compare(const Solution& sol, double xi_start, double span,
                                     double tol = kShootingTolerance);

/// Longest singularity-free in-domain stretch of [lo, hi], trimmed by the
/// exclusion radii and capped at max_span; returns {start, span}.
std::pair<double, double> shooting_window(const Solution& sol, double lo, double hi, double max_span = 5.0);

/// Integrates h'' = regularized acceleration for arbitrary (alpha, beta, a, b)
/// from (h0, h0') and reports the drift of E = (h')^2 - (2/L) h^2 G(h).
VerificationReport shoot_conservation(const QuadratureDescriptor& desc, double h0, double dh0, double span,
                                      double tol = kConservationTolerance);

struct PdeGrid {
  double z_min = -5.0;
  double z_max = 5.0;
  double t_min = 0.0;
  double t_max = 2.0;
  int n = 200;
};

/// psi_tt - psi_zz - F/lambda at the n x n nodes, psi(z, t) = psi(k z - omega t).
/// Each node uses its own small stencil step (fd_step scaled by max(|k|, |omega|))
/// with one Richardson pass. Families in h are checked in the form multiplied
/// through by h^2, which stays regular where h crosses zero. Singular exclusion
/// zones are skipped.
VerificationReport pde_residual(const Solution& sol, const FrameParams& frame, const PdeGrid& grid,
                                double tol = kPdeTolerance);

/// |lhs(h(xi)) - s slope (xi - xi_root)| on the grid points where the 2F1
/// argument satisfies |x| <= max_argument. s and xi_root are fixed from the
/// first two usable points, so the grid should cover one monotone stretch.
VerificationReport implicit_residual_check(const ImplicitRelation& rel, const Solution& sol, const Grid& grid,
                                           double tol = kImplicitTolerance, double max_argument = 0.9);

/// The oracles that apply to `sol` on [lo, hi] with n points: ode, first
/// integral, shooting, and the implicit relation for c1 = 0 where one exists.
/// A positive `tolerance` replaces every default tolerance.
std::vector<VerificationReport> verify_solution(const Solution& sol, double lo, double hi, int n,
                                                double tolerance = 0.0);

}  // namespace twave
