#include "twave/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "twave/errors.hpp"

namespace twave {

namespace {

namespace odeint = boost::numeric::odeint;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
constexpr double kStepFraction = 5e-3;
constexpr double kSingularFraction = 1.0 / 300.0;
constexpr double kIntegratorTolerance = 1e-10;
constexpr int kShootingSamples = 501;

using State = std::array<double, 2>;

// Running max and compensated sum of squares, accumulated in grid order.
class Accumulator {
 public:
  void add(double r) {
    r = std::abs(r);
    if (std::isnan(r)) r = kInf;
    max_ = std::max(max_, r);
    const double sq = r * r;
    const double t = sum_ + sq;
    if (std::abs(sum_) >= std::abs(sq)) {
      comp_ += (sum_ - t) + sq;
    } else {
      comp_ += (sq - t) + sum_;
    }
    sum_ = t;
    ++count_;
  }

  VerificationReport report(std::string oracle, double tol) const {
    if (count_ == 0) {
      throw EmptyGridError(oracle + ": no usable grid points after exclusions");
    }
    VerificationReport r;
    r.oracle = std::move(oracle);
    r.max_residual = max_;
    r.rms_residual = std::sqrt((sum_ + comp_) / static_cast<double>(count_));
    r.points_used = count_;
    r.tolerance = tol;
    r.pass = max_ <= tol;
    return r;
  }

 private:
  double max_ = 0.0;
  double sum_ = 0.0;
  double comp_ = 0.0;
  long count_ = 0;
};

double primary(const Solution& sol, double xi) { return sol.psi_native() ? sol.psi(xi) : sol.h(xi); }

struct Stencil {
  double d1;
  double d2;
};

// Richardson-extrapolated central differences of g at x with step delta.
template <class F>
Stencil richardson(const F& g, double x, double delta, double g0) {
  const double fp = g(x + delta), fm = g(x - delta);
  const double gp = g(x + 0.5 * delta), gm = g(x - 0.5 * delta);
  const double d1_coarse = (fp - fm) / (2.0 * delta);
  const double d1_fine = (gp - gm) / delta;
  const double d2_coarse = (fp - 2.0 * g0 + fm) / (delta * delta);
  const double d2_fine = (gp - 2.0 * g0 + gm) / (0.25 * delta * delta);
  return {(4.0 * d1_fine - d1_coarse) / 3.0, (4.0 * d2_fine - d2_coarse) / 3.0};
}

double exact_step(double x, double delta) {
  volatile double t = x + delta;
  return t - x;
}

QuadratureDescriptor quadrature_for(const Solution& sol, double c1) {
  return QuadratureDescriptor(sol.equation(), sol.lambda_gamma(), c1);
}

void check_window(const Solution& sol, double lo, double hi) {
  for (double s : sol.singularities().within(lo - 1.0, hi + 1.0)) {
    const double r = sol.exclusion_radius_at(s);
    if (s + r > lo && s - r < hi) {
      std::ostringstream msg;
      msg << "shooting window [" << lo << ", " << hi << "] meets the singularity at " << s;
      throw DomainError(msg.str());
    }
  }
}

template <class System>
void integrate_dense(System sys, State& y, double x0, const std::vector<double>& times,
                     const std::function<void(const State&, double)>& observe) {
  auto stepper = odeint::make_dense_output(kIntegratorTolerance, kIntegratorTolerance,
                                           odeint::runge_kutta_dopri5<State>());
  const double dt = (times.back() - x0) / 1000.0;
  try {
    odeint::integrate_times(stepper, sys, y, times.begin(), times.end(), dt, observe,
                            odeint::max_step_checker(100000));
  } catch (const odeint::odeint_error& e) {
    throw StepUnderflowError(std::string("integrator stalled: ") + e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Grid::Grid(double xi_min, double xi_max, int n, std::vector<Exclusion> excluded)
    : xi_min_(xi_min), xi_max_(xi_max), n_(n), excluded_(std::move(excluded)) {
  if (!std::isfinite(xi_min) || !std::isfinite(xi_max) || !(xi_min < xi_max)) {
    throw InvalidArgument("grid needs finite xi_min < xi_max");
  }
  if (n < 16) throw InvalidArgument("grid needs n >= 16");
}

Grid Grid::around(const Solution& sol, double xi_min, double xi_max, int n) {
  std::vector<Exclusion> ex;
  const double pad = 0.1 * (xi_max - xi_min) + 1.0;
  for (double s : sol.singularities().within(xi_min - pad, xi_max + pad)) {
    ex.push_back({s, sol.exclusion_radius_at(s)});
  }
  return Grid(xi_min, xi_max, n, std::move(ex));
}

Grid Grid::around_lattice(const specfun::WeierstrassInvariants& inv, double xi_min, double xi_max, int n) {
  SingularSet set;
  double radius = 0.05;
  if (auto period = specfun::weierstrass_real_period(inv)) {
    set.lattices.push_back({0.0, *period});
    radius = 0.05 * *period;
  } else {
    set.points.push_back(0.0);
  }
  std::vector<Exclusion> ex;
  for (double s : set.within(xi_min - 1.0, xi_max + 1.0)) ex.push_back({s, radius});
  return Grid(xi_min, xi_max, n, std::move(ex));
}

std::vector<double> Grid::points() const {
  std::vector<double> out;
  out.reserve(static_cast<size_t>(n_));
  const double h = (xi_max_ - xi_min_) / static_cast<double>(n_ - 1);
  for (int i = 0; i < n_; ++i) {
    const double x = i + 1 == n_ ? xi_max_ : xi_min_ + h * i;
    const bool hit = std::any_of(excluded_.begin(), excluded_.end(),
                                 [x](const Exclusion& e) { return std::abs(x - e.center) < e.radius; });
    if (!hit) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

double fd_step(const Solution& sol, double xi) {
  const double d = sol.singularities().distance(xi);
  return std::min(kStepFraction * sol.length_scale(), d * kSingularFraction);
}

Derivatives fd_derivatives(const Solution& sol, double xi) {
  const double delta = exact_step(xi, fd_step(sol, xi));
  const double v0 = primary(sol, xi);
  const Stencil s = richardson([&sol](double x) { return primary(sol, x); }, xi, delta, v0);
  return {v0, s.d1, s.d2};
}

double ode_residual_at(const Solution& sol, double xi) {
  if (!sol.in_domain(xi)) return std::numeric_limits<double>::quiet_NaN();
  const OdeDescriptor ode(sol.equation(), sol.lambda_gamma());
  const Derivatives d = fd_derivatives(sol, xi);
  if (sol.psi_native()) {
    const double rhs = ode.nonlinearity_psi(d.value) / sol.lambda_gamma();
    return (d.d2 - rhs) / std::max(1.0, std::abs(rhs));
  }
  const double f = ode.f(d.value);
  return ode.residual(d.value, d.d1, d.d2) / std::max(1.0, std::abs(f));
}

VerificationReport ode_residual(const Solution& sol, const Grid& grid, double tol) {
  Accumulator acc;
  for (double xi : grid.points()) {
    if (sol.in_domain(xi)) acc.add(ode_residual_at(sol, xi));
  }
  return acc.report("ode_residual", tol);
}

VerificationReport first_integral_residual(const Solution& sol, const Grid& grid, double tol) {
  return first_integral_residual(sol, sol.c1(), grid, tol);
}

VerificationReport first_integral_residual(const Solution& sol, double c1, const Grid& grid, double tol) {
  const QuadratureDescriptor q = quadrature_for(sol, c1);
  const double two_over_l = 2.0 / sol.lambda_gamma();
  Accumulator acc;
  for (double xi : grid.points()) {
    if (!sol.in_domain(xi)) continue;
    const Derivatives d = fd_derivatives(sol, xi);
    if (sol.psi_native()) {
      const double rhs = two_over_l * q.G_psi(d.value);
      acc.add(q.psi_residual(d.value, d.d1) / std::max(1.0, std::abs(rhs)));
    } else {
      const double rhs = two_over_l * q.h2G(d.value);
      acc.add(q.residual(d.value, d.d1) / std::max(1.0, std::abs(rhs)));
    }
  }
  return acc.report("first_integral_residual", tol);
}

VerificationReport weierstrass_ode_residual(const specfun::WeierstrassInvariants& inv, const Grid& grid,
                                            double tol) {
  Accumulator acc;
  for (double z : grid.points()) {
    const specfun::WeierstrassValue w = specfun::weierstrass_p(z, inv);
    const double rhs = 4.0 * w.p * w.p * w.p - inv.g2 * w.p - inv.g3;
    acc.add((w.dp * w.dp - rhs) / std::max(1.0, std::abs(w.p * w.p * w.p)));
  }
  return acc.report("weierstrass_ode_residual", tol);
}

// ---------------------------------------------------------------------------

VerificationReport shoot_and_compare(const Solution& sol, double xi_start, double span, double tol) {
  if (!(span > 0.0) || !std::isfinite(xi_start) || !std::isfinite(span)) {
    throw InvalidArgument("shooting needs a finite start and a positive span");
  }
  check_window(sol, xi_start, xi_start + span);
  if (!sol.in_domain(xi_start)) throw DomainError("shooting start lies outside the solution's real domain");

  const Derivatives d0 = fd_derivatives(sol, xi_start);
  const double L = sol.lambda_gamma();
  std::vector<double> times(kShootingSamples);
  for (int i = 0; i < kShootingSamples; ++i) {
    times[static_cast<size_t>(i)] = xi_start + span * static_cast<double>(i) / (kShootingSamples - 1);
  }

  Accumulator acc;
  auto observe = [&](const State& y, double x) { acc.add(y[0] - primary(sol, x)); };
  State y = {d0.value, d0.d1};

  if (sol.psi_native()) {
    const OdeDescriptor ode(sol.equation(), L);
    auto sys = [&ode, L](const State& s, State& ds, double) {
      ds[0] = s[1];
      ds[1] = ode.nonlinearity_psi(s[0]) / L;
    };
    integrate_dense(sys, y, xi_start, times, observe);
  } else {
    const double c1 = d0.value != 0.0
                          ? QuadratureDescriptor::c1_from_state(sol.equation(), L, d0.value, d0.d1)
                          : sol.c1();
    const QuadratureDescriptor q = quadrature_for(sol, c1);
    auto sys = [&q](const State& s, State& ds, double) {
      ds[0] = s[1];
      ds[1] = q.regularized_acceleration(s[0]);
    };
    integrate_dense(sys, y, xi_start, times, observe);
  }
  return acc.report("shoot_and_compare", tol);
}

std::pair<double, double> shooting_window(const Solution& sol, double lo, double hi, double max_span) {
  std::vector<double> cuts{lo};
  for (double s : sol.singularities().within(lo, hi)) cuts.push_back(s);
  cuts.push_back(hi);
  double best_a = 0.0, best_b = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double a = cuts[i], b = cuts[i + 1];
    if (i > 0) a += 1.5 * sol.exclusion_radius_at(a);
    if (i + 2 < cuts.size()) b -= 1.5 * sol.exclusion_radius_at(b);
    if (b <= a || !sol.in_domain(0.5 * (a + b))) continue;
    if (b - a > best_b - best_a) best_a = a, best_b = b;
  }
  if (best_b <= best_a) throw EmptyGridError("no singularity-free stretch for shooting");
  const double span = std::min(max_span, best_b - best_a);
  const double mid = 0.5 * (best_a + best_b);
  return {mid - 0.5 * span, span};
}

VerificationReport shoot_conservation(const QuadratureDescriptor& desc, double h0, double dh0, double span,
                                      double tol) {
  if (!(span > 0.0)) throw InvalidArgument("shooting needs a positive span");
  std::vector<double> times(kShootingSamples);
  for (int i = 0; i < kShootingSamples; ++i) {
    times[static_cast<size_t>(i)] = span * static_cast<double>(i) / (kShootingSamples - 1);
  }
  const double e0 = desc.residual(h0, dh0);
  Accumulator acc;
  auto observe = [&](const State& y, double) { acc.add(desc.residual(y[0], y[1]) - e0); };
  auto sys = [&desc](const State& s, State& ds, double) {
    ds[0] = s[1];
    ds[1] = desc.regularized_acceleration(s[0]);
  };
  State y = {h0, dh0};
  integrate_dense(sys, y, 0.0, times, observe);
  return acc.report("shoot_conservation", tol);
}

// ---------------------------------------------------------------------------

VerificationReport pde_residual(const Solution& sol, const FrameParams& frame, const PdeGrid& grid, double tol) {
  const double L = sol.lambda_gamma();
  if (std::abs(frame.lambda_gamma() - L) > 1e-12 * std::abs(L)) {
    throw InvalidArgument("pde_residual: frame lambda gamma differs from the solution's");
  }
  if (grid.n < 2 || !(grid.z_min < grid.z_max) || !(grid.t_min < grid.t_max)) {
    throw InvalidArgument("pde_residual: invalid 2D grid");
  }
  const OdeDescriptor ode(sol.equation(), L);
  const double k = frame.k(), w = frame.omega(), lambda = frame.lambda();
  const double speed = std::max(std::abs(k), std::abs(w));
  const bool native = sol.psi_native();
  auto field = [&sol, native](double xi) { return native ? sol.psi(xi) : sol.h(xi); };

  Accumulator acc;
  const double dz = (grid.z_max - grid.z_min) / (grid.n - 1);
  const double dt = (grid.t_max - grid.t_min) / (grid.n - 1);
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.t_min + dt * i;
    for (int j = 0; j < grid.n; ++j) {
      const double z = grid.z_min + dz * j;
      const double xi = frame.xi(z, t);
      if (sol.singularities().distance(xi) < sol.exclusion_radius_at(xi)) continue;
      if (!sol.in_domain(xi)) continue;
      const double delta = fd_step(sol, xi) / speed;
      const double v0 = field(xi);
      const double dtt = exact_step(t, delta);
      const Stencil st = richardson([&](double tt) { return field(frame.xi(z, tt)); }, t, dtt, v0);
      Stencil sz{0.0, 0.0};
      if (k != 0.0) {
        const double dzz = exact_step(z, delta);
        sz = richardson([&](double zz) { return field(frame.xi(zz, t)); }, z, dzz, v0);
      }
      if (native) {
        const double rhs = ode.nonlinearity_psi(v0) / lambda;
        acc.add((st.d2 - sz.d2 - rhs) / std::max(1.0, std::abs(rhs)));
      } else {
        // h^2 (psi_tt - psi_zz) = h h_tt - h_t^2 - h h_zz + h_z^2, and h^2 F(log h) / lambda = f(h) L / lambda.
        const double rhs = ode.f(v0) * L / lambda;
        const double lhs = v0 * st.d2 - st.d1 * st.d1 - v0 * sz.d2 + sz.d1 * sz.d1;
        acc.add((lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
  }
  return acc.report("pde_residual", tol);
}

// ---------------------------------------------------------------------------

VerificationReport implicit_residual_check(const ImplicitRelation& rel, const Solution& sol, const Grid& grid,
                                           double tol, double max_argument) {
  const bool quartic = rel.family() == FamilyLabel::SinhGordon;
  struct Sample {
    double xi;
    double lhs;
  };
  std::vector<Sample> samples;
  for (double xi : grid.points()) {
    if (!sol.in_domain(xi)) continue;
    const double h = sol.h(xi);
    const double x = quartic ? h * h * h * h : 2.0 * h * h * h;
    if (!std::isfinite(x) || std::abs(x) > max_argument) continue;
    try {
      samples.push_back({xi, rel.lhs(h)});
    } catch (const DomainError&) {
    }
  }
  if (samples.size() < 2) throw EmptyGridError("implicit_residual_check: fewer than two usable points");
  // lhs is increasing in h, so the sign of the relation follows h along the grid.
  const double s = samples[1].lhs >= samples[0].lhs ? 1.0 : -1.0;
  const double xi_root = samples[0].xi - samples[0].lhs / (s * rel.slope());
  Accumulator acc;
  for (const Sample& p : samples) acc.add(p.lhs - rel.rhs(p.xi, s, xi_root));
  return acc.report("implicit_residual_check", tol);
}

std::vector<VerificationReport> verify_solution(const Solution& sol, double lo, double hi, int n, double tolerance) {
  auto pick = [tolerance](double def) { return tolerance > 0.0 ? tolerance : def; };
  std::vector<VerificationReport> out;
  const Grid grid = Grid::around(sol, lo, hi, n);
  out.push_back(ode_residual(sol, grid, pick(kOdeTolerance)));
  out.push_back(first_integral_residual(sol, grid, pick(kOdeTolerance)));
  const auto [start, span] = shooting_window(sol, lo, hi);
  out.push_back(shoot_and_compare(sol, start, span, pick(kShootingTolerance)));

  const FamilyLabel f = sol.family();
  const bool has_implicit = std::abs(sol.c1()) <= kC1Tolerance &&
                            (f == FamilyLabel::Tzitzeica || f == FamilyLabel::DoddBullough ||
                             f == FamilyLabel::SinhGordon);
  if (has_implicit) {
    try {
      const ImplicitRelation rel =
          implicit_relation(f, FrameParams::from_lambda_gamma(sol.lambda_gamma(), sol.xi0()));
      // One monotone stretch: pole to half period for p, one sn quarter-to-quarter sweep for sinh.
      double a = 0.0, b = 0.0;
      const Lattice& l = sol.singularities().lattices.at(0);
      if (f == FamilyLabel::SinhGordon) {
        a = l.offset - l.period, b = l.offset;
      } else {
        a = l.offset, b = l.offset + 0.5 * l.period;
      }
      const Grid stretch(a, b, n, {{a, 0.05 * l.period}, {b, 0.05 * l.period}});
      out.push_back(implicit_residual_check(rel, sol, stretch, pick(kImplicitTolerance)));
    } catch (const SignDomainError&) {
    }
  }
  return out;
}

}  // namespace twave
