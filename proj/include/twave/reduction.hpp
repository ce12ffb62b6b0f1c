#pragma once

// Traveling-wave reduction of psi_uv = alpha e^{a psi} + beta e^{b psi}.
//
// Along z = u - lambda v, t = u + lambda v and xi = k z - omega t, with
// gamma = omega^2 - k^2 and h = e^psi, the PDE becomes
//
//   h h'' - h'^2 = f(h) = h^2 (alpha h^a + beta h^b) / (lambda gamma)
//
// with first integral (h')^2 = (2 / (lambda gamma)) h^2 G(h),
// G(h) = c1 + (alpha/a) h^a + (beta/b) h^b. The constant c1 equals
// c0 lambda gamma / 2 for the Bernoulli constant c0 of the intermediate
// integration; only the c1 form is used here.

#include <optional>
#include <string>
#include <string_view>

#include "twave/specfun.hpp"

namespace twave {

enum class FamilyLabel {
  Liouville,
  Tzitzeica,
  DoddBullough,
  TzitzeicaDoddBullough,
  DoddBulloughMikhailov,
  SineGordon,
  SinhGordon,
  GenericTwoExponential,
};

enum class CaseLabel {
  LiouvilleSoliton,
  LiouvillePeriodic,
  LiouvilleRational,
  Degenerate1a,
  Degenerate1b,
  Equianharmonic,
  Lemniscatic,
  GeneralWeierstrass,
  KinkC1Plus,
  KinkC1Minus,
  AmplitudeGeneric,
  AmplitudeC1Zero,
};

std::string_view to_string(FamilyLabel f);
std::string_view to_string(CaseLabel c);
/// Accepts the canonical names ("Tzitzeica") and the CLI spellings ("tzitzeica",
/// "dodd-bullough", "sine-gordon", ...).
std::optional<FamilyLabel> family_from_string(std::string_view name);
std::optional<CaseLabel> case_from_string(std::string_view name);

/// Coefficients and exponents of the two exponential terms.
///
/// With imaginary == true the exponents are i*a and i*b and the amplitudes are
/// alpha/i and beta/i; only the sine-Gordon tuple (1/2, -1/2, 1, -1) is
/// representable this way, giving alpha e^{ia psi} + beta e^{ib psi} = sin(psi).
struct EquationParams {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  bool imaginary = false;

  /// Throws InvalidArgument when alpha = beta = 0, a = 0, b = 0 with beta != 0,
  /// or an imaginary tuple that does not produce a real nonlinearity.
  void validate() const;

  static EquationParams for_family(FamilyLabel family);
};

class FrameParams {
 public:
  /// Throws FrameDegenerateError when k = +-omega and InvalidArgument when lambda = 0.
  FrameParams(double lambda, double k, double omega, double xi0 = 0.0);

  /// lambda = lambda_gamma, k = 0, omega = 1, so gamma = 1.
  static FrameParams from_lambda_gamma(double lambda_gamma, double xi0 = 0.0);

  double lambda() const { return lambda_; }
  double k() const { return k_; }
  double omega() const { return omega_; }
  double gamma() const { return omega_ * omega_ - k_ * k_; }
  double lambda_gamma() const { return lambda_ * gamma(); }
  double r() const { return 1.0 / lambda_gamma(); }
  double xi0() const { return xi0_; }

  /// xi = k z - omega t
  double xi(double z, double t) const { return k_ * z - omega_ * t; }

  FrameParams with_xi0(double xi0) const;

 private:
  double lambda_;
  double k_;
  double omega_;
  double xi0_;
};

/// Exact match on the catalogued tuples; anything else is GenericTwoExponential.
FamilyLabel classify_family(const EquationParams& params);

/// Second-order traveling ODE.
class OdeDescriptor {
 public:
  OdeDescriptor(const EquationParams& params, double lambda_gamma);

  const EquationParams& params() const { return params_; }
  double lambda_gamma() const { return lambda_gamma_; }

  /// alpha e^{a psi} + beta e^{b psi} (sin psi for sine-Gordon).
  double nonlinearity_psi(double psi) const;
  /// f(h); for non-integer exponents requires h > 0.
  double f(double h) const;
  /// alpha h^a + beta h^b for h != 0, i.e. the PDE right side in terms of h.
  double nonlinearity_h(double h) const;
  /// h h'' - h'^2 - f(h)
  double residual(double h, double dh, double d2h) const;
  /// psi'' - nonlinearity_psi(psi) / (lambda gamma)
  double psi_residual(double psi, double d2psi) const;

 private:
  EquationParams params_;
  double lambda_gamma_;
};

/// First-integral quadrature int dh / (h sqrt(G(h))) = +-sqrt(2/(lambda gamma)) (xi - xi0).
class QuadratureDescriptor {
 public:
  QuadratureDescriptor(const EquationParams& params, double lambda_gamma, double c1);

  const EquationParams& params() const { return params_; }
  double lambda_gamma() const { return lambda_gamma_; }
  double c1() const { return c1_; }

  /// G(h) = c1 + (alpha/a) h^a + (beta/b) h^b (the beta term is absent when beta = 0).
  double G(double h) const;
  /// h^2 G(h), evaluated term by term so that integer exponents stay finite at h = 0.
  double h2G(double h) const;
  /// G(e^psi) written natively in psi: c1 - cos psi for sine-Gordon,
  /// c1 + cosh(2 psi)/2 for sinh-Gordon.
  double G_psi(double psi) const;
  /// (h')^2 - (2/(lambda gamma)) h^2 G(h)
  double residual(double h, double dh) const;
  /// (psi')^2 - (2/(lambda gamma)) G_psi(psi)
  double psi_residual(double psi, double dpsi) const;
  /// h'' implied by differentiating the first integral:
  /// (2 c1 h + alpha (a+2)/a h^{a+1} + beta (b+2)/b h^{b+1}) / (lambda gamma).
  /// Coincides with f(h)/h + h'^2/h on the first-integral manifold and is
  /// regular at h = 0 whenever the exponents allow it.
  double regularized_acceleration(double h) const;
  /// c1 implied by a state (h, h') with h != 0.
  static double c1_from_state(const EquationParams& params, double lambda_gamma, double h, double dh);

 private:
  EquationParams params_;
  double lambda_gamma_;
  double c1_;
};

/// Coefficients of (h')^2 = a3 h^3 + a2 h^2 + a1 h + a0 and the Weierstrass
/// data of the substitution h = (4 p - a2/3) / a3.
struct EllipticData {
  double c1 = 0.0;
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  double r = 0.0;
  double p = 0.0;  // 2 c1 r
  specfun::WeierstrassInvariants invariants;
  double delta = 0.0;
  specfun::CubicRoots roots;
  /// Repeated-root parameter of the degenerate branch: e_hat > 0 when g3 < 0
  /// (e1 = e2 = e_hat), or e_tilde > 0 when g3 > 0 (e2 = e3 = -e_tilde).
  std::optional<double> e_hat;
  std::optional<double> e_tilde;

  double g2() const { return invariants.g2; }
  double g3() const { return invariants.g3; }
};

/// Throws UnsupportedFamilyError for the Gordon families and the generic tuple.
EllipticData elliptic_data(FamilyLabel family, const FrameParams& frame, double c1);

/// Absolute tolerance on user-supplied special values of c1.
inline constexpr double kC1Tolerance = 1e-12;

/// Canonical c1 for each case of a family (e.g. -3/2 for the degenerate
/// Tzitzeica case). nullopt when the case has no fixed c1 or does not apply.
std::optional<double> canonical_c1(FamilyLabel family, CaseLabel c);

/// Case taxonomy. Tzitzeica-class families use the scaled discriminant test and
/// the sign of g3; Gordon families dispatch on c1 within kC1Tolerance.
/// For the Gordon families only data.c1 is read.
CaseLabel classify_case(FamilyLabel family, const EllipticData& data, const FrameParams& frame);

/// Convenience: builds the elliptic data where applicable and classifies.
CaseLabel classify_case(FamilyLabel family, const FrameParams& frame, double c1);

}  // namespace twave
