#include "twave/reduction.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "twave/errors.hpp"

namespace twave {

namespace {

struct FamilyName {
  FamilyLabel label;
  std::string_view canonical;
  std::string_view cli;
};

constexpr std::array<FamilyName, 8> kFamilyNames = {{
    {FamilyLabel::Liouville, "Liouville", "liouville"},
    {FamilyLabel::Tzitzeica, "Tzitzeica", "tzitzeica"},
    {FamilyLabel::DoddBullough, "DoddBullough", "dodd-bullough"},
    {FamilyLabel::TzitzeicaDoddBullough, "TzitzeicaDoddBullough", "tzitzeica-dodd-bullough"},
    {FamilyLabel::DoddBulloughMikhailov, "DoddBulloughMikhailov", "dodd-bullough-mikhailov"},
    {FamilyLabel::SineGordon, "SineGordon", "sine-gordon"},
    {FamilyLabel::SinhGordon, "SinhGordon", "sinh-gordon"},
    {FamilyLabel::GenericTwoExponential, "GenericTwoExponential", "generic"},
}};

constexpr std::array<std::pair<CaseLabel, std::string_view>, 12> kCaseNames = {{
    {CaseLabel::LiouvilleSoliton, "LiouvilleSoliton"},
    {CaseLabel::LiouvillePeriodic, "LiouvillePeriodic"},
    {CaseLabel::LiouvilleRational, "LiouvilleRational"},
    {CaseLabel::Degenerate1a, "Degenerate1a"},
    {CaseLabel::Degenerate1b, "Degenerate1b"},
    {CaseLabel::Equianharmonic, "Equianharmonic"},
    {CaseLabel::Lemniscatic, "Lemniscatic"},
    {CaseLabel::GeneralWeierstrass, "GeneralWeierstrass"},
    {CaseLabel::KinkC1Plus, "KinkC1Plus"},
    {CaseLabel::KinkC1Minus, "KinkC1Minus"},
    {CaseLabel::AmplitudeGeneric, "AmplitudeGeneric"},
    {CaseLabel::AmplitudeC1Zero, "AmplitudeC1Zero"},
}};

bool is_integer(double v) { return std::isfinite(v) && v == std::round(v); }

// h^e; integer exponents accept any real h, others require h > 0.
double power(double h, double e) {
  if (e == 0.0) return 1.0;
  if (is_integer(e)) return std::pow(h, e);
  if (!(h > 0.0)) {
    std::ostringstream msg;
    msg << "h = " << h << " has no real power " << e;
    throw DomainError(msg.str());
  }
  return std::pow(h, e);
}

bool tzitzeica_class(FamilyLabel f) {
  return f == FamilyLabel::Tzitzeica || f == FamilyLabel::DoddBullough ||
         f == FamilyLabel::TzitzeicaDoddBullough || f == FamilyLabel::DoddBulloughMikhailov;
}

// Families whose closed forms follow from Tzitzeica with c1 -> -c1.
bool sign_flipped(FamilyLabel f) {
  return f == FamilyLabel::DoddBullough || f == FamilyLabel::TzitzeicaDoddBullough;
}

bool near(double x, double target) { return std::abs(x - target) <= kC1Tolerance; }

}  // namespace

std::string_view to_string(FamilyLabel f) {
  for (const auto& n : kFamilyNames) {
    if (n.label == f) return n.canonical;
  }
  return "?";
}

std::string_view to_string(CaseLabel c) {
  for (const auto& [label, name] : kCaseNames) {
    if (label == c) return name;
  }
  return "?";
}

std::optional<FamilyLabel> family_from_string(std::string_view name) {
  for (const auto& n : kFamilyNames) {
    if (n.canonical == name || n.cli == name) return n.label;
  }
  return std::nullopt;
}

std::optional<CaseLabel> case_from_string(std::string_view name) {
  for (const auto& [label, n] : kCaseNames) {
    if (n == name) return label;
  }
  return std::nullopt;
}

void EquationParams::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("equation parameters must be finite");
  }
  if (alpha == 0.0 && beta == 0.0) {
    throw InvalidArgument("alpha and beta must not both be zero");
  }
  if (a == 0.0) {
    throw InvalidArgument("exponent a must be nonzero");
  }
  if (beta != 0.0 && b == 0.0) {
    throw InvalidArgument("exponent b must be nonzero when beta != 0");
  }
  if (imaginary && !(beta == -alpha && b == -a)) {
    throw InvalidArgument("imaginary exponents require beta = -alpha and b = -a");
  }
}

EquationParams EquationParams::for_family(FamilyLabel family) {
  switch (family) {
    case FamilyLabel::Liouville: return {1.0, 0.0, 1.0, 0.0, false};
    case FamilyLabel::Tzitzeica: return {1.0, -1.0, 1.0, -2.0, false};
    case FamilyLabel::DoddBullough: return {-1.0, 1.0, 1.0, -2.0, false};
    case FamilyLabel::TzitzeicaDoddBullough: return {1.0, 1.0, 1.0, -2.0, false};
    case FamilyLabel::DoddBulloughMikhailov: return {-1.0, -1.0, 1.0, -2.0, false};
    case FamilyLabel::SineGordon: return {0.5, -0.5, 1.0, -1.0, true};
    case FamilyLabel::SinhGordon: return {0.5, -0.5, 2.0, -2.0, false};
    case FamilyLabel::GenericTwoExponential: break;
  }
  throw InvalidArgument("the generic family has no fixed parameter tuple");
}

FamilyLabel classify_family(const EquationParams& params) {
  params.validate();
  for (FamilyLabel f : {FamilyLabel::Liouville, FamilyLabel::Tzitzeica, FamilyLabel::DoddBullough,
                        FamilyLabel::TzitzeicaDoddBullough, FamilyLabel::DoddBulloughMikhailov,
                        FamilyLabel::SineGordon, FamilyLabel::SinhGordon}) {
    const EquationParams ref = EquationParams::for_family(f);
    if (ref.alpha == params.alpha && ref.beta == params.beta && ref.a == params.a && ref.b == params.b &&
        ref.imaginary == params.imaginary) {
      return f;
    }
  }
  return FamilyLabel::GenericTwoExponential;
}

FrameParams::FrameParams(double lambda, double k, double omega, double xi0)
    : lambda_(lambda), k_(k), omega_(omega), xi0_(xi0) {
  if (!std::isfinite(lambda) || !std::isfinite(k) || !std::isfinite(omega) || !std::isfinite(xi0)) {
    throw InvalidArgument("frame parameters must be finite");
  }
  if (lambda == 0.0) {
    throw InvalidArgument("lambda must be nonzero");
  }
  if (gamma() == 0.0) {
    throw FrameDegenerateError("gamma = omega^2 - k^2 vanishes (k = +-omega)");
  }
}

FrameParams FrameParams::from_lambda_gamma(double lambda_gamma, double xi0) {
  return FrameParams(lambda_gamma, 0.0, 1.0, xi0);
}

FrameParams FrameParams::with_xi0(double xi0) const { return FrameParams(lambda_, k_, omega_, xi0); }

// ---------------------------------------------------------------------------

OdeDescriptor::OdeDescriptor(const EquationParams& params, double lambda_gamma)
    : params_(params), lambda_gamma_(lambda_gamma) {
  params_.validate();
  if (lambda_gamma == 0.0 || !std::isfinite(lambda_gamma)) {
    throw FrameDegenerateError("lambda gamma must be finite and nonzero");
  }
}

double OdeDescriptor::nonlinearity_psi(double psi) const {
  if (params_.imaginary) return 2.0 * params_.alpha * std::sin(params_.a * psi);
  double v = params_.alpha * std::exp(params_.a * psi);
  if (params_.beta != 0.0) v += params_.beta * std::exp(params_.b * psi);
  return v;
}

double OdeDescriptor::f(double h) const {
  if (params_.imaginary) {
    if (!(h > 0.0)) throw DomainError("imaginary exponents require h > 0");
    return h * h * nonlinearity_psi(std::log(h)) / lambda_gamma_;
  }
  // Term by term so that h^{b+2} stays finite at h = 0 for b = -2.
  double v = params_.alpha * power(h, params_.a + 2.0);
  if (params_.beta != 0.0) v += params_.beta * power(h, params_.b + 2.0);
  return v / lambda_gamma_;
}

double OdeDescriptor::nonlinearity_h(double h) const {
  if (params_.imaginary) {
    if (!(h > 0.0)) throw DomainError("imaginary exponents require h > 0");
    return nonlinearity_psi(std::log(h));
  }
  if (h == 0.0) throw DomainError("the nonlinearity is singular at h = 0");
  double v = params_.alpha * power(h, params_.a);
  if (params_.beta != 0.0) v += params_.beta * power(h, params_.b);
  return v;
}

double OdeDescriptor::residual(double h, double dh, double d2h) const {
  return h * d2h - dh * dh - f(h);
}

double OdeDescriptor::psi_residual(double psi, double d2psi) const {
  return d2psi - nonlinearity_psi(psi) / lambda_gamma_;
}

QuadratureDescriptor::QuadratureDescriptor(const EquationParams& params, double lambda_gamma, double c1)
    : params_(params), lambda_gamma_(lambda_gamma), c1_(c1) {
  params_.validate();
  if (lambda_gamma == 0.0 || !std::isfinite(lambda_gamma)) {
    throw FrameDegenerateError("lambda gamma must be finite and nonzero");
  }
  if (!std::isfinite(c1)) throw InvalidArgument("c1 must be finite");
}

double QuadratureDescriptor::G(double h) const {
  if (params_.imaginary) {
    if (!(h > 0.0)) throw DomainError("imaginary exponents require h > 0");
    return G_psi(std::log(h));
  }
  double v = c1_ + params_.alpha / params_.a * power(h, params_.a);
  if (params_.beta != 0.0) v += params_.beta / params_.b * power(h, params_.b);
  return v;
}

double QuadratureDescriptor::h2G(double h) const {
  if (params_.imaginary) return h * h * G(h);
  double v = c1_ * h * h + params_.alpha / params_.a * power(h, params_.a + 2.0);
  if (params_.beta != 0.0) v += params_.beta / params_.b * power(h, params_.b + 2.0);
  return v;
}

double QuadratureDescriptor::G_psi(double psi) const {
  if (params_.imaginary) return c1_ - 2.0 * params_.alpha / params_.a * std::cos(params_.a * psi);
  double v = c1_ + params_.alpha / params_.a * std::exp(params_.a * psi);
  if (params_.beta != 0.0) v += params_.beta / params_.b * std::exp(params_.b * psi);
  return v;
}

double QuadratureDescriptor::residual(double h, double dh) const {
  return dh * dh - 2.0 / lambda_gamma_ * h2G(h);
}

double QuadratureDescriptor::psi_residual(double psi, double dpsi) const {
  return dpsi * dpsi - 2.0 / lambda_gamma_ * G_psi(psi);
}

double QuadratureDescriptor::regularized_acceleration(double h) const {
  if (params_.imaginary) {
    throw UnsupportedFamilyError("imaginary exponents have no real h-polynomial acceleration");
  }
  double v = 2.0 * c1_ * h;
  const double ca = params_.alpha * (params_.a + 2.0) / params_.a;
  if (ca != 0.0) v += ca * power(h, params_.a + 1.0);
  if (params_.beta != 0.0) {
    const double cb = params_.beta * (params_.b + 2.0) / params_.b;
    if (cb != 0.0) v += cb * power(h, params_.b + 1.0);
  }
  return v / lambda_gamma_;
}

double QuadratureDescriptor::c1_from_state(const EquationParams& params, double lambda_gamma, double h,
                                           double dh) {
  if (h == 0.0) throw DomainError("c1 is undefined at h = 0");
  const QuadratureDescriptor zero(params, lambda_gamma, 0.0);
  return lambda_gamma * dh * dh / (2.0 * h * h) - zero.G(h);
}

// ---------------------------------------------------------------------------

EllipticData elliptic_data(FamilyLabel family, const FrameParams& frame, double c1) {
  if (family != FamilyLabel::Liouville && !tzitzeica_class(family)) {
    std::ostringstream msg;
    msg << "elliptic_data: " << to_string(family) << " has no cubic first integral";
    throw UnsupportedFamilyError(msg.str());
  }
  if (!std::isfinite(c1)) throw InvalidArgument("c1 must be finite");
  const EquationParams eq = EquationParams::for_family(family);
  EllipticData d;
  d.c1 = c1;
  d.r = frame.r();
  d.p = 2.0 * c1 * d.r;
  // (h')^2 = 2r h^2 G(h) with a = 1 and b in {0, -2}.
  d.a3 = 2.0 * d.r * eq.alpha / eq.a;
  d.a2 = 2.0 * d.r * c1;
  d.a1 = 0.0;
  d.a0 = eq.beta != 0.0 ? 2.0 * d.r * eq.beta / eq.b : 0.0;
  d.invariants.g2 = (d.a2 * d.a2 - 3.0 * d.a1 * d.a3) / 12.0;
  d.invariants.g3 = (9.0 * d.a1 * d.a2 * d.a3 - 27.0 * d.a0 * d.a3 * d.a3 - 2.0 * d.a2 * d.a2 * d.a2) / 432.0;
  d.delta = d.invariants.discriminant();
  d.roots = specfun::weierstrass_roots(d.invariants);
  if (d.invariants.degenerate()) {
    if (d.invariants.g3 < 0.0) d.e_hat = d.roots.e1;
    if (d.invariants.g3 > 0.0) d.e_tilde = -d.roots.e3;
  }
  return d;
}

std::optional<double> canonical_c1(FamilyLabel family, CaseLabel c) {
  const double lemniscatic = 3.0 / std::cbrt(4.0);
  switch (family) {
    case FamilyLabel::Liouville:
      if (c == CaseLabel::LiouvilleRational) return 0.0;
      return std::nullopt;
    case FamilyLabel::Tzitzeica:
    case FamilyLabel::DoddBullough:
    case FamilyLabel::TzitzeicaDoddBullough:
    case FamilyLabel::DoddBulloughMikhailov: {
      const double sign = sign_flipped(family) ? 1.0 : -1.0;
      if (c == CaseLabel::Degenerate1a || c == CaseLabel::Degenerate1b) return sign * 1.5;
      if (c == CaseLabel::Equianharmonic) return 0.0;
      if (c == CaseLabel::Lemniscatic) return sign * lemniscatic;
      return std::nullopt;
    }
    case FamilyLabel::SineGordon:
      if (c == CaseLabel::KinkC1Plus) return 1.0;
      if (c == CaseLabel::KinkC1Minus) return -1.0;
      if (c == CaseLabel::AmplitudeC1Zero) return 0.0;
      return std::nullopt;
    case FamilyLabel::SinhGordon:
      if (c == CaseLabel::KinkC1Plus) return 0.5;
      if (c == CaseLabel::KinkC1Minus) return -0.5;
      if (c == CaseLabel::AmplitudeC1Zero) return 0.0;
      return std::nullopt;
    case FamilyLabel::GenericTwoExponential:
      return std::nullopt;
  }
  return std::nullopt;
}

CaseLabel classify_case(FamilyLabel family, const EllipticData& data, const FrameParams& frame) {
  const double c1 = data.c1;
  switch (family) {
    case FamilyLabel::Liouville: {
      if (near(c1, 0.0)) return CaseLabel::LiouvilleRational;
      return c1 / (2.0 * frame.lambda_gamma()) > 0.0 ? CaseLabel::LiouvilleSoliton : CaseLabel::LiouvillePeriodic;
    }
    case FamilyLabel::Tzitzeica:
    case FamilyLabel::DoddBullough:
    case FamilyLabel::TzitzeicaDoddBullough:
    case FamilyLabel::DoddBulloughMikhailov: {
      if (data.invariants.degenerate()) {
        return data.invariants.g3 < 0.0 ? CaseLabel::Degenerate1a : CaseLabel::Degenerate1b;
      }
      if (near(c1, *canonical_c1(family, CaseLabel::Equianharmonic))) return CaseLabel::Equianharmonic;
      if (near(c1, *canonical_c1(family, CaseLabel::Lemniscatic))) return CaseLabel::Lemniscatic;
      return CaseLabel::GeneralWeierstrass;
    }
    case FamilyLabel::SineGordon:
    case FamilyLabel::SinhGordon: {
      if (near(c1, *canonical_c1(family, CaseLabel::KinkC1Plus))) return CaseLabel::KinkC1Plus;
      if (near(c1, *canonical_c1(family, CaseLabel::KinkC1Minus))) return CaseLabel::KinkC1Minus;
      if (near(c1, 0.0)) return CaseLabel::AmplitudeC1Zero;
      return CaseLabel::AmplitudeGeneric;
    }
    case FamilyLabel::GenericTwoExponential:
      break;
  }
  throw UnsupportedFamilyError("the generic two-exponential family has no case taxonomy");
}

CaseLabel classify_case(FamilyLabel family, const FrameParams& frame, double c1) {
  if (family == FamilyLabel::SineGordon || family == FamilyLabel::SinhGordon) {
    EllipticData d;
    d.c1 = c1;
    return classify_case(family, d, frame);
  }
  return classify_case(family, elliptic_data(family, frame, c1), frame);
}

}  // namespace twave
