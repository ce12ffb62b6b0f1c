#pragma once

// Closed-form traveling-wave solutions as immutable evaluators.
//
// Every solution depends on the frame only through lambda*gamma (written L
// below) and xi0. Families in h evaluate h directly; the Gordon families are
// native in psi and report h = e^psi.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twave/reduction.hpp"

namespace twave {

/// Upper (Plus) or lower (Minus) choice of every +- in a closed form.
/// For the Tzitzeica-class degenerate cases Plus is the sech/sec form and
/// Minus the csch/csc companion; the Weierstrass and cnoidal forms are even
/// and ignore it.
enum class Branch { Plus, Minus };

std::string_view to_string(Branch b);
std::optional<Branch> branch_from_string(std::string_view s);

/// Poles at offset + n * period for every integer n.
struct Lattice {
  double offset = 0.0;
  double period = 0.0;
};

struct SingularSet {
  std::vector<double> points;
  std::vector<Lattice> lattices;

  bool empty() const { return points.empty() && lattices.empty(); }
  double distance(double xi) const;
  /// Singular values inside [lo, hi], sorted.
  std::vector<double> within(double lo, double hi) const;
};

class Solution {
 public:
  enum class Form {
    LiouvilleSech,
    LiouvilleSec,
    LiouvilleRational,
    DarkSech,        // 1 - 3/2 sech^2
    SingularCsch,    // 1 + 3/2 csch^2
    PeriodicSec,     // 1 - 3/2 sec^2
    PeriodicCsc,     // 1 - 3/2 csc^2
    WeierstrassP,    // L (2 p(xi - xi0) - c1/(3L))
    Cnoidal,         // 4^{-1/3} (1 - sqrt3 cn^2)
    SineKink,        // shift + 4 atan(exp(.))
    SineAmplitude,   // 2 am(.; 2/(1 - c1))
    SinhKinkExp,     // 2 atanh(exp(.))
    SinhKinkTan,     // 2 atanh(tan(.))
    SinhAtanhSn,     // atanh(sn(.; (2c1-1)/(2c1+1)))
    SinhAsinhCn,     // asinh(A / cn(.; 2/(1-2c1)))
  };

  FamilyLabel family() const { return family_; }
  CaseLabel case_label() const { return case_; }
  Branch branch() const { return branch_; }
  Form form() const { return form_; }
  double c1() const { return c1_; }
  double lambda_gamma() const { return lambda_gamma_; }
  double xi0() const { return xi0_; }
  EquationParams equation() const { return EquationParams::for_family(family_); }

  /// True for the sine- and sinh-Gordon solutions.
  bool psi_native() const { return psi_native_; }
  /// False for solutions that blow up or grow without bound on the real line.
  bool bounded() const { return bounded_; }

  /// NaN outside the real domain, +-inf at poles.
  double h(double xi) const;
  /// log h where h > 0 (NaN otherwise); the native value for Gordon families.
  double psi(double xi) const;
  /// Finite value of the primary variable at xi.
  bool in_domain(double xi) const;

  const SingularSet& singularities() const { return singular_; }
  /// Characteristic length (inverse wavenumber, or period / 2pi) used for step sizes.
  double length_scale() const { return length_scale_; }
  /// Exclusion radius around a singular point: 0.05 * period on a lattice,
  /// 0.05 for isolated points.
  double exclusion_radius_at(double xi) const;

  /// Derived constants of the closed form (wavenumber, parameter, invariants...).
  const std::map<std::string, double>& constants() const { return constants_; }

 private:
  friend class SolutionBuilder;
  Solution() = default;

  double core(double x) const;

  FamilyLabel family_ = FamilyLabel::Tzitzeica;
  CaseLabel case_ = CaseLabel::GeneralWeierstrass;
  Branch branch_ = Branch::Plus;
  Form form_ = Form::WeierstrassP;
  double c1_ = 0.0;
  double lambda_gamma_ = 1.0;
  double xi0_ = 0.0;
  bool psi_native_ = false;
  bool bounded_ = true;
  // h(xi) = sign_ * core(reflect_ ? -xi : xi)
  double sign_ = 1.0;
  bool reflect_ = false;
  // Parameters of the core form, meaning depends on form_.
  double k_ = 0.0;
  double m_ = 0.0;
  double s_ = 1.0;
  double amp_ = 0.0;
  double shift_ = 0.0;
  double core_xi0_ = 0.0;
  specfun::WeierstrassInvariants inv_;
  double length_scale_ = 1.0;
  SingularSet singular_;
  std::map<std::string, double> constants_;
};

Solution liouville(double c1, const FrameParams& frame);

/// Throws CaseMismatchError when `expected` is given and c1 selects another case,
/// SignDomainError when L has the wrong sign for the case.
Solution tzitzeica(double c1, const FrameParams& frame, Branch branch = Branch::Plus,
                   std::optional<CaseLabel> expected = std::nullopt);

/// Tzitzeica at (-c1, -L).
Solution dodd_bullough(double c1, const FrameParams& frame, Branch branch = Branch::Plus,
                       std::optional<CaseLabel> expected = std::nullopt);

/// TzitzeicaDoddBullough: h(xi) = -h_DB(-xi). DoddBulloughMikhailov: h(xi) = -h_Tz(-xi).
Solution tdb_dbm(FamilyLabel family, double c1, const FrameParams& frame, Branch branch = Branch::Plus,
                 std::optional<CaseLabel> expected = std::nullopt);

Solution sine_gordon(double c1, const FrameParams& frame, Branch branch = Branch::Plus);
Solution sinh_gordon(double c1, const FrameParams& frame, Branch branch = Branch::Plus);

/// Dispatch on family.
Solution make_solution(FamilyLabel family, double c1, const FrameParams& frame, Branch branch = Branch::Plus,
                       std::optional<CaseLabel> expected = std::nullopt);

/// c1 = 0 implicit relation lhs(h) = s * slope * (xi - xi_root), where xi_root
/// is the point at which h vanishes and s = +-1.
///   Tzitzeica, DoddBullough: lhs = h 2F1(1/2, 1/3; 4/3; -2h^3), slope 1/sqrt(|L|)
///   SinhGordon:              lhs = h 2F1(1/2, 1/4; 5/4; -h^4),  slope 1/sqrt(2L)
class ImplicitRelation {
 public:
  FamilyLabel family() const { return family_; }
  double slope() const { return slope_; }
  /// Hypergeometric side evaluated at h.
  double lhs(double h) const;
  /// Linear side for sign s and root xi_root.
  double rhs(double xi, double s, double xi_root) const { return s * slope_ * (xi - xi_root); }

 private:
  friend ImplicitRelation implicit_relation(FamilyLabel family, const FrameParams& frame);
  FamilyLabel family_ = FamilyLabel::Tzitzeica;
  double slope_ = 1.0;
};

/// Throws UnsupportedFamilyError for families without a real implicit form
/// (Liouville, sine-Gordon, the Tzitzeica variants with h -> -h) and
/// SignDomainError when L has the sign for which the relation is not real.
ImplicitRelation implicit_relation(FamilyLabel family, const FrameParams& frame);

}  // namespace twave
