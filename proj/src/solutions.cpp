#include "twave/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "twave/errors.hpp"
#include "twave/specfun.hpp"

namespace twave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLatticeExclusion = 0.05;
constexpr double kPointExclusion = 0.05;

double upper(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

void require_sign(bool ok, const char* what, double lambda_gamma) {
  if (!ok) {
    std::ostringstream msg;
    msg << what << " (lambda gamma = " << lambda_gamma << ")";
    throw SignDomainError(msg.str());
  }
}

void check_expected(FamilyLabel family, CaseLabel got, std::optional<CaseLabel> expected) {
  if (expected && *expected != got) {
    std::ostringstream msg;
    msg << to_string(family) << ": c1 selects " << to_string(got) << ", not " << to_string(*expected);
    throw CaseMismatchError(msg.str());
  }
}

double nearest_lattice_distance(double xi, const Lattice& l) {
  const double d = xi - l.offset;
  return std::abs(d - l.period * std::round(d / l.period));
}

}  // namespace

std::string_view to_string(Branch b) { return b == Branch::Plus ? "+" : "-"; }

std::optional<Branch> branch_from_string(std::string_view s) {
  if (s == "+" || s == "plus" || s == "1" || s == "+1") return Branch::Plus;
  if (s == "-" || s == "minus" || s == "-1") return Branch::Minus;
  return std::nullopt;
}

double SingularSet::distance(double xi) const {
  double best = kInf;
  for (double p : points) best = std::min(best, std::abs(xi - p));
  for (const Lattice& l : lattices) best = std::min(best, nearest_lattice_distance(xi, l));
  return best;
}

std::vector<double> SingularSet::within(double lo, double hi) const {
  std::vector<double> out;
  for (double p : points) {
    if (p >= lo && p <= hi) out.push_back(p);
  }
  for (const Lattice& l : lattices) {
    const double first = std::ceil((lo - l.offset) / l.period);
    const double last = std::floor((hi - l.offset) / l.period);
    if (last - first > 1e6) throw InvalidArgument("singular lattice too dense for the requested range");
    for (double n = first; n <= last; n += 1.0) out.push_back(l.offset + n * l.period);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

class SolutionBuilder {
 public:
  static Solution base(FamilyLabel family, CaseLabel c, Branch branch, double c1, double lambda_gamma, double xi0) {
    Solution s;
    s.family_ = family;
    s.case_ = c;
    s.branch_ = branch;
    s.c1_ = c1;
    s.lambda_gamma_ = lambda_gamma;
    s.xi0_ = xi0;
    s.core_xi0_ = xi0;
    return s;
  }

  static Solution liouville(double c1, const FrameParams& frame) {
    const double L = frame.lambda_gamma();
    const double xi0 = frame.xi0();
    const CaseLabel c = classify_case(FamilyLabel::Liouville, frame, c1);
    Solution s = base(FamilyLabel::Liouville, c, Branch::Plus, c1, L, xi0);
    if (c == CaseLabel::LiouvilleRational) {
      s.form_ = Solution::Form::LiouvilleRational;
      s.amp_ = 2.0 * L;
      s.bounded_ = false;
      s.length_scale_ = std::sqrt(2.0 * std::abs(L));
      s.singular_.points.push_back(xi0);
      s.constants_["amplitude"] = s.amp_;
      return s;
    }
    const double q = c1 / (2.0 * L);
    s.amp_ = -c1;
    s.k_ = std::sqrt(std::abs(q));
    s.length_scale_ = 1.0 / s.k_;
    if (c == CaseLabel::LiouvilleSoliton) {
      s.form_ = Solution::Form::LiouvilleSech;
    } else {
      s.form_ = Solution::Form::LiouvilleSec;
      s.bounded_ = false;
      s.singular_.lattices.push_back({xi0 + 0.5 * kPi / s.k_, kPi / s.k_});
      s.constants_["period"] = kPi / s.k_;
    }
    s.constants_["amplitude"] = s.amp_;
    s.constants_["k"] = s.k_;
    return s;
  }

  static Solution tzitzeica(double c1, const FrameParams& frame, Branch branch, std::optional<CaseLabel> expected) {
    const double L = frame.lambda_gamma();
    const double xi0 = frame.xi0();
    const EllipticData data = elliptic_data(FamilyLabel::Tzitzeica, frame, c1);
    const CaseLabel c = classify_case(FamilyLabel::Tzitzeica, data, frame);
    check_expected(FamilyLabel::Tzitzeica, c, expected);
    Solution s = base(FamilyLabel::Tzitzeica, c, branch, c1, L, xi0);

    switch (c) {
      case CaseLabel::Degenerate1a: {
        s.k_ = 0.5 * std::sqrt(3.0 / L);
        s.length_scale_ = 1.0 / s.k_;
        if (branch == Branch::Plus) {
          s.form_ = Solution::Form::DarkSech;
        } else {
          s.form_ = Solution::Form::SingularCsch;
          s.bounded_ = false;
          s.singular_.points.push_back(xi0);
        }
        s.constants_["k"] = s.k_;
        return s;
      }
      case CaseLabel::Degenerate1b: {
        s.k_ = 0.5 * std::sqrt(-3.0 / L);
        s.length_scale_ = 1.0 / s.k_;
        s.bounded_ = false;
        const double period = kPi / s.k_;
        if (branch == Branch::Plus) {
          s.form_ = Solution::Form::PeriodicSec;
          s.singular_.lattices.push_back({xi0 + 0.5 * period, period});
        } else {
          s.form_ = Solution::Form::PeriodicCsc;
          s.singular_.lattices.push_back({xi0, period});
        }
        s.constants_["k"] = s.k_;
        s.constants_["period"] = period;
        return s;
      }
      case CaseLabel::Lemniscatic:
        if (L > 0.0) {
          s.form_ = Solution::Form::Cnoidal;
          s.k_ = std::pow(3.0, 0.25) / (std::cbrt(2.0) * std::sqrt(L));
          s.m_ = 0.5;
          const double period = 2.0 * specfun::ellint_k(s.m_) / s.k_;
          s.length_scale_ = period / (2.0 * kPi);
          s.constants_["k"] = s.k_;
          s.constants_["m"] = s.m_;
          s.constants_["period"] = period;
          return s;
        }
        // The cnoidal form needs L > 0; for L < 0 the pole-bearing p form remains.
        break;
      default:
        break;
    }

    s.form_ = Solution::Form::WeierstrassP;
    s.inv_ = data.invariants;
    s.amp_ = 2.0 * L;
    s.shift_ = -c1 / 3.0;
    s.bounded_ = false;
    const std::optional<double> period = specfun::weierstrass_real_period(s.inv_);
    if (!period) throw DomainError("Weierstrass form without a real period");
    s.length_scale_ = *period / (2.0 * kPi);
    s.singular_.lattices.push_back({xi0, *period});
    s.constants_["g2"] = s.inv_.g2;
    s.constants_["g3"] = s.inv_.g3;
    s.constants_["delta"] = s.inv_.discriminant();
    s.constants_["period"] = *period;
    return s;
  }

  static Solution dodd_bullough(double c1, const FrameParams& frame, Branch branch, std::optional<CaseLabel> expected) {
    const FrameParams dual = FrameParams::from_lambda_gamma(-frame.lambda_gamma(), frame.xi0());
    Solution s = tzitzeica(-c1, dual, branch, expected);
    s.family_ = FamilyLabel::DoddBullough;
    s.c1_ = c1;
    s.lambda_gamma_ = frame.lambda_gamma();
    return s;
  }

  static Solution reflected(Solution s, FamilyLabel family) {
    s.family_ = family;
    s.sign_ = -s.sign_;
    s.reflect_ = !s.reflect_;
    for (double& p : s.singular_.points) p = -p;
    for (Lattice& l : s.singular_.lattices) l.offset = -l.offset;
    return s;
  }

  static Solution sine_gordon(double c1, const FrameParams& frame, Branch branch) {
    const double L = frame.lambda_gamma();
    const double xi0 = frame.xi0();
    const CaseLabel c = classify_case(FamilyLabel::SineGordon, frame, c1);
    Solution s = base(FamilyLabel::SineGordon, c, branch, c1, L, xi0);
    s.psi_native_ = true;
    if (c == CaseLabel::KinkC1Plus || c == CaseLabel::KinkC1Minus) {
      const bool plus = c == CaseLabel::KinkC1Plus;
      require_sign(plus ? L > 0.0 : L < 0.0,
                   plus ? "sine-Gordon kink with c1 = 1 needs lambda gamma > 0"
                        : "sine-Gordon kink with c1 = -1 needs lambda gamma < 0",
                   L);
      s.form_ = Solution::Form::SineKink;
      s.k_ = 1.0 / std::sqrt(std::abs(L));
      s.s_ = upper(branch);
      s.shift_ = plus ? 0.0 : -kPi;
      s.length_scale_ = 1.0 / s.k_;
      s.constants_["k"] = s.k_;
      return s;
    }
    const double q = (c1 - 1.0) / (2.0 * L);
    require_sign(q > 0.0, "sine-Gordon amplitude form needs (c1 - 1)/(2 lambda gamma) > 0", L);
    s.form_ = Solution::Form::SineAmplitude;
    s.k_ = std::sqrt(q);
    s.m_ = 2.0 / (1.0 - c1);
    // The closed form carries -+, so the upper branch is the minus sign.
    s.s_ = -upper(branch);
    s.bounded_ = s.m_ > 1.0;
    s.length_scale_ = 1.0 / s.k_;
    s.constants_["k"] = s.k_;
    s.constants_["m"] = s.m_;
    return s;
  }

  static Solution sinh_gordon(double c1, const FrameParams& frame, Branch branch) {
    const double L = frame.lambda_gamma();
    const double xi0 = frame.xi0();
    const CaseLabel c = classify_case(FamilyLabel::SinhGordon, frame, c1);
    Solution s = base(FamilyLabel::SinhGordon, c, branch, c1, L, xi0);
    s.psi_native_ = true;
    s.bounded_ = false;
    s.s_ = upper(branch);
    if (c == CaseLabel::KinkC1Minus) {
      require_sign(L > 0.0, "sinh-Gordon kink with c1 = -1/2 needs lambda gamma > 0", L);
      s.form_ = Solution::Form::SinhKinkExp;
      s.k_ = std::sqrt(2.0 / L);
      s.length_scale_ = 1.0 / s.k_;
      s.singular_.points.push_back(xi0);
      s.constants_["k"] = s.k_;
      return s;
    }
    if (c == CaseLabel::KinkC1Plus) {
      require_sign(L > 0.0, "sinh-Gordon kink with c1 = 1/2 needs lambda gamma > 0", L);
      s.form_ = Solution::Form::SinhKinkTan;
      s.k_ = 1.0 / std::sqrt(2.0 * L);
      s.length_scale_ = 1.0 / s.k_;
      s.singular_.lattices.push_back({xi0 + 0.25 * kPi / s.k_, 0.5 * kPi / s.k_});
      s.constants_["k"] = s.k_;
      s.constants_["period"] = kPi / s.k_;
      return s;
    }
    if ((L > 0.0 && c1 > -0.5) || (L < 0.0 && c1 < -0.5)) {
      s.form_ = Solution::Form::SinhAtanhSn;
      s.k_ = std::sqrt((2.0 * c1 + 1.0) / L);
      s.m_ = (2.0 * c1 - 1.0) / (2.0 * c1 + 1.0);
      s.length_scale_ = 1.0 / s.k_;
      if (s.m_ < 1.0) {
        const double K = specfun::ellint_k(s.m_);
        s.singular_.lattices.push_back({xi0 + K / s.k_, 2.0 * K / s.k_});
        s.constants_["period"] = 4.0 * K / s.k_;
      } else {
        s.bounded_ = true;
        s.constants_["period"] = 4.0 * specfun::ellint_k(1.0 / s.m_) / (s.k_ * std::sqrt(s.m_));
      }
      s.constants_["k"] = s.k_;
      s.constants_["m"] = s.m_;
      return s;
    }
    require_sign(L > 0.0 && c1 < -0.5, "sinh-Gordon amplitude form has no real solution for lambda gamma < 0 and c1 >= -1/2",
                 L);
    s.form_ = Solution::Form::SinhAsinhCn;
    s.k_ = std::sqrt((1.0 - 2.0 * c1) / L);
    s.m_ = 2.0 / (1.0 - 2.0 * c1);
    s.amp_ = std::sqrt(-c1 - 0.5);
    s.length_scale_ = 1.0 / s.k_;
    const double K = specfun::ellint_k(s.m_);
    s.singular_.lattices.push_back({xi0 + K / s.k_, 2.0 * K / s.k_});
    s.constants_["amplitude"] = s.amp_;
    s.constants_["k"] = s.k_;
    s.constants_["m"] = s.m_;
    s.constants_["period"] = 4.0 * K / s.k_;
    return s;
  }
};

// ---------------------------------------------------------------------------

double Solution::core(double y) const {
  const double x = y - core_xi0_;
  switch (form_) {
    case Form::LiouvilleSech: {
      const double c = std::cosh(k_ * x);
      return amp_ / (c * c);
    }
    case Form::LiouvilleSec: {
      const double c = std::cos(k_ * x);
      return c == 0.0 ? std::copysign(kInf, amp_) : amp_ / (c * c);
    }
    case Form::LiouvilleRational:
      return x == 0.0 ? std::copysign(kInf, amp_) : amp_ / (x * x);
    case Form::DarkSech: {
      const double c = std::cosh(k_ * x);
      return 1.0 - 1.5 / (c * c);
    }
    case Form::SingularCsch: {
      const double sh = std::sinh(k_ * x);
      return sh == 0.0 ? kInf : 1.0 + 1.5 / (sh * sh);
    }
    case Form::PeriodicSec: {
      const double c = std::cos(k_ * x);
      return c == 0.0 ? -kInf : 1.0 - 1.5 / (c * c);
    }
    case Form::PeriodicCsc: {
      const double sn = std::sin(k_ * x);
      return sn == 0.0 ? -kInf : 1.0 - 1.5 / (sn * sn);
    }
    case Form::WeierstrassP: {
      try {
        return amp_ * specfun::weierstrass_p(x, inv_).p + shift_;
      } catch (const PoleProximityError&) {
        return std::copysign(kInf, amp_);
      }
    }
    case Form::Cnoidal: {
      const double cn = specfun::jacobi_sn_cn_dn(k_ * x, m_).cn;
      return (1.0 - std::sqrt(3.0) * cn * cn) / std::cbrt(4.0);
    }
    case Form::SineKink:
      return shift_ + 4.0 * std::atan(std::exp(s_ * k_ * x));
    case Form::SineAmplitude:
      return 2.0 * specfun::jacobi_am(s_ * k_ * x, m_);
    case Form::SinhKinkExp: {
      const double e = std::exp(s_ * k_ * x);
      if (e < 1.0) return 2.0 * std::atanh(e);
      return e == 1.0 ? kInf : kNaN;
    }
    case Form::SinhKinkTan: {
      const double t = std::tan(s_ * k_ * x);
      if (std::abs(t) < 1.0) return 2.0 * std::atanh(t);
      return std::abs(t) == 1.0 ? std::copysign(kInf, t) : kNaN;
    }
    case Form::SinhAtanhSn: {
      // atanh(sn) = asinh(sn / |cn|) keeps full precision as sn -> +-1.
      const auto j = specfun::jacobi_sn_cn_dn(k_ * x, m_);
      if (j.cn == 0.0) return std::copysign(kInf, s_ * j.sn);
      return s_ * std::asinh(j.sn / std::abs(j.cn));
    }
    case Form::SinhAsinhCn: {
      const double cn = specfun::jacobi_sn_cn_dn(k_ * x, m_).cn;
      return cn == 0.0 ? kInf : std::asinh(s_ * amp_ / cn);
    }
  }
  return kNaN;
}

double Solution::h(double xi) const {
  if (psi_native_) return std::exp(core(xi));
  return sign_ * core(reflect_ ? -xi : xi);
}

double Solution::psi(double xi) const {
  if (psi_native_) return core(xi);
  const double v = h(xi);
  return v > 0.0 ? std::log(v) : kNaN;
}

bool Solution::in_domain(double xi) const {
  return std::isfinite(psi_native_ ? core(xi) : h(xi));
}

double Solution::exclusion_radius_at(double xi) const {
  double best = kInf;
  double radius = 0.0;
  for (double p : singular_.points) {
    const double d = std::abs(xi - p);
    if (d < best) best = d, radius = kPointExclusion;
  }
  for (const Lattice& l : singular_.lattices) {
    const double d = nearest_lattice_distance(xi, l);
    if (d < best) best = d, radius = kLatticeExclusion * l.period;
  }
  return radius;
}

// ---------------------------------------------------------------------------

Solution liouville(double c1, const FrameParams& frame) { return SolutionBuilder::liouville(c1, frame); }

Solution tzitzeica(double c1, const FrameParams& frame, Branch branch, std::optional<CaseLabel> expected) {
  return SolutionBuilder::tzitzeica(c1, frame, branch, expected);
}

Solution dodd_bullough(double c1, const FrameParams& frame, Branch branch, std::optional<CaseLabel> expected) {
  return SolutionBuilder::dodd_bullough(c1, frame, branch, expected);
}

Solution tdb_dbm(FamilyLabel family, double c1, const FrameParams& frame, Branch branch,
                 std::optional<CaseLabel> expected) {
  if (family == FamilyLabel::TzitzeicaDoddBullough) {
    return SolutionBuilder::reflected(dodd_bullough(c1, frame, branch, expected), family);
  }
  if (family == FamilyLabel::DoddBulloughMikhailov) {
    return SolutionBuilder::reflected(tzitzeica(c1, frame, branch, expected), family);
  }
  throw InvalidArgument("tdb_dbm: family must be TzitzeicaDoddBullough or DoddBulloughMikhailov");
}

Solution sine_gordon(double c1, const FrameParams& frame, Branch branch) {
  return SolutionBuilder::sine_gordon(c1, frame, branch);
}

Solution sinh_gordon(double c1, const FrameParams& frame, Branch branch) {
  return SolutionBuilder::sinh_gordon(c1, frame, branch);
}

Solution make_solution(FamilyLabel family, double c1, const FrameParams& frame, Branch branch,
                       std::optional<CaseLabel> expected) {
  auto checked = [&](Solution s) {
    check_expected(family, s.case_label(), expected);
    return s;
  };
  switch (family) {
    case FamilyLabel::Liouville: return checked(liouville(c1, frame));
    case FamilyLabel::Tzitzeica: return tzitzeica(c1, frame, branch, expected);
    case FamilyLabel::DoddBullough: return dodd_bullough(c1, frame, branch, expected);
    case FamilyLabel::TzitzeicaDoddBullough:
    case FamilyLabel::DoddBulloughMikhailov: return tdb_dbm(family, c1, frame, branch, expected);
    case FamilyLabel::SineGordon: return checked(sine_gordon(c1, frame, branch));
    case FamilyLabel::SinhGordon: return checked(sinh_gordon(c1, frame, branch));
    case FamilyLabel::GenericTwoExponential: break;
  }
  throw UnsupportedFamilyError("no closed form for the generic two-exponential family; use the shooting oracle");
}

// ---------------------------------------------------------------------------

double ImplicitRelation::lhs(double h) const {
  if (family_ == FamilyLabel::SinhGordon) {
    const double h2 = h * h;
    return h * specfun::gauss_2f1(0.5, 0.25, 1.25, -h2 * h2);
  }
  return h * specfun::gauss_2f1(0.5, 1.0 / 3.0, 4.0 / 3.0, -2.0 * h * h * h);
}

ImplicitRelation implicit_relation(FamilyLabel family, const FrameParams& frame) {
  const double L = frame.lambda_gamma();
  ImplicitRelation rel;
  rel.family_ = family;
  switch (family) {
    case FamilyLabel::Tzitzeica:
      require_sign(L > 0.0, "the Tzitzeica implicit relation is real for lambda gamma > 0", L);
      rel.slope_ = 1.0 / std::sqrt(L);
      return rel;
    case FamilyLabel::DoddBullough:
      require_sign(L < 0.0, "the Dodd-Bullough implicit relation is real for lambda gamma < 0", L);
      rel.slope_ = 1.0 / std::sqrt(-L);
      return rel;
    case FamilyLabel::SinhGordon:
      require_sign(L > 0.0, "the sinh-Gordon implicit relation is real for lambda gamma > 0", L);
      rel.slope_ = 1.0 / std::sqrt(2.0 * L);
      return rel;
    case FamilyLabel::SineGordon:
      throw UnsupportedFamilyError("the sine-Gordon implicit form needs 2F1 with complex parameters");
    case FamilyLabel::Liouville:
      throw UnsupportedFamilyError("the implicit 2F1 form requires beta != 0");
    default:
      break;
  }
  throw UnsupportedFamilyError("no real implicit 2F1 relation for this family");
}

}  // namespace twave
