#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "oracle_values.hpp"
#include "twave/errors.hpp"
#include "twave/solutions.hpp"
#include "twave/specfun.hpp"

using namespace twave;

namespace {

FrameParams lg(double L, double xi0 = 0.0) { return FrameParams::from_lambda_gamma(L, xi0); }

std::map<std::string, std::function<Solution()>> catalogue() {
  const double lemn = -3.0 / std::cbrt(4.0);
  return {
      {"Liouville soliton c1=-1 L=-1", [] { return liouville(-1.0, lg(-1.0)); }},
      {"Liouville periodic c1=1 L=-1", [] { return liouville(1.0, lg(-1.0)); }},
      {"Liouville rational L=0.5", [] { return liouville(0.0, lg(0.5)); }},
      {"Tzitzeica dark", [] { return tzitzeica(-1.5, lg(1.0)); }},
      {"Tzitzeica csch", [] { return tzitzeica(-1.5, lg(1.0), Branch::Minus); }},
      {"Tzitzeica sec L=-1", [] { return tzitzeica(-1.5, lg(-1.0)); }},
      {"Tzitzeica csc L=-1", [] { return tzitzeica(-1.5, lg(-1.0), Branch::Minus); }},
      {"Tzitzeica lemniscatic", [lemn] { return tzitzeica(lemn, lg(1.0)); }},
      {"Tzitzeica general c1=1", [] { return tzitzeica(1.0, lg(1.0)); }},
      {"sine kink c1=1", [] { return sine_gordon(1.0, lg(1.0)); }},
      {"sine kink c1=-1 L=-1", [] { return sine_gordon(-1.0, lg(-1.0)); }},
      {"sinh kink c1=-1/2", [] { return sinh_gordon(-0.5, lg(1.0)); }},
      {"sinh kink c1=1/2", [] { return sinh_gordon(0.5, lg(1.0)); }},
      {"sinh amplitude c1=0", [] { return sinh_gordon(0.0, lg(1.0)); }},
      {"sinh amplitude c1=-1 L=1", [] { return sinh_gordon(-1.0, lg(1.0)); }},
  };
}

double primary(const Solution& s, double xi) { return s.psi_native() ? s.psi(xi) : s.h(xi); }

}  // namespace

TEST_CASE("closed forms match frozen values") {
  const auto cat = catalogue();
  auto check_set = [&](const auto& table) {
    for (const auto& c : table) {
      INFO(c.name << " at " << c.xi);
      const Solution s = cat.at(c.name)();
      CHECK(std::abs(primary(s, c.xi) - c.value) <= 1e-13 * std::max(1.0, std::abs(c.value)));
    }
  };
  check_set(oracle::kClosedForms);
  check_set(oracle::kTzitzeicaGeneral);
}

TEST_CASE("xi0 translates every solution") {
  for (const auto& [name, make] : catalogue()) {
    const Solution s = make();
    const Solution t = make_solution(s.family(), s.c1(), lg(s.lambda_gamma(), 0.8), s.branch());
    for (double xi : {-1.3, 0.35, 2.2}) {
      INFO(name << " at " << xi);
      const double a = primary(s, xi), b = primary(t, xi + 0.8);
      if (std::isfinite(a)) CHECK(b == doctest::Approx(a).epsilon(1e-12));
    }
  }
}

TEST_CASE("cases, branches and boundedness") {
  CHECK(tzitzeica(-1.5, lg(1.0)).form() == Solution::Form::DarkSech);
  CHECK(tzitzeica(-1.5, lg(1.0)).bounded());
  CHECK_FALSE(tzitzeica(-1.5, lg(1.0), Branch::Minus).bounded());
  CHECK(tzitzeica(-3.0 / std::cbrt(4.0), lg(1.0)).form() == Solution::Form::Cnoidal);
  CHECK(tzitzeica(-3.0 / std::cbrt(4.0), lg(-1.0)).form() == Solution::Form::WeierstrassP);
  CHECK(tzitzeica(0.0, lg(1.0)).case_label() == CaseLabel::Equianharmonic);
  CHECK(sine_gordon(0.0, lg(-1.0)).bounded());
  CHECK_FALSE(sine_gordon(-3.0, lg(-1.0)).bounded());
  CHECK(sine_gordon(0.0, lg(-1.0)).constants().at("m") == 2.0);
  CHECK(sinh_gordon(-1.0, lg(-1.0)).bounded());
  CHECK_FALSE(sinh_gordon(0.0, lg(1.0)).bounded());
  CHECK(sinh_gordon(-1.0, lg(1.0)).form() == Solution::Form::SinhAsinhCn);
}

TEST_CASE("sign and case errors") {
  CHECK_THROWS_AS(sine_gordon(1.0, lg(-1.0)), SignDomainError);
  CHECK_THROWS_AS(sine_gordon(-1.0, lg(1.0)), SignDomainError);
  CHECK_THROWS_AS(sine_gordon(3.0, lg(-1.0)), SignDomainError);
  CHECK_THROWS_AS(sinh_gordon(0.0, lg(-1.0)), SignDomainError);
  CHECK_THROWS_AS(sinh_gordon(0.5, lg(-1.0)), SignDomainError);
  CHECK_THROWS_AS(tzitzeica(0.3, lg(1.0), Branch::Plus, CaseLabel::Lemniscatic), CaseMismatchError);
  CHECK_NOTHROW(tzitzeica(-1.5, lg(1.0), Branch::Plus, CaseLabel::Degenerate1a));
  CHECK_THROWS_AS(make_solution(FamilyLabel::GenericTwoExponential, 0.0, lg(1.0)), UnsupportedFamilyError);
}

TEST_CASE("sign-map dualities") {
  for (double c1 : {-1.5, 0.0, 0.6, -3.0 / std::cbrt(4.0)}) {
    for (double L : {1.0, -1.0, 2.5}) {
      for (Branch b : {Branch::Plus, Branch::Minus}) {
        const Solution tz = tzitzeica(-c1, lg(-L), b);
        const Solution db = dodd_bullough(c1, lg(L), b);
        const Solution tdb = tdb_dbm(FamilyLabel::TzitzeicaDoddBullough, c1, lg(L), b);
        const Solution dbm = tdb_dbm(FamilyLabel::DoddBulloughMikhailov, -c1, lg(-L), b);
        for (double xi = -3.0; xi <= 3.0; xi += 0.31) {
          const double ref = tz.h(xi);
          if (!std::isfinite(ref) || !std::isfinite(tz.h(-xi))) continue;
          CHECK(db.h(xi) == ref);
          CHECK(tdb.h(xi) == -db.h(-xi));
          CHECK(dbm.h(xi) == -tz.h(-xi));
        }
      }
    }
  }
}

TEST_CASE("singular sets sit where the closed forms blow up") {
  const Solution sec = tzitzeica(-1.5, lg(-1.0));
  const auto pts = sec.singularities().within(-5.0, 5.0);
  REQUIRE_FALSE(pts.empty());
  for (double p : pts) CHECK(std::abs(sec.h(p + 1e-7)) > 1e12);
  const Solution gen = tzitzeica(1.0, lg(1.0));
  for (double p : gen.singularities().within(-8.0, 8.0)) CHECK(std::abs(gen.h(p + 1e-4)) > 1e7);
  const Solution tan = sinh_gordon(0.5, lg(1.0));
  // Only one side of each point lies in the real domain |tan| < 1.
  for (double p : tan.singularities().within(-8.0, 8.0)) {
    const double left = tan.psi(p - 1e-9), right = tan.psi(p + 1e-9);
    CHECK(std::isfinite(left) != std::isfinite(right));
    CHECK(std::abs(std::isfinite(left) ? left : right) > 9.0);
  }
  CHECK(tzitzeica(-1.5, lg(1.0)).singularities().empty());
}

TEST_CASE("implicit relations") {
  const ImplicitRelation tz = implicit_relation(FamilyLabel::Tzitzeica, lg(4.0));
  CHECK(tz.slope() == 0.5);
  CHECK(tz.lhs(0.5) == doctest::Approx(0.5 * specfun::gauss_2f1(0.5, 1.0 / 3.0, 4.0 / 3.0, -0.25)).epsilon(1e-15));
  const ImplicitRelation sh = implicit_relation(FamilyLabel::SinhGordon, lg(2.0));
  CHECK(sh.slope() == 0.5);
  CHECK(sh.rhs(3.0, -1.0, 1.0) == -1.0);
  CHECK_THROWS_AS(implicit_relation(FamilyLabel::Tzitzeica, lg(-1.0)), SignDomainError);
  CHECK_NOTHROW(implicit_relation(FamilyLabel::DoddBullough, lg(-1.0)));
  CHECK_THROWS_AS(implicit_relation(FamilyLabel::SineGordon, lg(1.0)), UnsupportedFamilyError);
}

TEST_CASE("sine-Gordon kink limits") {
  const Solution k = sine_gordon(1.0, lg(1.0));
  CHECK(k.psi(-40.0) == doctest::Approx(0.0));
  CHECK(k.psi(40.0) == doctest::Approx(2.0 * std::numbers::pi));
  const Solution anti = sine_gordon(1.0, lg(1.0), Branch::Minus);
  CHECK(anti.psi(-0.7) == doctest::Approx(k.psi(0.7)).epsilon(1e-15));
}
