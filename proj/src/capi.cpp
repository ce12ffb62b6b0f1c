#include "twave/twave.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "twave/errors.hpp"
#include "twave/io.hpp"
#include "twave/specfun.hpp"

struct tw_solution {
  twave::Solution solution;
  twave::FrameParams frame;
};

namespace {

thread_local std::string g_last_error;

tw_status status_of(twave::ErrorCode c) {
  using twave::ErrorCode;
  switch (c) {
    case ErrorCode::InvalidArgument: return TW_E_INVALID_ARGUMENT;
    case ErrorCode::Domain: return TW_E_DOMAIN;
    case ErrorCode::PoleProximity: return TW_E_POLE_PROXIMITY;
    case ErrorCode::FrameDegenerate: return TW_E_FRAME_DEGENERATE;
    case ErrorCode::UnsupportedFamily: return TW_E_UNSUPPORTED_FAMILY;
    case ErrorCode::CaseMismatch: return TW_E_CASE_MISMATCH;
    case ErrorCode::SignDomain: return TW_E_SIGN_DOMAIN;
    case ErrorCode::EmptyGrid: return TW_E_EMPTY_GRID;
    case ErrorCode::StepUnderflow: return TW_E_STEP_UNDERFLOW;
    case ErrorCode::Io: return TW_E_IO;
  }
  return TW_E_INTERNAL;
}

template <class F>
tw_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return TW_OK;
  } catch (const twave::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return TW_E_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TW_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TW_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw twave::InvalidArgument(std::string(what) + " must not be null");
}

twave::FamilyLabel parse_family(const char* name) {
  auto f = twave::family_from_string(name);
  if (!f) throw twave::InvalidArgument(std::string("unknown family \"") + name + "\"");
  return *f;
}

twave::FrameParams to_frame(const tw_frame& f) { return twave::FrameParams(f.lambda, f.k, f.omega, f.xi0); }

}  // namespace

extern "C" {

const char* tw_version(void) { return "1.0.0"; }

const char* tw_status_name(tw_status s) {
  switch (s) {
    case TW_OK: return "ok";
    case TW_E_INVALID_ARGUMENT: return "invalid_argument";
    case TW_E_DOMAIN: return "domain";
    case TW_E_POLE_PROXIMITY: return "pole_proximity";
    case TW_E_FRAME_DEGENERATE: return "frame_degenerate";
    case TW_E_UNSUPPORTED_FAMILY: return "unsupported_family";
    case TW_E_CASE_MISMATCH: return "case_mismatch";
    case TW_E_SIGN_DOMAIN: return "sign_domain";
    case TW_E_EMPTY_GRID: return "empty_grid";
    case TW_E_STEP_UNDERFLOW: return "step_underflow";
    case TW_E_IO: return "io";
    case TW_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* tw_last_error(void) { return g_last_error.c_str(); }

void tw_string_free(char* s) { std::free(s); }

tw_frame tw_frame_from_lambda_gamma(double lambda_gamma, double xi0) { return {lambda_gamma, 0.0, 1.0, xi0}; }

tw_status tw_classify(const char* family, const tw_equation* raw, const double* c1, const tw_frame* frame,
                      char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    if ((family == nullptr) == (raw == nullptr)) {
      throw twave::InvalidArgument("give exactly one of a family name or raw (alpha, beta, a, b)");
    }
    const twave::EquationParams params =
        family ? twave::EquationParams::for_family(parse_family(family))
               : twave::EquationParams{raw->alpha, raw->beta, raw->a, raw->b, false};
    std::optional<twave::FrameParams> fr;
    if (frame) fr = to_frame(*frame);
    std::optional<double> c;
    if (c1) c = *c1;
    *json_out = dup(twave::io::classify_json(params, c, fr).dump());
  });
}

tw_status tw_solution_new(const char* family, double c1, const tw_frame* frame, tw_branch branch,
                          tw_solution** out) {
  return guarded([&] {
    require(family, "family");
    require(frame, "frame");
    require(out, "out");
    const twave::FrameParams fr = to_frame(*frame);
    const twave::Branch b = branch == TW_BRANCH_MINUS ? twave::Branch::Minus : twave::Branch::Plus;
    *out = new tw_solution{twave::make_solution(parse_family(family), c1, fr, b), fr};
  });
}

tw_status tw_solution_from_json(const char* json, tw_solution** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto rec = twave::io::solution_from_json(nlohmann::json::parse(json));
    *out = new tw_solution{std::move(rec.solution), rec.frame};
  });
}

void tw_solution_free(tw_solution* s) { delete s; }

tw_status tw_solution_describe(const tw_solution* s, char** json_out) {
  return guarded([&] {
    require(s, "solution");
    require(json_out, "json_out");
    *json_out = dup(twave::io::describe(s->solution, s->frame).dump());
  });
}

tw_status tw_solution_eval(const tw_solution* s, double xi, double* h, double* psi) {
  return guarded([&] {
    require(s, "solution");
    if (h) *h = s->solution.h(xi);
    if (psi) *psi = s->solution.psi(xi);
  });
}

tw_status tw_solution_sample_csv(const tw_solution* s, double xi_min, double xi_max, int n, char** csv_out) {
  return guarded([&] {
    require(s, "solution");
    require(csv_out, "csv_out");
    *csv_out = dup(twave::io::sample_csv(s->solution, xi_min, xi_max, n));
  });
}

tw_status tw_solution_verify(const tw_solution* s, double xi_min, double xi_max, int n, double tolerance,
                             int with_pde, int* all_pass, char** json_out) {
  return guarded([&] {
    require(s, "solution");
    require(json_out, "json_out");
    auto reports = twave::verify_solution(s->solution, xi_min, xi_max, n, tolerance > 0.0 ? tolerance : 0.0);
    if (with_pde) {
      reports.push_back(twave::pde_residual(s->solution, s->frame, twave::PdeGrid{},
                                            tolerance > 0.0 ? tolerance : twave::kPdeTolerance));
    }
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    if (all_pass) *all_pass = pass ? 1 : 0;
    *json_out = dup(twave::io::to_json(reports).dump());
  });
}

tw_status tw_figures(const char* directory, int n, char** sidecar_json_out) {
  return guarded([&] {
    require(directory, "directory");
    const auto sidecar = twave::io::write_figures(directory, n);
    if (sidecar_json_out) *sidecar_json_out = dup(sidecar.dump());
  });
}

tw_status tw_write_file(const char* path, const char* content) {
  return guarded([&] {
    require(path, "path");
    require(content, "content");
    twave::io::write_atomic(path, content);
  });
}

tw_status tw_jacobi(double u, double m, double* sn, double* cn, double* dn) {
  return guarded([&] {
    const auto t = twave::specfun::jacobi_sn_cn_dn(u, m);
    if (sn) *sn = t.sn;
    if (cn) *cn = t.cn;
    if (dn) *dn = t.dn;
  });
}

tw_status tw_weierstrass_p(double z, double g2, double g3, double* p, double* dp) {
  return guarded([&] {
    const auto w = twave::specfun::weierstrass_p(z, {g2, g3});
    if (p) *p = w.p;
    if (dp) *dp = w.dp;
  });
}

tw_status tw_hyp2f1(double a, double b, double c, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = twave::specfun::gauss_2f1(a, b, c, x);
  });
}

}  // extern "C"
