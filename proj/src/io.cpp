#include "twave/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "twave/errors.hpp"

namespace twave::io {

namespace {

json elliptic_json(const EllipticData& d) {
  json roots;
  roots["all_real"] = d.roots.all_real;
  if (d.roots.all_real) {
    roots["e1"] = d.roots.e1;
    roots["e2"] = d.roots.e2;
    roots["e3"] = d.roots.e3;
  } else {
    roots["real"] = d.roots.e2;
    roots["re"] = d.roots.re;
    roots["im"] = d.roots.im;
  }
  json j = {{"c1", d.c1}, {"a0", d.a0}, {"a1", d.a1}, {"a2", d.a2}, {"a3", d.a3}, {"r", d.r},
            {"p", d.p}, {"g2", d.g2()}, {"g3", d.g3()}, {"delta", d.delta}, {"roots", roots}};
  if (d.e_hat) j["e_hat"] = *d.e_hat;
  if (d.e_tilde) j["e_tilde"] = *d.e_tilde;
  return j;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidArgument(std::string("solution descriptor lacks \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("solution descriptor field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json classify_json(const EquationParams& params, std::optional<double> c1, std::optional<FrameParams> frame) {
  params.validate();
  const FamilyLabel family = classify_family(params);
  json out = {{"family", std::string(to_string(family))}};
  if (!c1) return out;
  if (family == FamilyLabel::GenericTwoExponential) {
    out["c1"] = *c1;
    return out;
  }
  const bool gordon = family == FamilyLabel::SineGordon || family == FamilyLabel::SinhGordon;
  if (!frame && !gordon) throw InvalidArgument("classifying with c1 needs lambda_gamma or a full frame");
  const FrameParams fr = frame ? *frame : FrameParams::from_lambda_gamma(1.0);
  out["case"] = std::string(to_string(classify_case(family, fr, *c1)));
  if (gordon) {
    out["elliptic_data"] = {{"c1", *c1}};
  } else {
    out["elliptic_data"] = elliptic_json(elliptic_data(family, fr, *c1));
  }
  return out;
}

json describe(const Solution& sol, const FrameParams& frame) {
  json lattices = json::array();
  for (const Lattice& l : sol.singularities().lattices) {
    lattices.push_back({{"offset", l.offset}, {"period", l.period}});
  }
  json constants = json::object();
  for (const auto& [k, v] : sol.constants()) constants[k] = v;
  return {
      {"family", std::string(to_string(sol.family()))},
      {"case", std::string(to_string(sol.case_label()))},
      {"branch", std::string(to_string(sol.branch()))},
      {"c1", sol.c1()},
      {"lambda_gamma", sol.lambda_gamma()},
      {"frame", {{"lambda", frame.lambda()}, {"k", frame.k()}, {"omega", frame.omega()}, {"xi0", frame.xi0()}}},
      {"bounded", sol.bounded()},
      {"psi_native", sol.psi_native()},
      {"constants", constants},
      {"singularities", {{"points", sol.singularities().points}, {"lattices", lattices}}},
  };
}

SolutionRecord solution_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("solution descriptor must be a JSON object");
  const auto family = family_from_string(field<std::string>(j, "family"));
  if (!family) throw InvalidArgument("unknown family in solution descriptor");
  const auto branch = branch_from_string(field<std::string>(j, "branch"));
  if (!branch) throw InvalidArgument("branch must be \"+\" or \"-\"");
  const auto label = case_from_string(field<std::string>(j, "case"));
  if (!label) throw InvalidArgument("unknown case in solution descriptor");
  const json fr = field<json>(j, "frame");
  const FrameParams frame(field<double>(fr, "lambda"), field<double>(fr, "k"), field<double>(fr, "omega"),
                          field<double>(fr, "xi0"));
  return {make_solution(*family, field<double>(j, "c1"), frame, *branch, *label), frame};
}

json to_json(const VerificationReport& r) {
  return {{"oracle", r.oracle},
          {"max_residual", r.max_residual},
          {"rms_residual", r.rms_residual},
          {"points_used", r.points_used},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

json to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string sample_csv(const Solution& sol, double xi_min, double xi_max, int n) {
  if (n < 1 || !std::isfinite(xi_min) || !std::isfinite(xi_max) || xi_min > xi_max || (n == 1) != (xi_min == xi_max)) {
    throw InvalidArgument("sample needs n >= 2 points on xi_min < xi_max (or n = 1 on a single point)");
  }
  std::string out = "xi,h,psi,ode_residual\n";
  for (int i = 0; i < n; ++i) {
    const double xi = i + 1 == n ? xi_max : xi_min + (xi_max - xi_min) * i / static_cast<double>(n - 1);
    const double h = sol.h(xi);
    const double psi = sol.psi_native() || h > 0.0 ? sol.psi(xi) : NAN;
    const double d = sol.singularities().distance(xi);
    const bool excluded = d < sol.exclusion_radius_at(xi);
    const double res = excluded ? NAN : ode_residual_at(sol, xi);
    out += format_number(xi) + ',' + format_number(h) + ',' + format_number(psi) + ',' + format_number(res) + '\n';
  }
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::random_device rd;
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

std::vector<Figure> default_figures() {
  using F = FamilyLabel;
  const double lemn = -3.0 / std::cbrt(4.0);
  return {
      {"fig1_liouville.csv", "Liouville: soliton, periodic and rational solutions",
       {{"soliton", F::Liouville, -1.0, -1.0, Branch::Plus, -6.0, 6.0},
        {"periodic", F::Liouville, 1.0, -1.0, Branch::Plus, -6.0, 6.0},
        {"rational", F::Liouville, 0.0, 1.0, Branch::Plus, -6.0, 6.0}}},
      {"fig2_tzitzeica_degenerate.csv", "Tzitzeica degenerate cases",
       {{"dark_soliton", F::Tzitzeica, -1.5, 1.0, Branch::Plus, -6.0, 6.0},
        {"periodic_sec", F::Tzitzeica, -1.5, -1.0, Branch::Plus, -6.0, 6.0},
        {"singular_soliton", F::Tzitzeica, -1.5, 1.0, Branch::Minus, -6.0, 6.0},
        {"periodic_csc", F::Tzitzeica, -1.5, -1.0, Branch::Minus, -6.0, 6.0}}},
      {"fig3_tzitzeica_elliptic.csv", "Tzitzeica lemniscatic, equianharmonic and general Weierstrass",
       {{"lemniscatic", F::Tzitzeica, lemn, 1.0, Branch::Plus, -10.0, 10.0},
        {"equianharmonic", F::Tzitzeica, 0.0, 1.0, Branch::Plus, -10.0, 10.0},
        {"weierstrass", F::Tzitzeica, 1.0, 1.0, Branch::Plus, -10.0, 10.0}}},
      {"fig4_sine_kinks.csv", "sine-Gordon kinks, c1 = 1 and c1 = -1",
       {{"kink_c1_plus", F::SineGordon, 1.0, 1.0, Branch::Plus, -10.0, 10.0},
        {"kink_c1_minus", F::SineGordon, -1.0, -1.0, Branch::Plus, -10.0, 10.0}}},
      {"fig5_sine_amplitude.csv", "sine-Gordon amplitude solutions, m > 1 and m < 1",
       {{"m_2", F::SineGordon, 0.0, -1.0, Branch::Plus, -10.0, 10.0},
        {"m_0.5", F::SineGordon, -3.0, -1.0, Branch::Plus, -10.0, 10.0}}},
      {"fig6_sinh_kinks.csv", "sinh-Gordon arctanh solutions, c1 = -1/2 and c1 = 1/2",
       {{"kink_c1_minus", F::SinhGordon, -0.5, 1.0, Branch::Plus, -10.0, 10.0},
        {"kink_c1_plus", F::SinhGordon, 0.5, 1.0, Branch::Plus, -10.0, 10.0}}},
      {"fig7_sinh_amplitude.csv", "sinh-Gordon amplitude solutions, m > 1 and m < 1",
       {{"m_3", F::SinhGordon, -1.0, -1.0, Branch::Plus, -10.0, 10.0},
        {"m_2/3", F::SinhGordon, -1.0, 1.0, Branch::Plus, -10.0, 10.0}}},
  };
}

std::string figure_csv(const Figure& fig, int n) {
  if (n < 2) throw InvalidArgument("figures need n >= 2");
  std::string out = "series,xi,h,psi\n";
  for (const FigureSeries& s : fig.series) {
    const Solution sol = make_solution(s.family, s.c1, FrameParams::from_lambda_gamma(s.lambda_gamma), s.branch);
    for (int i = 0; i < n; ++i) {
      const double xi = i + 1 == n ? s.xi_max : s.xi_min + (s.xi_max - s.xi_min) * i / static_cast<double>(n - 1);
      const double h = sol.h(xi);
      const double psi = sol.psi_native() || h > 0.0 ? sol.psi(xi) : NAN;
      out += s.name + ',' + format_number(xi) + ',' + format_number(h) + ',' + format_number(psi) + '\n';
    }
  }
  return out;
}

json write_figures(const std::filesystem::path& dir, int n) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string());
  json sidecar = {{"n", n}, {"xi0", 0.0}, {"figures", json::array()}};
  for (const Figure& fig : default_figures()) {
    write_atomic(dir / fig.file, figure_csv(fig, n));
    json series = json::array();
    for (const FigureSeries& s : fig.series) {
      const Solution sol = make_solution(s.family, s.c1, FrameParams::from_lambda_gamma(s.lambda_gamma), s.branch);
      series.push_back({{"name", s.name},
                        {"family", std::string(to_string(s.family))},
                        {"case", std::string(to_string(sol.case_label()))},
                        {"branch", std::string(to_string(s.branch))},
                        {"c1", s.c1},
                        {"lambda_gamma", s.lambda_gamma},
                        {"xi_min", s.xi_min},
                        {"xi_max", s.xi_max},
                        {"constants", sol.constants()}});
    }
    sidecar["figures"].push_back({{"file", fig.file}, {"title", fig.title}, {"series", series}});
  }
  write_atomic(dir / "figures.json", sidecar.dump(2) + "\n");
  return sidecar;
}

}  // namespace twave::io
