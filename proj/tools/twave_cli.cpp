// twave: classify, solve, sample, verify and figures from the command line.
// Everything goes through the C interface of libtwave.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twave/twave.h"

using json = nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

struct JobConfig {
  std::string command;
  std::optional<std::string> family;
  std::optional<double> alpha, beta, a, b;
  std::optional<double> c1;
  std::optional<double> lambda, k, omega, lambda_gamma;
  double xi0 = 0.0;
  std::string branch = "+";
  std::optional<double> xi_min, xi_max;
  std::optional<int> n;
  std::optional<std::string> output;
  std::string output_dir = "figures";
  double tolerance = 0.0;
  bool pde = false;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries a library status out of the command handlers.
struct LibraryError : std::runtime_error {
  tw_status status;
  LibraryError(tw_status s, const std::string& w) : std::runtime_error(w), status(s) {}
};

void check(tw_status s) {
  if (s != TW_OK) throw LibraryError(s, std::string(tw_status_name(s)) + ": " + tw_last_error());
}

int exit_code_for(tw_status s) {
  switch (s) {
    case TW_E_DOMAIN:
    case TW_E_POLE_PROXIMITY:
    case TW_E_SIGN_DOMAIN:
    case TW_E_EMPTY_GRID:
    case TW_E_STEP_UNDERFLOW:
    case TW_E_INTERNAL:
      return kExitDomain;
    default:
      return kExitConfig;
  }
}

// Owns a string returned by the library.
struct CStr {
  char* p = nullptr;
  ~CStr() { tw_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct SolutionHandle {
  tw_solution* p = nullptr;
  ~SolutionHandle() { tw_solution_free(p); }
};

template <class T>
void take(const json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key) && !dst) dst = j.at(key).get<T>();
}

// Fields of the config file fill whatever the command line left unset.
void merge_config_file(const std::string& path, JobConfig& cfg, const CLI::App& sub) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  static const char* known[] = {"command", "family", "alpha", "beta", "a", "b", "c1", "lambda", "k", "omega",
                                "lambda_gamma", "xi0", "branch", "xi_min", "xi_max", "n", "output", "output_dir",
                                "tolerance", "pde"};
  for (const auto& [key, _] : j.items()) {
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
      throw ConfigError("unknown config field \"" + key + "\"");
    }
  }
  try {
    if (j.contains("command") && j["command"].get<std::string>() != cfg.command) {
      throw ConfigError("config command \"" + j["command"].get<std::string>() + "\" does not match \"" +
                        cfg.command + "\"");
    }
    take(j, "family", cfg.family);
    take(j, "alpha", cfg.alpha);
    take(j, "beta", cfg.beta);
    take(j, "a", cfg.a);
    take(j, "b", cfg.b);
    take(j, "c1", cfg.c1);
    take(j, "lambda", cfg.lambda);
    take(j, "k", cfg.k);
    take(j, "omega", cfg.omega);
    take(j, "lambda_gamma", cfg.lambda_gamma);
    take(j, "xi_min", cfg.xi_min);
    take(j, "xi_max", cfg.xi_max);
    take(j, "n", cfg.n);
    take(j, "output", cfg.output);
    auto unset = [&](const char* flag) { return sub.count(flag) == 0; };
    if (j.contains("xi0") && unset("--xi0")) cfg.xi0 = j["xi0"].get<double>();
    if (j.contains("branch") && unset("--branch")) cfg.branch = j["branch"].get<std::string>();
    if (j.contains("output_dir") && unset("--output-dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("tolerance") && unset("--tolerance")) cfg.tolerance = j["tolerance"].get<double>();
    if (j.contains("pde") && unset("--pde")) cfg.pde = j["pde"].get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") + e.what());
  }
}

std::optional<tw_frame> frame_of(const JobConfig& cfg) {
  const bool full = cfg.lambda || cfg.k || cfg.omega;
  if (cfg.lambda_gamma && full) throw ConfigError("give either lambda_gamma or lambda/k/omega, not both");
  if (cfg.lambda_gamma) return tw_frame_from_lambda_gamma(*cfg.lambda_gamma, cfg.xi0);
  if (!full) return std::nullopt;
  if (!cfg.lambda || !cfg.k || !cfg.omega) throw ConfigError("the full frame needs lambda, k and omega");
  return tw_frame{*cfg.lambda, *cfg.k, *cfg.omega, cfg.xi0};
}

bool has_raw(const JobConfig& cfg) { return cfg.alpha || cfg.beta || cfg.a || cfg.b; }

void check_family_or_raw(const JobConfig& cfg) {
  if (cfg.family && has_raw(cfg)) throw ConfigError("give either a family or raw alpha/beta/a/b, not both");
  if (!cfg.family && !has_raw(cfg)) throw ConfigError("give a family or raw alpha/beta/a/b");
  if (!cfg.family && !(cfg.alpha && cfg.beta && cfg.a && cfg.b)) {
    throw ConfigError("raw parameters need all of alpha, beta, a and b");
  }
}

tw_equation raw_of(const JobConfig& cfg) { return {*cfg.alpha, *cfg.beta, *cfg.a, *cfg.b}; }

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.output) {
    check(tw_write_file(cfg.output->c_str(), text.c_str()));
  } else {
    std::fwrite(text.data(), 1, text.size(), stdout);
  }
}

// Family name for solve/sample/verify; raw tuples go through classification.
std::string resolve_family(const JobConfig& cfg) {
  check_family_or_raw(cfg);
  if (cfg.family) return *cfg.family;
  const tw_equation raw = raw_of(cfg);
  CStr out;
  check(tw_classify(nullptr, &raw, nullptr, nullptr, &out.p));
  return json::parse(out.str()).at("family").get<std::string>();
}

tw_branch branch_of(const JobConfig& cfg) {
  if (cfg.branch == "+" || cfg.branch == "plus") return TW_BRANCH_PLUS;
  if (cfg.branch == "-" || cfg.branch == "minus") return TW_BRANCH_MINUS;
  throw ConfigError("branch must be + or -");
}

void build(const JobConfig& cfg, SolutionHandle& sol, tw_frame& frame) {
  const std::string family = resolve_family(cfg);
  if (!cfg.c1) throw ConfigError(cfg.command + " needs c1");
  const auto fr = frame_of(cfg);
  if (!fr) throw ConfigError(cfg.command + " needs lambda_gamma or lambda/k/omega");
  frame = *fr;
  check(tw_solution_new(family.c_str(), *cfg.c1, &frame, branch_of(cfg), &sol.p));
}

int run_classify(const JobConfig& cfg) {
  check_family_or_raw(cfg);
  const auto fr = frame_of(cfg);
  const tw_equation raw = has_raw(cfg) ? raw_of(cfg) : tw_equation{};
  const double c1 = cfg.c1.value_or(0.0);
  CStr out;
  check(tw_classify(cfg.family ? cfg.family->c_str() : nullptr, cfg.family ? nullptr : &raw,
                    cfg.c1 ? &c1 : nullptr, fr ? &*fr : nullptr, &out.p));
  emit(cfg, out.str() + "\n");
  return kExitPass;
}

int run_solve(const JobConfig& cfg) {
  SolutionHandle sol;
  tw_frame frame{};
  build(cfg, sol, frame);
  CStr out;
  check(tw_solution_describe(sol.p, &out.p));
  emit(cfg, json::parse(out.str()).dump(2) + "\n");
  return kExitPass;
}

int run_sample(const JobConfig& cfg) {
  SolutionHandle sol;
  tw_frame frame{};
  build(cfg, sol, frame);
  CStr out;
  check(tw_solution_sample_csv(sol.p, cfg.xi_min.value_or(-10.0), cfg.xi_max.value_or(10.0), cfg.n.value_or(201),
                               &out.p));
  emit(cfg, out.str());
  return kExitPass;
}

int run_verify(const JobConfig& cfg) {
  SolutionHandle sol;
  tw_frame frame{};
  build(cfg, sol, frame);
  CStr out;
  int pass = 0;
  check(tw_solution_verify(sol.p, cfg.xi_min.value_or(-10.0), cfg.xi_max.value_or(10.0), cfg.n.value_or(1000),
                           cfg.tolerance, cfg.pde ? 1 : 0, &pass, &out.p));
  emit(cfg, json::parse(out.str()).dump(2) + "\n");
  return pass ? kExitPass : kExitFail;
}

int run_figures(const JobConfig& cfg) {
  CStr out;
  check(tw_figures(cfg.output_dir.c_str(), cfg.n.value_or(801), &out.p));
  std::cout << json::parse(out.str()).dump(2) << "\n";
  return kExitPass;
}

void add_common(CLI::App* sub, JobConfig& cfg, std::string& config_path) {
  sub->add_option("--config", config_path, "JSON file with JobConfig fields");
  sub->add_option("--family", cfg.family, "liouville, tzitzeica, dodd-bullough, tzitzeica-dodd-bullough, "
                                          "dodd-bullough-mikhailov, sine-gordon, sinh-gordon");
  sub->add_option("--alpha", cfg.alpha);
  sub->add_option("--beta", cfg.beta);
  sub->add_option("--a", cfg.a);
  sub->add_option("--b", cfg.b);
  sub->add_option("--c1", cfg.c1, "first-integral constant");
  sub->add_option("--lambda", cfg.lambda);
  sub->add_option("--k", cfg.k);
  sub->add_option("--omega", cfg.omega);
  sub->add_option("--lambda-gamma", cfg.lambda_gamma, "shortcut: lambda = value, k = 0, omega = 1");
  sub->add_option("--xi0", cfg.xi0);
  sub->add_option("--branch", cfg.branch, "+ or -");
  sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
}

void add_grid(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--xi-min", cfg.xi_min);
  sub->add_option("--xi-max", cfg.xi_max);
  sub->add_option("--n", cfg.n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traveling-wave solutions of exponential wave equations"};
  app.require_subcommand(1);
  JobConfig cfg;
  std::string config_path;

  CLI::App* classify = app.add_subcommand("classify", "family, case and elliptic data");
  CLI::App* solve = app.add_subcommand("solve", "solution descriptor as JSON");
  CLI::App* sample = app.add_subcommand("sample", "CSV samples xi,h,psi,ode_residual");
  CLI::App* verify = app.add_subcommand("verify", "run the numerical oracles");
  CLI::App* figures = app.add_subcommand("figures", "write the figure data sets");
  for (CLI::App* sub : {classify, solve, sample, verify}) add_common(sub, cfg, config_path);
  add_grid(sample, cfg);
  add_grid(verify, cfg);
  verify->add_option("--tolerance", cfg.tolerance, "replaces every default tolerance when positive");
  verify->add_flag("--pde", cfg.pde, "also check the PDE residual in the given frame");
  figures->add_option("--config", config_path);
  figures->add_option("--output-dir", cfg.output_dir);
  figures->add_option("--n", cfg.n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    if (!config_path.empty()) merge_config_file(config_path, cfg, *sub);
    if (cfg.command == "classify") return run_classify(cfg);
    if (cfg.command == "solve") return run_solve(cfg);
    if (cfg.command == "sample") return run_sample(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    return run_figures(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "twave: " << e.what() << "\n";
    return kExitConfig;
  } catch (const LibraryError& e) {
    std::cerr << "twave: " << e.what() << "\n";
    return exit_code_for(e.status);
  } catch (const json::exception& e) {
    std::cerr << "twave: " << e.what() << "\n";
    return kExitConfig;
  }
}
