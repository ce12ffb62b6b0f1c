#pragma once

// JSON descriptors, CSV samples and the figure data sets.
//
// JSON objects use nlohmann::json, whose default object type keeps keys sorted
// and whose number output is the shortest round-trip decimal. CSV numbers are
// printed with %.17g; non-finite values become empty fields.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twave/reduction.hpp"
#include "twave/solutions.hpp"
#include "twave/verify.hpp"

namespace twave::io {

using json = nlohmann::json;

/// Without c1: {"family": ...}. With c1 and a frame: family, case and the
/// elliptic data (or just c1 for families that have none).
json classify_json(const EquationParams& params, std::optional<double> c1, std::optional<FrameParams> frame);

/// A solution together with the frame it was built in.
struct SolutionRecord {
  Solution solution;
  FrameParams frame;
};

/// family, case, branch, form, c1, lambda_gamma, frame {lambda, k, omega, xi0},
/// bounded, constants and singularities {points, lattices}.
json describe(const Solution& sol, const FrameParams& frame);

/// Rebuilds the solution from family, c1, frame and branch, and checks the
/// stored case label. Throws InvalidArgument on missing or malformed fields.
SolutionRecord solution_from_json(const json& j);

json to_json(const VerificationReport& r);
json to_json(const std::vector<VerificationReport>& reports);

/// "%.17g", or "" for non-finite values.
std::string format_number(double v);

/// Header xi,h,psi,ode_residual and one row per uniform grid node. psi is empty
/// where h <= 0; the residual is empty inside singular exclusion zones.
std::string sample_csv(const Solution& sol, double xi_min, double xi_max, int n);

/// Writes to a sibling temporary file and renames it into place. Throws IoError.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// One series of a figure: a solution sampled on [xi_min, xi_max].
struct FigureSeries {
  std::string name;
  FamilyLabel family;
  double c1;
  double lambda_gamma;
  Branch branch;
  double xi_min;
  double xi_max;
};

struct Figure {
  std::string file;
  std::string title;
  std::vector<FigureSeries> series;
};

/// The seven default figure sets (lambda gamma = +-1, xi0 = 0, canonical c1).
std::vector<Figure> default_figures();

/// Long-format CSV: series,xi,h,psi.
std::string figure_csv(const Figure& fig, int n);

/// Writes every figure CSV and figures.json into `dir` (created if needed) and
/// returns the sidecar document.
json write_figures(const std::filesystem::path& dir, int n);

}  // namespace twave::io
