#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "raintensity/estimate.hpp"
#include "raintensity/fit.hpp"
#include "raintensity/gof.hpp"
#include "raintensity/sample.hpp"

namespace raintensity {

/// One numeric value per line; '#' comments ignored; one optional non-numeric
/// header line tolerated at the top. Nonpositive or later non-numeric lines
/// are errors naming the line number.
Sample ingest_csv(const std::string& path);

/// Observed class counts, one per line (same comment/header rules).
std::vector<double> ingest_counts(const std::string& path);

struct RunConfig {
  std::string subcommand;  // dist-eval | grai-curve | reconstruct | estimate |
                           // fit | gof | order | simulate
  std::string output_dir = ".";

  std::optional<std::string> input_path;       // sample csv
  std::optional<std::string> counts_path;      // pre-binned chi2 counts
  std::optional<std::string> curve_path;       // tabulated GRAI curve tsv
  std::optional<std::string> family_spec;      // first family
  std::optional<std::string> family_spec_2;    // second family (order)

  double alpha = 0.0;
  std::optional<double> bandwidth;
  double band_lo = 0.05, band_hi = 0.95;
  int points = 200;
  bool sample_point_grid = false;
  double eps = 1e-6;                           // estimator admissibility band

  std::optional<double> anchor_a;
  std::optional<double> anchor_k;
  double quad_tol = 1e-9;
  std::optional<double> grid_lo, grid_hi;      // evaluation range overrides

  std::string gof_test = "chi2";
  int classes = 20;
  double width = 0.0;
  int n_params = 0;
  std::optional<double> n_total;

  std::string fit_model = "constant";
  int order_grid = 512;

  std::uint64_t n = 100;                       // simulate draw count
  std::optional<std::uint64_t> seed;           // falls back to RAINTENSITY_SEED, then 1
};

/// Exit status contract: 0 success, 2 validation error, 3 numerical failure.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

/// Dispatch a validated config; writes the subcommand's artifacts under
/// output_dir and returns the exit status. Error reports go to `err` as a
/// JSON envelope when a failure occurs.
int run(const RunConfig& config, std::string& err);

}  // namespace raintensity
