#include "raintensity/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "raintensity/characterize.hpp"
#include "raintensity/errors.hpp"
#include "raintensity/json_io.hpp"
#include "raintensity/orders.hpp"

namespace raintensity {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_number(const std::string& tok, double& out) {
  std::size_t used = 0;
  try {
    out = std::stod(tok, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == tok.size();
}

std::vector<double> read_numeric_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::vector<double> vals;
  std::string line;
  std::size_t lineno = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    // trim whitespace and windows line ends
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    if (tok[0] == '#') continue;
    double v;
    if (!parse_number(tok, v)) {
      if (header_allowed) {  // one optional header line at the top
        header_allowed = false;
        continue;
      }
      throw DomainError(path + ": non-numeric value at line " +
                        std::to_string(lineno));
    }
    header_allowed = false;
    vals.push_back(v);
  }
  if (vals.empty()) throw DomainError(path + ": no data");
  return vals;
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open '" + path.string() + "' for writing");
  out << content;
}

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("RAINTENSITY_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError("RAINTENSITY_SEED is not an unsigned integer");
    }
  }
  return 1;
}

ParametricFamily require_family(const RunConfig& cfg) {
  if (!cfg.family_spec) throw DomainError("a family spec string is required");
  return parse_family(*cfg.family_spec);
}

Sample require_sample(const RunConfig& cfg) {
  if (!cfg.input_path) throw DomainError("an input csv path is required");
  return ingest_csv(*cfg.input_path);
}

GridSpec grid_spec_of(const RunConfig& cfg) {
  GridSpec g;
  g.p_lo = cfg.band_lo;
  g.p_hi = cfg.band_hi;
  g.points = cfg.points;
  g.abscissae = cfg.sample_point_grid ? GridSpec::Abscissae::sample_points
                                      : GridSpec::Abscissae::uniform;
  g.eps = cfg.eps;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int n) {
  if (!(lo < hi) || n < 2) throw DomainError("invalid evaluation grid");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / double(n - 1);
  return xs;
}

// --- subcommands -----------------------------------------------------------

void run_dist_eval(const RunConfig& cfg, const fs::path& outdir) {
  const ParametricFamily d = require_family(cfg);
  const double lo = cfg.grid_lo.value_or(quantile(d, 0.001));
  const double hi = cfg.grid_hi.value_or(quantile(d, 0.999));
  std::ostringstream os;
  os << "# dist-eval family=" << to_string(d) << "\n# x\tpdf\tcdf\n";
  for (double x : linear_grid(lo, hi, cfg.points))
    os << fmt17(x) << '\t' << fmt17(pdf(d, x)) << '\t' << fmt17(cdf(d, x)) << '\n';
  write_text(outdir / "dist_eval.tsv", os.str());
}

void run_grai_curve(const RunConfig& cfg, const fs::path& outdir) {
  const ParametricFamily d = require_family(cfg);
  const double lo = cfg.grid_lo.value_or(quantile(d, cfg.band_lo));
  const double hi = cfg.grid_hi.value_or(quantile(d, cfg.band_hi));
  const GraiCurve curve = GraiCurve::symbolic(d, cfg.alpha);
  const std::vector<double> xs = linear_grid(lo, hi, cfg.points);
  write_curve_tsv(curve, (outdir / "grai_curve.tsv").string(), xs);
}

void run_reconstruct(const RunConfig& cfg, const fs::path& outdir) {
  std::optional<GraiCurve> curve;
  if (cfg.curve_path)
    curve = read_curve_tsv(*cfg.curve_path);
  else if (cfg.family_spec)
    curve = GraiCurve::symbolic(parse_family(*cfg.family_spec), cfg.alpha);
  else
    throw DomainError("reconstruct needs --curve or a family spec");

  const ConditionReport conditions = check_conditions(*curve, cfg.alpha);
  std::optional<Anchor> anchor;
  if (cfg.alpha <= 0.0) {
    // default anchor: interior of the curve (k = 1 selects an arbitrary
    // member of the characterized family)
    double a_default = 1.0;
    if (curve->is_tabulated())
      a_default = std::sqrt(curve->grid().front() * curve->grid().back());
    else
      a_default = quantile(curve->family(), 0.5);
    anchor = Anchor(cfg.anchor_a.value_or(a_default), cfg.anchor_k.value_or(1.0));
  }

  double lo, hi;
  if (curve->is_tabulated()) {
    lo = cfg.grid_lo.value_or(curve->grid().front());
    hi = cfg.grid_hi.value_or(curve->grid().back());
  } else {
    lo = cfg.grid_lo.value_or(quantile(curve->family(), 0.001));
    hi = cfg.grid_hi.value_or(quantile(curve->family(), 0.999));
  }

  ReconstructedCdf rec(*curve, cfg.alpha, anchor, cfg.quad_tol);
  std::ostringstream os;
  os << "# reconstructed cdf alpha=" << fmt17(cfg.alpha) << "\n# x\tF\n";
  for (double x : linear_grid(lo, hi, cfg.points))
    os << fmt17(x) << '\t' << fmt17(rec(x)) << '\n';
  write_text(outdir / "reconstruct.tsv", os.str());

  json header{{"schema_version", 1},
              {"alpha", cfg.alpha},
              {"tolerance", cfg.quad_tol},
              {"conditions", to_json(conditions)},
              {"extrapolated", rec.used_extrapolation()}};
  if (anchor) {
    header["anchor"] = {{"a", anchor->a}, {"k", anchor->k}};
    header["k"] = anchor->k;
  } else {
    header["anchor"] = nullptr;
  }
  write_text(outdir / "reconstruct.json", header.dump(2) + "\n");
}

void run_estimate(const RunConfig& cfg, const fs::path& outdir) {
  const Sample s = require_sample(cfg);
  const KdeModel kde(s, cfg.bandwidth);
  const GraiCurve curve = grai_grid(kde, cfg.alpha, grid_spec_of(cfg));
  write_curve_tsv(curve, (outdir / "estimate.tsv").string());
}

void run_fit(const RunConfig& cfg, const fs::path& outdir) {
  const Sample s = require_sample(cfg);
  FitConfig fc;
  fc.bandwidth = cfg.bandwidth;
  fc.grid = grid_spec_of(cfg);
  const FitReport rep = fit_pipeline(s, cfg.alpha, parse_shape_model(cfg.fit_model), fc);
  write_text(outdir / "fit.json", to_json(rep).dump(2) + "\n");
}

void run_gof(const RunConfig& cfg, const fs::path& outdir) {
  const ParametricFamily d = require_family(cfg);
  GofReport rep;
  if (cfg.gof_test == "ks") {
    rep = ks_test(require_sample(cfg), d);
  } else if (cfg.gof_test == "chi2") {
    if (!(cfg.width > 0.0)) throw DomainError("chi2 requires --width > 0");
    if (cfg.counts_path) {
      const std::vector<double> counts = ingest_counts(*cfg.counts_path);
      double total = 0.0;
      for (double c : counts) total += c;
      rep = chi_square_counts(counts, cfg.n_total.value_or(total), d, cfg.width,
                              cfg.n_params);
    } else {
      rep = chi_square(require_sample(cfg), d, cfg.classes, cfg.width, cfg.n_params);
    }
  } else {
    throw DomainError("unknown gof test '" + cfg.gof_test + "' (chi2|ks)");
  }
  write_text(outdir / "gof.json", to_json(rep).dump(2) + "\n");
  if (rep.test == "chi2") {
    std::ostringstream os;
    os << "# chi-square classes\n# lo\thi\tobserved\texpected\n";
    for (const auto& c : rep.classes)
      os << fmt17(c.lo) << '\t' << fmt17(c.hi) << '\t' << fmt17(c.observed)
         << '\t' << fmt17(c.expected) << '\n';
    write_text(outdir / "gof_classes.tsv", os.str());
  }
}

void run_order(const RunConfig& cfg, const fs::path& outdir) {
  if (!cfg.family_spec || !cfg.family_spec_2)
    throw DomainError("order needs two family spec strings");
  const ParametricFamily x = parse_family(*cfg.family_spec);
  const ParametricFamily y = parse_family(*cfg.family_spec_2);
  const std::vector<double> grid = joint_interior_grid(x, y, cfg.order_grid);
  const OrderCheckResult res = rai_order_check(x, y, cfg.alpha, grid);
  write_text(outdir / "order.json", to_json(res).dump(2) + "\n");
}

void run_simulate(const RunConfig& cfg, const fs::path& outdir) {
  const ParametricFamily d = require_family(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const Sample s = sample(d, cfg.n, seed);
  std::ostringstream os;
  os << "# simulate family=" << to_string(d) << " n=" << cfg.n
     << " seed=" << seed << "\n";
  for (double v : s.values()) os << fmt17(v) << '\n';
  write_text(outdir / "simulate.csv", os.str());
}

}  // namespace

Sample ingest_csv(const std::string& path) {
  std::vector<double> vals = read_numeric_lines(path);
  return Sample(std::move(vals), path);
}

std::vector<double> ingest_counts(const std::string& path) {
  return read_numeric_lines(path);
}

int run(const RunConfig& config, std::string& err) {
  try {
    const fs::path outdir(config.output_dir);
    fs::create_directories(outdir);
    if (config.subcommand == "dist-eval")
      run_dist_eval(config, outdir);
    else if (config.subcommand == "grai-curve")
      run_grai_curve(config, outdir);
    else if (config.subcommand == "reconstruct")
      run_reconstruct(config, outdir);
    else if (config.subcommand == "estimate")
      run_estimate(config, outdir);
    else if (config.subcommand == "fit")
      run_fit(config, outdir);
    else if (config.subcommand == "gof")
      run_gof(config, outdir);
    else if (config.subcommand == "order")
      run_order(config, outdir);
    else if (config.subcommand == "simulate")
      run_simulate(config, outdir);
    else
      throw DomainError("unknown subcommand '" + config.subcommand + "'");
    return kExitOk;
  } catch (const DomainError& e) {
    err = json{{"schema_version", 1},
               {"error", {{"code", kExitValidation}, {"kind", "validation"},
                          {"message", e.what()}}}}
              .dump();
    return kExitValidation;
  } catch (const std::exception& e) {
    err = json{{"schema_version", 1},
               {"error", {{"code", kExitNumerical}, {"kind", "numerical"},
                          {"message", e.what()}}}}
              .dump();
    return kExitNumerical;
  }
}

}  // namespace raintensity
