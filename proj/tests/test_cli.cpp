#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "raintensity/cli.hpp"
#include "raintensity/errors.hpp"

using namespace raintensity;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "raintensity_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* kData62Csv =
    "# failure times of 20 components\n0.067\n0.068\n0.076\n0.081\n0.084\n"
    "0.085\n0.085\n0.086\n0.089\n0.098\n0.098\n0.114\n0.114\n0.115\n0.121\n"
    "0.125\n0.131\n0.149\n0.160\n0.485\n";

}  // namespace

TEST_CASE("csv ingestion") {
  const fs::path dir = fresh_dir("ingest");
  write_file(dir / "data.csv", kData62Csv);
  const Sample s = ingest_csv((dir / "data.csv").string());
  CHECK(s.size() == 20);
  CHECK(s.min() == 0.067);
  CHECK(s.max() == 0.485);

  write_file(dir / "hdr.csv", "value\n1.5\n2.5\n");
  CHECK(ingest_csv((dir / "hdr.csv").string()).size() == 2);

  write_file(dir / "bad.csv", "1.0\n2.0\nabc\n");
  CHECK_THROWS_WITH_AS(ingest_csv((dir / "bad.csv").string()),
                       doctest::Contains("line 3"), DomainError);

  write_file(dir / "neg.csv", "1.0\n-1.0\n");
  CHECK_THROWS_AS(ingest_csv((dir / "neg.csv").string()), DomainError);

  write_file(dir / "empty.csv", "# nothing\n");
  CHECK_THROWS_AS(ingest_csv((dir / "empty.csv").string()), DomainError);

  CHECK_THROWS_AS(ingest_csv((dir / "missing.csv").string()), DomainError);
}

TEST_CASE("simulate then fit end to end") {
  const fs::path dir = fresh_dir("e2e");
  std::string err;

  RunConfig sim;
  sim.subcommand = "simulate";
  sim.family_spec = "invllog(gamma=4,lambda=0.5)";
  sim.n = 1000;
  sim.seed = 88;
  sim.output_dir = (dir / "sim").string();
  REQUIRE(run(sim, err) == kExitOk);

  // byte-identical artifacts across repeated runs with the same seed
  const std::string first = slurp(dir / "sim" / "simulate.csv");
  REQUIRE(run(sim, err) == kExitOk);
  CHECK(first == slurp(dir / "sim" / "simulate.csv"));

  RunConfig fit;
  fit.subcommand = "fit";
  fit.input_path = (dir / "sim" / "simulate.csv").string();
  fit.alpha = -1.0;
  fit.fit_model = "constant";
  fit.output_dir = (dir / "fit").string();
  REQUIRE(run(fit, err) == kExitOk);

  const json rep = json::parse(slurp(dir / "fit" / "fit.json"));
  CHECK(rep["schema_version"] == 1);
  const double gamma_hat = rep["ls"]["intercept"].get<double>();
  const double lambda_hat = rep["scale_mle"].get<double>();
  CHECK(gamma_hat > 3.65);
  CHECK(gamma_hat < 4.35);
  CHECK(lambda_hat > 0.45);
  CHECK(lambda_hat < 0.55);
}

TEST_CASE("gof subcommand with pre-binned counts") {
  const fs::path dir = fresh_dir("gof");
  std::ostringstream counts;
  counts << "# grouped observed counts\n";
  for (double c : {26, 322, 371, 150, 68, 29, 15, 5, 3, 3, 0, 1, 2, 1, 0, 0, 0, 0, 0, 1})
    counts << c << "\n";
  write_file(dir / "counts.csv", counts.str());

  RunConfig cfg;
  cfg.subcommand = "gof";
  cfg.gof_test = "chi2";
  cfg.counts_path = (dir / "counts.csv").string();
  cfg.n_total = 1000.0;
  cfg.family_spec = "invllog(gamma=3.7990,lambda=0.4957)";
  cfg.classes = 20;
  cfg.width = 0.21;
  cfg.n_params = 1;
  cfg.output_dir = dir.string();
  std::string err;
  REQUIRE(run(cfg, err) == kExitOk);

  const json rep = json::parse(slurp(dir / "gof.json"));
  CHECK(std::abs(rep["statistic"].get<double>() - 9.3209) <= 0.02);
  CHECK(rep["dof"] == 7);
  CHECK(std::abs(rep["p_value"].get<double>() - 0.2304) <= 0.005);
  CHECK(fs::exists(dir / "gof_classes.tsv"));
}

TEST_CASE("gof ks subcommand on the real data") {
  const fs::path dir = fresh_dir("ks");
  write_file(dir / "data.csv", kData62Csv);
  RunConfig cfg;
  cfg.subcommand = "gof";
  cfg.gof_test = "ks";
  cfg.input_path = (dir / "data.csv").string();
  cfg.family_spec = "invmw(gamma=0.3441,lambda=549.9663,delta=31.6785)";
  cfg.output_dir = dir.string();
  std::string err;
  REQUIRE(run(cfg, err) == kExitOk);
  const json rep = json::parse(slurp(dir / "gof.json"));
  CHECK(std::abs(rep["statistic"].get<double>() - 0.1496) <= 0.002);
  CHECK(std::abs(rep["p_value"].get<double>() - 0.7072) <= 0.03);
}

TEST_CASE("grai-curve writes the declared TSV") {
  const fs::path dir = fresh_dir("curve");
  RunConfig cfg;
  cfg.subcommand = "grai-curve";
  cfg.family_spec = "exp(b=1)";
  cfg.alpha = 0.0;
  cfg.points = 5;
  cfg.output_dir = dir.string();
  std::string err;
  REQUIRE(run(cfg, err) == kExitOk);
  const std::string text = slurp(dir / "grai_curve.tsv");
  CHECK(text.find("# grai alpha=0") == 0);
  int rows = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++rows;
  CHECK(rows == 5);
}

TEST_CASE("reconstruct subcommand emits TSV plus JSON header") {
  const fs::path dir = fresh_dir("rec");
  RunConfig cfg;
  cfg.subcommand = "reconstruct";
  cfg.family_spec = "invw2(beta=2,lambda=1)";
  cfg.alpha = 2.0;
  cfg.points = 20;
  cfg.output_dir = dir.string();
  std::string err;
  REQUIRE(run(cfg, err) == kExitOk);
  REQUIRE(fs::exists(dir / "reconstruct.json"));
  const json hdr = json::parse(slurp(dir / "reconstruct.json"));
  CHECK(hdr["alpha"] == 2.0);
  CHECK(hdr["anchor"].is_null());
  CHECK(hdr["conditions"]["c1"] == "pass");
  CHECK(fs::exists(dir / "reconstruct.tsv"));
}

TEST_CASE("estimate and order subcommands") {
  const fs::path dir = fresh_dir("est");
  write_file(dir / "data.csv", kData62Csv);
  std::string err;

  RunConfig est;
  est.subcommand = "estimate";
  est.input_path = (dir / "data.csv").string();
  est.alpha = 0.0;
  est.bandwidth = 0.0147;
  est.points = 50;
  est.output_dir = dir.string();
  REQUIRE(run(est, err) == kExitOk);
  CHECK(fs::exists(dir / "estimate.tsv"));

  RunConfig ord;
  ord.subcommand = "order";
  ord.family_spec = "invllog(gamma=3,lambda=0.8)";
  ord.family_spec_2 = "invllog(gamma=5,lambda=0.8)";
  ord.alpha = -1.0;
  ord.output_dir = dir.string();
  REQUIRE(run(ord, err) == kExitOk);
  const json rep = json::parse(slurp(dir / "order.json"));
  CHECK(rep["direction"] == "X<=Y");
}

TEST_CASE("empirical curve feeds the characterization end to end") {
  // simulate -> estimate -> reconstruct from the tabulated empirical curve;
  // anchoring k=1 at the empirical median pins the family member, which
  // should track the true cdf up to estimation noise
  const fs::path dir = fresh_dir("pipeline");
  std::string err;

  RunConfig sim;
  sim.subcommand = "simulate";
  sim.family_spec = "invllog(gamma=4,lambda=0.5)";
  sim.n = 1000;
  sim.seed = 11;
  sim.output_dir = dir.string();
  REQUIRE(run(sim, err) == kExitOk);

  RunConfig est;
  est.subcommand = "estimate";
  est.input_path = (dir / "simulate.csv").string();
  est.alpha = -1.0;
  est.output_dir = dir.string();
  REQUIRE(run(est, err) == kExitOk);

  const Sample s = ingest_csv((dir / "simulate.csv").string());
  RunConfig rec;
  rec.subcommand = "reconstruct";
  rec.curve_path = (dir / "estimate.tsv").string();
  rec.alpha = -1.0;
  rec.anchor_a = s.quantile(0.5);
  rec.anchor_k = 1.0;
  rec.points = 50;
  rec.output_dir = dir.string();
  REQUIRE(run(rec, err) == kExitOk);

  std::istringstream is(slurp(dir / "reconstruct.tsv"));
  std::string line;
  double worst = 0.0;
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x, F;
    REQUIRE((ls >> x >> F));
    const double truth = 1.0 / (1.0 + std::pow(0.5 / x, 4.0));
    worst = std::max(worst, std::abs(F - truth));
    ++rows;
  }
  CHECK(rows == 50);
  CHECK(worst < 0.05);

  const json hdr = json::parse(slurp(dir / "reconstruct.json"));
  CHECK(hdr["conditions"]["c1"] == "pass");
  CHECK(hdr["conditions"]["c2"] == "pass");
  CHECK(hdr["conditions"]["c3"] == "pass");
}

TEST_CASE("dist-eval tabulates pdf and cdf") {
  const fs::path dir = fresh_dir("dist");
  RunConfig cfg;
  cfg.subcommand = "dist-eval";
  cfg.family_spec = "gpd(alpha=-1)";
  cfg.points = 4;
  cfg.output_dir = dir.string();
  std::string err;
  REQUIRE(run(cfg, err) == kExitOk);
  std::istringstream is(slurp(dir / "dist_eval.tsv"));
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double x, f, F;
    REQUIRE((ls >> x >> f >> F));
    CHECK(f == doctest::Approx(std::pow(1.0 + x, -2.0)).epsilon(1e-12));
    CHECK(F == doctest::Approx(x / (1.0 + x)).epsilon(1e-12));
    ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("simulate falls back to the environment seed") {
  const fs::path dir = fresh_dir("envseed");
  RunConfig cfg;
  cfg.subcommand = "simulate";
  cfg.family_spec = "exp(b=1)";
  cfg.n = 5;
  cfg.output_dir = dir.string();
  std::string err;

  setenv("RAINTENSITY_SEED", "99", 1);
  REQUIRE(run(cfg, err) == kExitOk);
  const std::string from_env = slurp(dir / "simulate.csv");
  unsetenv("RAINTENSITY_SEED");

  cfg.seed = 99;
  REQUIRE(run(cfg, err) == kExitOk);
  CHECK(from_env == slurp(dir / "simulate.csv"));
  CHECK(from_env.find("seed=99") != std::string::npos);
}

TEST_CASE("error envelopes carry machine-readable codes") {
  std::string err;
  RunConfig bad;
  bad.subcommand = "dist-eval";
  bad.family_spec = "nosuch(a=1)";
  bad.output_dir = fresh_dir("err").string();
  CHECK(run(bad, err) == kExitValidation);
  const json env = json::parse(err);
  CHECK(env["error"]["code"] == kExitValidation);
  CHECK(env["error"]["kind"] == "validation");

  RunConfig num;
  num.subcommand = "reconstruct";
  // constant curves violate condition (2) for alpha > 0: numerical failure
  const fs::path dir = fresh_dir("err2");
  write_file(dir / "flat.tsv", "# grai alpha=1\n1e-12\t4\n1e12\t4\n");
  num.curve_path = (dir / "flat.tsv").string();
  num.alpha = 1.0;
  num.output_dir = dir.string();
  CHECK(run(num, err) == kExitNumerical);
  CHECK(json::parse(err)["error"]["kind"] == "numerical");
}
