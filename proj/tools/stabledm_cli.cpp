// Command-line harness: kernel grid evaluation, sample dumps, verification
// suites and report formatting.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "stabledm/stabledm.hpp"

namespace {

using namespace stabledm;

struct GridSpec {
  double lo = 0.0, hi = 1.0;
  int n = 101;
};

GridSpec parse_grid(const std::string& s) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.n) || c1 != ':' || c2 != ':' || g.n < 2)
    throw CLI::ValidationError("--grid expects y0:y1:n with n >= 2");
  return g;
}

std::vector<double> parse_coords(const std::string& s) {
  std::vector<double> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) v.push_back(std::stod(tok));
  return v;
}

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

std::uint64_t master_seed(std::uint64_t cli_seed) {
  if (const char* env = std::getenv("STABLEDM_SEED")) return std::strtoull(env, nullptr, 10);
  return cli_seed;
}

int cmd_density(const std::string& kernel, double alpha, double t, double x,
                const GridSpec& grid, double a, int images, const std::string& x_coords,
                const std::string& y_rest, const std::string& out) {
  std::vector<double> ys(grid.n), vals(grid.n);
  for (int i = 0; i < grid.n; ++i)
    ys[i] = grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1);

  StabilityIndex ai(alpha);
  if (kernel == "cauchy") {
    for (int i = 0; i < grid.n; ++i) vals[i] = cauchy_density({t, x, ys[i]});
  } else if (kernel == "bessel3") {
    for (int i = 0; i < grid.n; ++i) vals[i] = bessel3_density({t, x, ys[i]});
  } else if (kernel == "doob-mckean") {
    for (int i = 0; i < grid.n; ++i) vals[i] = doob_mckean_kernel(ai, {t, x, ys[i]});
  } else if (kernel == "radial3") {
    for (int i = 0; i < grid.n; ++i) vals[i] = cauchy_radial3_density({t, x, ys[i]});
  } else if (kernel == "elliot-feller") {
    IntervalSpec spec(a, images);
    for (int i = 0; i < grid.n; ++i) vals[i] = elliot_feller_kernel({t, x, ys[i]}, spec);
  } else if (kernel == "dyson") {
    std::vector<double> xc = parse_coords(x_coords.empty() ? std::to_string(x) : x_coords);
    ChamberPoint cx(xc);
    std::vector<double> rest =
        y_rest.empty() ? std::vector<double>(xc.begin() + 1, xc.end()) : parse_coords(y_rest);
    auto rule = alpha == 1.0 ? detail::SubordinatorRule{}
                             : detail::make_subordinator_rule_checked(alpha / 2.0, t);
    for (int i = 0; i < grid.n; ++i) {
      std::vector<double> yc{ys[i]};
      yc.insert(yc.end(), rest.begin(), rest.end());
      ChamberPoint cy(yc);
      vals[i] = dyson_stable_kernel(ai, t, cx, cy, alpha == 1.0 ? nullptr : &rule);
    }
  } else {
    throw CLI::ValidationError("unknown kernel '" + kernel + "'");
  }
  std::vector<std::string> header = {"y", "value"};
  std::vector<std::vector<double>> cols = {ys, vals};
  std::vector<double> xs(grid.n, x), ts(grid.n, t);
  header.insert(header.begin(), "t");
  cols.insert(cols.begin(), ts);
  header.insert(header.begin() + 1, "x");
  cols.insert(cols.begin() + 1, xs);
  write_text_file(out, make_csv(header, cols));
  std::cout << "wrote " << grid.n << " rows to " << out << "\n";
  return 0;
}

int cmd_simulate(const std::string& target, double alpha, double t, double x, std::size_t n,
                 std::uint64_t seed, const std::string& out) {
  RngStream rng(RngSeed{master_seed(seed), 0});
  StabilityIndex ai(alpha);
  std::vector<std::string> header;
  std::vector<std::vector<double>> cols;
  if (target == "subordinator") {
    header = {"lambda"};
    cols = {sample_subordinator(ai, t, rng, n)};
  } else if (target == "stable") {
    SampleMatrix m = sample_stable_marginal(1, ai, t, {x}, rng, n);
    header = {"x0"};
    cols = {m.data};
  } else if (target == "radial3") {
    header = {"r"};
    cols = {sample_radial3_doob(ai, t, x, rng, n)};
  } else if (target == "pathwise") {
    header = {"r"};
    cols = {sample_pathwise_doob(t, x, rng, n)};
  } else if (target == "eta") {
    LampertiSimConfig cfg;
    cfg.horizon = t;
    header = {"time"};
    std::vector<std::vector<double>> paths;
    PathSample first = simulate_eta(cfg, rng);
    cols.push_back(first.times);
    cols.push_back(first.values);
    header.push_back("eta_0");
    for (std::size_t k = 1; k < n; ++k) {
      PathSample p = simulate_eta(cfg, rng);
      cols.push_back(p.values);
      header.push_back("eta_" + std::to_string(k));
    }
  } else if (target == "lamperti-y") {
    LampertiSimConfig cfg;
    cfg.horizon = 8.0 * std::max(1.0, t);
    header = {"y"};
    cols = {sample_lamperti_y_marginal(t, x > 0.0 ? x : 1.0, cfg, rng, n)};
  } else {
    throw CLI::ValidationError("unknown simulate target '" + target + "'");
  }
  write_text_file(out, make_csv(header, cols));
  std::cout << "wrote " << cols.front().size() << " rows to " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int shards, std::size_t mc_n,
               std::size_t mc_paths, const std::string& out) {
  ExperimentConfig cfg;
  cfg.selector = suite;
  cfg.seed = RngSeed{master_seed(seed), 0};
  cfg.shards = shards;
  if (mc_n > 0) cfg.mc_samples = mc_n;
  if (mc_paths > 0) cfg.mc_paths = mc_paths;
  auto reports = run_suite(cfg);
  bool all = true;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
              << "  statistic=" << std::setprecision(6) << r.statistic
              << " reference=" << r.reference << "\n";
    all = all && r.passed;
  }
  if (!out.empty()) {
    auto doc = run_document(cfg, reports, now_iso8601());
    write_text_file(out, doc.dump(2) + "\n");
    std::cout << "report written to " << out << "\n";
  }
  return all ? 0 : 1;
}

int cmd_report(const std::string& in, const std::string& format) {
  std::ifstream is(in);
  if (!is) throw CLI::ValidationError("cannot open " + in);
  nlohmann::json doc = nlohmann::json::parse(is);
  if (format == "csv") {
    std::cout << "name,statistic,reference,passed\n";
    for (const auto& r : doc["reports"])
      std::cout << r["name"].get<std::string>() << ',' << r["statistic"].get<double>() << ','
                << r["reference"].get<double>() << ',' << (r["passed"].get<bool>() ? 1 : 0)
                << "\n";
  } else {
    std::cout << std::left << std::setw(40) << "check" << std::setw(15) << "statistic"
              << std::setw(15) << "reference" << "result\n";
    for (const auto& r : doc["reports"])
      std::cout << std::left << std::setw(40) << r["name"].get<std::string>() << std::setw(15)
                << r["statistic"].get<double>() << std::setw(15) << r["reference"].get<double>()
                << (r["passed"].get<bool>() ? "pass" : "FAIL") << "\n";
    if (doc.contains("all_passed"))
      std::cout << (doc["all_passed"].get<bool>() ? "all checks passed\n"
                                                  : "some checks FAILED\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabledm: kernels, samplers and verification for the radial stable "
               "Doob-McKean identity"};
  app.require_subcommand(1);

  // density
  auto* density = app.add_subcommand("density", "evaluate a kernel on a y-grid, write CSV");
  std::string kernel = "radial3", grid_str = "0:5:101", out = "density.csv";
  std::string x_coords, y_rest;
  double alpha = 1.0, t = 1.0, x = 1.0, a = 1.0;
  int images = 200;
  density->add_option("--kernel", kernel,
                      "cauchy|bessel3|doob-mckean|radial3|elliot-feller|dyson");
  density->add_option("--alpha", alpha, "stability index");
  density->add_option("--t", t, "time");
  density->add_option("--x", x, "starting point (scalar kernels)");
  density->add_option("--x-coords", x_coords, "comma list, chamber start (dyson)");
  density->add_option("--y-rest", y_rest, "comma list, fixed trailing y coords (dyson)");
  density->add_option("--grid", grid_str, "y0:y1:n");
  density->add_option("--a", a, "interval endpoint (elliot-feller)");
  density->add_option("--images", images, "image truncation (elliot-feller)");
  density->add_option("--out", out, "output CSV path");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "draw samples or paths, write CSV");
  std::string target = "radial3", sim_out = "samples.csv";
  double s_alpha = 1.0, s_t = 1.0, s_x = 1.0;
  std::size_t n = 10000;
  std::uint64_t seed = 42;
  simulate->add_option("--target", target,
                       "subordinator|stable|radial3|pathwise|eta|lamperti-y");
  simulate->add_option("--alpha", s_alpha, "stability index");
  simulate->add_option("--t", s_t, "time (or horizon for eta)");
  simulate->add_option("--x", s_x, "starting point");
  simulate->add_option("--n", n, "sample count / path count");
  simulate->add_option("--seed", seed, "master seed (env STABLEDM_SEED overrides)");
  simulate->add_option("--out", sim_out, "output CSV path");

  // verify
  auto* verify = app.add_subcommand("verify", "run named checks; exit 0 iff all pass");
  std::string suite = "all", verify_out;
  std::uint64_t v_seed = 42;
  int shards = 1;
  std::size_t mc_n = 0, mc_paths = 0;
  verify->add_option("--suite", suite, "pv-benchmarks|generators|levy|theorem1-mc|kernels|all"
                                       " or a single check name");
  verify->add_option("--seed", v_seed, "master seed (env STABLEDM_SEED overrides)");
  verify->add_option("--shards", shards, "worker shards for Monte Carlo checks");
  verify->add_option("--mc-samples", mc_n, "override Monte Carlo sample size");
  verify->add_option("--mc-paths", mc_paths, "override Lamperti path count");
  verify->add_option("--out", verify_out, "JSON report path");

  // report
  auto* report = app.add_subcommand("report", "format a JSON report");
  std::string rep_in, rep_format = "table";
  report->add_option("--in", rep_in, "JSON report file")->required();
  report->add_option("--format", rep_format, "table|csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (density->parsed())
      return cmd_density(kernel, alpha, t, x, parse_grid(grid_str), a, images, x_coords, y_rest,
                         out);
    if (simulate->parsed()) return cmd_simulate(target, s_alpha, s_t, s_x, n, seed, sim_out);
    if (verify->parsed())
      return cmd_verify(suite, v_seed, shards, mc_n, mc_paths, verify_out);
    if (report->parsed()) return cmd_report(rep_in, rep_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
