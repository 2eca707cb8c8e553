#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "stabledm/report.hpp"
#include "stabledm/samplers.hpp"
#include "stabledm/stats.hpp"
#include "stabledm/suite.hpp"

using namespace stabledm;

TEST_CASE("ks_one_sample on constructed quantiles and degenerate cdfs") {
  std::size_t n = 1000;
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = (i + 0.5) / n;  // exact uniform quantiles
  double stat = ks_one_sample(q, [](double x) { return x; });
  CHECK(std::abs(stat - 0.5 / n) < 1e-12);

  CHECK(ks_one_sample(q, [](double) { return 0.0; }) == 1.0);

  std::vector<double> unsorted = {0.5, 0.2, 0.9};
  CHECK_THROWS_AS(ks_one_sample(unsorted, [](double x) { return x; }), std::domain_error);
  std::vector<double> empty;
  CHECK_THROWS_AS(ks_one_sample(empty, [](double x) { return x; }), std::domain_error);
}

TEST_CASE("ks_one_sample uniform smoke test at fixed seed") {
  RngStream rng(RngSeed{2024, 0});
  std::vector<double> u(100000);
  for (auto& v : u) v = rng.u01();
  std::sort(u.begin(), u.end());
  CHECK(ks_one_sample(u, [](double x) { return x; }) < ks_critical_one_sample(u.size()));
}

TEST_CASE("ks_two_sample basics") {
  std::vector<double> a = {0.1, 0.4, 0.5, 0.9};
  CHECK(ks_two_sample(a, a) == 0.0);

  RngStream rng(RngSeed{77, 0});
  std::vector<double> u(10000), v(10000);
  for (auto& x : u) x = rng.u01();
  for (auto& x : v) x = 0.5 + rng.u01();
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  double stat = ks_two_sample(u, v);
  CHECK(std::abs(stat - 0.5) < 0.02);
  CHECK(ks_two_sample(v, u) == stat);
}

TEST_CASE("TestReport pass flag is statistic <= reference") {
  TestReport r1 = make_report("a", 0.5, 0.5);
  CHECK(r1.passed);
  TestReport r2 = make_report("b", 0.50001, 0.5);
  CHECK(!r2.passed);
}

TEST_CASE("run_suite: pv-benchmarks selector yields three passing reports") {
  ExperimentConfig cfg;
  cfg.selector = "pv-benchmarks";
  auto t0 = std::chrono::steady_clock::now();
  auto reports = run_suite(cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.passed);
  CHECK(secs < 1.0);
}

TEST_CASE("run_suite rejects unknown selectors") {
  ExperimentConfig cfg;
  cfg.selector = "definitely-not-a-suite";
  CHECK_THROWS_AS(run_suite(cfg), config_error);
}

TEST_CASE("run_suite determinism: identical JSON apart from runtime fields") {
  ExperimentConfig cfg;
  cfg.selector = "levy";
  auto strip = [](nlohmann::json doc) {
    doc.erase("timestamp");
    for (auto& r : doc["reports"]) r["meta"].erase("runtime_s");
    return doc;
  };
  auto d1 = strip(run_document(cfg, run_suite(cfg), "T1"));
  auto d2 = strip(run_document(cfg, run_suite(cfg), "T2"));
  CHECK(d1.dump() == d2.dump());
}

TEST_CASE("monte carlo checks are shard-invariant") {
  ExperimentConfig one, eight;
  one.selector = "mc.pathwise";
  one.mc_samples = 8000;
  one.shards = 1;
  eight = one;
  eight.shards = 8;
  auto r1 = run_suite(one);
  auto r8 = run_suite(eight);
  REQUIRE(r1.size() == r8.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].name == r8[i].name);
    CHECK(r1[i].statistic == r8[i].statistic);  // bitwise equal merged statistic
  }
}

TEST_CASE("single-check selector works and carries criterion metadata") {
  ExperimentConfig cfg;
  cfg.selector = "levy.mean-eta";
  auto reports = run_suite(cfg);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].passed);
  CHECK(reports[0].meta.at("criterion") == "5");
}

TEST_CASE("csv writer emits a header and aligned rows") {
  std::string csv = make_csv({"a", "b"}, {{1.0, 2.0}, {3.0, 4.0}});
  CHECK(csv == "a,b\n1,3\n2,4\n");
}
