#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "zonal/cli.hpp"
#include "zonal/error.hpp"
#include "zonal/verify.hpp"

using namespace zonal;

namespace {

Matrix identity(int n) { return Matrix::Identity(n, n); }

Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

constexpr long kSamples = 200000;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("z-score and verdicts") {
  MCEstimate e;
  e.mean = 1.2;
  e.se_re = 0.1;
  CHECK(z_score(1.0, e) == doctest::Approx(2));
  auto r = make_report("x", 1.0, e);
  CHECK(r.verdict() == "pass");
  r.z = 3.5;
  CHECK(r.verdict() == "warn");
  CHECK(r.passed());
  r.z = 4.5;
  CHECK(r.verdict() == "fail");
  MCEstimate exact;
  exact.mean = 1;
  CHECK(z_score(1, exact) == 0);
  CHECK(std::isinf(z_score(2, exact)));
  auto j = to_json(make_report("y", 1, exact));
  CHECK(j["id"] == "y");
  CHECK(j["verdict"] == "pass");
  for (const char* key : {"closed", "mean", "stderr", "n", "seed", "z"}) CHECK(j.contains(key));
}

TEST_CASE("estimator examples") {
  auto ok = [](const ComparisonReport& r) {
    INFO(r.id, " closed ", r.closed, " mean ", r.estimate.mean.real(), " z ", r.z);
    CHECK(r.z <= 4);
  };
  auto rep = mc_schur_average(Field::real, identity(3), Partition{2}, 3, kSamples, 1);
  CHECK(rep.closed == doctest::Approx(3));
  ok(rep);
  rep = mc_schur_average(Field::real, identity(3), Partition{1}, 3, kSamples, 2);
  CHECK(rep.closed == 0);
  ok(rep);
  rep = mc_schur_pair_average(diag({1, 0.5}), Partition{1}, Partition{1}, kSamples, 3);
  CHECK(rep.closed == doctest::Approx(1.25));
  ok(rep);
  rep = mc_group_integral(Group::O, identity(3), Partition{2}, std::nullopt, 3, kSamples, 4);
  CHECK(rep.closed == doctest::Approx(1));
  ok(rep);
  rep = mc_group_integral(Group::U, identity(2), Partition{1}, Partition{1}, 2, kSamples, 5);
  CHECK(rep.closed == doctest::Approx(1));
  ok(rep);
  rep = mc_group_integral(Group::O, identity(3), Partition{1}, std::nullopt, 3, kSamples, 6);
  CHECK(rep.closed == 0);
  ok(rep);
  rep = mc_splitting(Field::real, identity(2), identity(2), Partition{1}, kSamples, 7);
  CHECK(rep.closed == doctest::Approx(4));
  ok(rep);
  rep = mc_splitting(Field::complex, diag({1, 0}), identity(2), Partition{1}, kSamples, 8);
  CHECK(rep.closed == doctest::Approx(2));
  ok(rep);
  rep = mc_splitting(Field::complex, identity(2), identity(2), Partition{}, 1000, 9);
  CHECK(rep.closed == 1);
  CHECK(rep.z == 0);
  rep = mc_kaneko(JackParam::complex(), Rational(0), Partition{1}, 3, kSamples, 10);
  CHECK(rep.closed == doctest::Approx(9));
  ok(rep);
  rep = mc_kaneko(JackParam::real(), make_rational(-1, 2), Partition{1}, 2, kSamples, 11);
  CHECK(rep.closed == doctest::Approx(4));
  ok(rep);
  rep = mc_kaneko(JackParam::complex(), Rational(0), Partition{}, 2, 1000, 12);
  CHECK(rep.z == 0);
}

TEST_CASE("charpoly and power-sum estimators") {
  auto rep = mc_charpoly_moment(Field::complex, 1, 0.5, identity(1), 1, kSamples, 1);
  CHECK(rep.closed == doctest::Approx(1.25));
  CHECK(rep.z <= 4);
  rep = mc_charpoly_moment(Field::real, 2, 0.5, identity(2), 2, kSamples, 2);
  CHECK(rep.closed == doctest::Approx(1.625));
  CHECK(rep.z <= 4);
  REQUIRE(rep.alternates.size() == 1);
  CHECK(rep.alternates[0].name == "duality");
  CHECK(rep.alternates[0].agrees);
  CHECK(std::abs(rep.alternates[0].value - 1.625) < 1e-8);
  rep = mc_charpoly_moment(Field::quaternion, 1, 0.5, identity(1), 1, kSamples, 3);
  CHECK(rep.closed == doctest::Approx(1.5));
  CHECK(rep.z <= 4);
  rep = mc_power_sum(Field::real, 4, identity(2), 2, kSamples, 4);
  CHECK(rep.closed == doctest::Approx(8));
  CHECK(rep.z <= 4);
  CHECK(rep.alternates.back().value == doctest::Approx(10));
  CHECK(!rep.alternates.back().agrees);
  CHECK(rep.passed());
  rep = mc_power_sum(Field::quaternion, 2, identity(3), 3, kSamples, 5);
  CHECK(rep.closed == doctest::Approx(-6));
  CHECK(rep.z <= 4);
  rep = mc_power_sum(Field::complex, 2, identity(3), 3, kSamples, 6);
  CHECK(rep.closed == doctest::Approx(18));
  CHECK(rep.z <= 4);
}

TEST_CASE("density estimator counts eigenvalues") {
  const auto rep = mc_density(4, 1.0, 20000, 1, 16);
  CHECK(rep.rows.size() == 16);
  CHECK(std::abs(rep.total_empirical - 5) <= 0.05);
  CHECK(std::abs(rep.total_expected - 5) <= 0.05);
  CHECK(rep.max_z <= 4.5);
}

TEST_CASE("errata report flags three items") {
  const auto rep = errata_report(100000, 42);
  CHECK(rep.checks.size() == 5);
  CHECK(rep.flagged_count() == 3);
  for (const auto& c : rep.checks) {
    const bool expected = c.id == "real-power-sum-hook-sum" || c.id == "quaternion-power-sum-sign" ||
                          c.id == "quaternion-charpoly-parameter";
    CHECK(c.flagged == expected);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = mc_schur_average(Field::real, identity(3), Partition{2}, 3, 20000, 5);
  omp_set_num_threads(3);
  const auto three = mc_schur_average(Field::real, identity(3), Partition{2}, 3, 20000, 5);
  omp_set_num_threads(saved);
  CHECK(to_json(one).dump() == to_json(three).dump());
}

TEST_CASE("cli jack") {
  auto r = cli({"jack", "--kappa", "2", "--alpha", "2", "--nvars", "2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"]["(2)"] == 1);
  CHECK(j["coefficients"]["(1,1)"] == "2/3");
  r = cli({"jack", "--kappa", "1", "--alpha", "1", "--nvars", "3", "--at", "1,1,1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == 3);
  CHECK(cli({"jack", "--kappa", "1,1,1", "--nvars", "2"}).code == 2);
  CHECK(cli({"jack", "--kappa", "1,x", "--nvars", "2"}).code == 2);
  CHECK(cli({"jack", "--kappa", "1,2", "--nvars", "2"}).code == 2);
  CHECK(cli({"jack", "--kappa", "1", "--bogus"}).code == 2);
  CHECK(cli({"jack", "--kappa", "1", "--nvars", "0"}).code == 2);
  CHECK(cli({}).code == 2);
}

TEST_CASE("cli moment, powersum, density") {
  auto r = cli({"moment", "--ensemble", "complex", "--r", "1", "--x", "0.5", "--n", "1", "--sigma", "identity"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["closed"] == doctest::Approx(1.25));
  CHECK(cli({"moment", "--ensemble", "complex", "--sigma", "/nonexistent/sigma.json"}).code == 2);
  CHECK(cli({"moment", "--ensemble", "octonion"}).code == 2);
  r = cli({"moment", "--ensemble", "quaternion", "--r", "1", "--x", "0.5", "--n", "1", "--n-samples", "50000"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["mc"]["verdict"] != "fail");

  const auto dir = std::filesystem::temp_directory_path() / "zonal_cli_test";
  std::filesystem::create_directories(dir);
  const auto sigma_file = dir / "sigma.json";
  std::ofstream(sigma_file) << R"({"n": 2, "data": [[1.5, 0], [0, 0.5]]})";
  r = cli({"powersum", "--ensemble", "real", "--k", "2", "--n", "2", "--sigma", sigma_file.string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["closed"] == doctest::Approx(2));

  r = cli({"density", "--n", "20", "--sigma1", "1.0", "--grid", "64", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "r,density,truncated_exponential,bulk");
  int rows = 0;
  while (std::getline(csv, line)) {
    double rr, d, t;
    char c;
    std::istringstream(line) >> rr >> c >> d >> c >> t;
    CHECK(std::abs(d - t) <= 1e-12);
    ++rows;
  }
  CHECK(rows == 64);
}

TEST_CASE("cli verify is reproducible") {
  const std::vector<std::string> args{"verify", "--suite", "powersum", "--n-samples", "20000", "--seed", "7"};
  const auto a = cli(args);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.end(), {"--jobs", "2"});
  const auto b = cli(with_jobs);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["suite"] == "powersum");
  CHECK(cli({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(cli({"verify", "--suite", "group", "--group", "G2"}).code == 2);
  const auto sp = nlohmann::json::parse(cli({"verify", "--suite", "group", "--group", "Sp", "--n-samples", "2000"}).out);
  CHECK(sp["reports"].size() == 3);
  for (const auto& r : sp["reports"]) CHECK(r["id"].get<std::string>().rfind("group-Sp", 0) == 0);

  const auto dir = std::filesystem::temp_directory_path() / "zonal_cli_out";
  std::filesystem::create_directories(dir);
  const auto file = dir / "report.json";
  std::filesystem::remove(file);
  auto to_file = args;
  to_file.insert(to_file.end(), {"--out", file.string()});
  CHECK(cli(to_file).code == 0);
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("cli verify fails on a failing suite") {
  // the sigma = 3 histogram disagrees with the rank-one density formula
  CHECK(cli({"verify", "--suite", "density", "--n-samples", "4000"}).code == 1);
}

TEST_CASE("cli cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "zonal_cli_cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  ::setenv("ZONAL_CACHE_DIR", dir.c_str(), 1);
  CHECK(cli({"jack", "--kappa", "3,1", "--alpha", "5/2", "--nvars", "3"}).code == 0);
  ::unsetenv("ZONAL_CACHE_DIR");
  CHECK(std::filesystem::exists(JackTable::instance().cache_file(Partition{3, 1}, JackParam(make_rational(5, 2)), 3)));
  const auto other = dir / "explicit";
  std::filesystem::create_directories(other);
  CHECK(cli({"jack", "--kappa", "2,1", "--alpha", "7/3", "--nvars", "2", "--jack-cache", other.string()}).code == 0);
  CHECK(!std::filesystem::is_empty(other));
  JackTable::instance().set_cache_dir(std::nullopt);
}
