#include "zonal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"

#include "zonal/error.hpp"
#include "zonal/jack.hpp"
#include "zonal/verify.hpp"

namespace zonal {

namespace {

using ojson = nlohmann::ordered_json;

struct Config {
  std::string kappa;
  std::string alpha = "1";
  int nvars = 1;
  std::string at;
  std::string normalization = "P";
  std::string ensemble = "complex";
  std::string group;
  int r = 1;
  int k = 1;
  double x = 0;
  double x_im = 0;
  int n = 1;
  std::string sigma = "identity";
  double sigma1 = 1;
  int grid = 64;
  long n_samples = 0;
  std::uint64_t seed = 42;
  int jobs = 0;
  int quad_order = 80;
  std::string jack_cache;
  std::string out;
  std::string format = "json";
  std::string suite;
};

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string t = text;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error("bad partition syntax");
    }
    if (used != item.size()) throw Error("bad partition syntax");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  return v;
}

Matrix read_sigma(const Config& c, Field f) {
  if (c.sigma == "identity") return Matrix::Identity(c.n, c.n);
  if (!std::filesystem::exists(c.sigma)) throw Error("sigma file not found: " + c.sigma);
  const Matrix s = load_sigma(c.sigma);
  ensemble_sigma(f, c.n, s);
  return s;
}

ojson exact_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

int cmd_jack(const Config& c, std::ostream& out) {
  const Partition kappa = parse_partition(c.kappa);
  const JackParam alpha(parse_rational(c.alpha));
  if (kappa.length() > c.nvars) throw Error("partition longer than nvars");
  const bool use_c = c.normalization == "C";
  const SymPoly poly = use_c ? jack_C_poly(kappa, alpha, c.nvars) : jack_poly(kappa, alpha, c.nvars);
  ojson j;
  j["kappa"] = kappa.to_string();
  j["alpha"] = to_string(alpha.value());
  j["nvars"] = c.nvars;
  j["normalization"] = c.normalization;
  ojson coeffs = ojson::object();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) coeffs[it->first.to_string()] = exact_json(it->second);
  j["coefficients"] = coeffs;
  if (!c.at.empty()) {
    const auto point = parse_point(c.at);
    if (static_cast<int>(point.size()) != c.nvars) throw Error("--at needs nvars values");
    const Rational v = poly.eval_exact(point);
    j["value"] = exact_json(v);
    j["value_numeric"] = v.get_d();
  }
  if (c.format == "csv") {
    std::ostringstream os;
    os << "monomial,coefficient\n";
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it)
      os << '"' << it->first.to_string() << "\"," << to_string(it->second) << "\n";
    emit(c, os.str(), out);
  } else {
    emit(c, dump(j), out);
  }
  return kExitPass;
}

int cmd_moment(const Config& c, std::ostream& out) {
  const Field f = parse_field(c.ensemble);
  const Matrix sigma = read_sigma(c, f);
  const cplx x(c.x, c.x_im);
  ojson j;
  j["ensemble"] = to_string(f);
  j["r"] = c.r;
  j["x"] = c.x;
  if (c.x_im != 0) j["x_im"] = c.x_im;
  j["n"] = c.n;
  j["closed"] = charpoly_moment(f, c.r, x, sigma, c.n);
  int code = kExitPass;
  if (c.n_samples > 0) {
    const auto rep = mc_charpoly_moment(f, c.r, x, sigma, c.n, c.n_samples, c.seed, c.quad_order);
    j["mc"] = to_json(rep);
    if (!rep.passed()) code = kExitFail;
  }
  emit(c, dump(j), out);
  return code;
}

int cmd_powersum(const Config& c, std::ostream& out) {
  const Field f = parse_field(c.ensemble);
  const Matrix sigma = read_sigma(c, f);
  ojson j;
  j["ensemble"] = to_string(f);
  j["k"] = c.k;
  j["n"] = c.n;
  j["closed"] = power_sum_closed(f, c.k, sigma, c.n);
  j["printed"] = power_sum_printed(f, c.k, sigma, c.n);
  int code = kExitPass;
  if (c.n_samples > 0) {
    const auto rep = mc_power_sum(f, c.k, sigma, c.n, c.n_samples, c.seed);
    j["mc"] = to_json(rep);
    if (!rep.passed()) code = kExitFail;
  }
  emit(c, dump(j), out);
  return code;
}

int cmd_density(const Config& c, std::ostream& out) {
  if (c.n < 1 || c.grid < 1) throw Error("--n and --grid must be positive");
  if (!(c.sigma1 > 0)) throw Error("--sigma1 must be positive");
  std::optional<DensityReport> mc;
  if (c.n_samples > 0) mc = mc_density(c.n, c.sigma1, c.n_samples, c.seed, c.grid);
  const double radius = std::sqrt(c.n + 1.0) + 3;
  ojson rows = ojson::array();
  std::ostringstream csv;
  csv << std::setprecision(17) << "r,density,truncated_exponential,bulk";
  if (mc) csv << ",r_lo,r_hi,empirical,expected,stderr,z";
  csv << "\n";
  for (int b = 0; b < c.grid; ++b) {
    const double r = (b + 0.5) * radius / c.grid;
    ojson row{{"r", r},
              {"density", density_rank1(r, c.n, c.sigma1)},
              {"truncated_exponential", density_truncated_exponential(r, c.n)},
              {"bulk", density_bulk(r, c.n, c.sigma1)}};
    csv << r << ',' << density_rank1(r, c.n, c.sigma1) << ',' << density_truncated_exponential(r, c.n) << ','
        << density_bulk(r, c.n, c.sigma1);
    if (mc) {
      const auto& m = mc->rows[static_cast<std::size_t>(b)];
      row["empirical"] = m.empirical;
      row["expected"] = m.expected;
      row["stderr"] = m.std_error;
      csv << ',' << m.r_lo << ',' << m.r_hi << ',' << m.empirical << ',' << m.expected << ',' << m.std_error << ','
          << m.z;
    }
    csv << "\n";
    rows.push_back(std::move(row));
  }
  if (c.format == "csv") {
    emit(c, csv.str(), out);
  } else {
    ojson j;
    j["n"] = c.n;
    j["sigma1"] = c.sigma1;
    j["grid"] = rows;
    if (mc) j["mc"] = to_json(*mc);
    emit(c, dump(j), out);
  }
  return mc && !mc->passed() ? kExitFail : kExitPass;
}

int cmd_verify(const Config& c, std::ostream& out, std::ostream& err) {
  SuiteOptions o;
  if (c.n_samples > 0) {
    o.samples = c.n_samples;
    o.density_samples = std::min(c.n_samples, o.density_samples);
  }
  o.seed = c.seed;
  o.quad_order = c.quad_order;
  if (!c.group.empty()) o.group = parse_group(c.group);
  std::vector<std::string> names;
  if (c.suite == "all")
    names = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), c.suite) != suite_names().end())
    names = {c.suite};
  else
    throw Error("unknown suite: " + c.suite);
  ojson all = ojson::array();
  std::string table;
  bool passed = true;
  for (const auto& name : names) {
    const auto res = run_suite(name, o);
    passed = passed && res.passed();
    all.push_back(to_json(res));
    table += summary_table(res);
  }
  const ojson j = names.size() == 1 ? all.front() : all;
  emit(c, c.format == "csv" ? table : dump(j), out);
  if (c.format != "csv") err << table;
  return passed ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  if (const char* dir = std::getenv("ZONAL_CACHE_DIR")) c.jack_cache = dir;
  CLI::App app{"Zonal and Jack polynomials, hypergeometric functions of matrix argument, Ginibre averages"};
  app.require_subcommand(1);
  app.add_option("--jobs", c.jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--jack-cache", c.jack_cache, "directory for cached Jack expansions");
  app.add_option("--out", c.out, "output file (default stdout)");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto common = [&](CLI::App* s) {
    s->add_option("--jobs", c.jobs)->check(CLI::NonNegativeNumber);
    s->add_option("--jack-cache", c.jack_cache);
    s->add_option("--out", c.out);
    s->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  };
  auto mc_flags = [&](CLI::App* s) {
    s->add_option("--n-samples", c.n_samples, "Monte-Carlo samples (0: closed form only)")->check(CLI::NonNegativeNumber);
    s->add_option("--seed", c.seed, "Monte-Carlo seed");
  };

  auto* jack = app.add_subcommand("jack", "monomial expansion of a Jack polynomial");
  jack->add_option("--kappa", c.kappa, "partition, comma separated")->required();
  jack->add_option("--alpha", c.alpha, "Jack parameter (rational)");
  jack->add_option("--nvars", c.nvars, "number of variables")->check(CLI::PositiveNumber);
  jack->add_option("--at", c.at, "evaluation point, comma separated rationals");
  jack->add_option("--normalization", c.normalization, "P or C")->check(CLI::IsMember({"P", "C"}));
  common(jack);

  auto* moment = app.add_subcommand("moment", "characteristic polynomial moment");
  moment->add_option("--ensemble", c.ensemble, "real, complex, quaternion")->required();
  moment->add_option("--r", c.r, "power")->check(CLI::NonNegativeNumber);
  moment->add_option("--x", c.x, "argument (real part)");
  moment->add_option("--x-im", c.x_im, "argument (imaginary part)");
  moment->add_option("--n", c.n, "matrix dimension N")->check(CLI::PositiveNumber);
  moment->add_option("--sigma", c.sigma, "variance matrix: 'identity' or a JSON file");
  moment->add_option("--quad-order", c.quad_order, "duality quadrature nodes per axis")->check(CLI::PositiveNumber);
  mc_flags(moment);
  common(moment);

  auto* powersum = app.add_subcommand("powersum", "power-sum average");
  powersum->add_option("--ensemble", c.ensemble, "real, complex, quaternion")->required();
  powersum->add_option("--k", c.k, "power")->check(CLI::PositiveNumber);
  powersum->add_option("--n", c.n, "matrix dimension N")->check(CLI::PositiveNumber);
  powersum->add_option("--sigma", c.sigma, "variance matrix: 'identity' or a JSON file");
  mc_flags(powersum);
  common(powersum);

  auto* density = app.add_subcommand("density", "eigenvalue density for Sigma = diag(sigma1, 1^N)");
  density->add_option("--n", c.n, "N")->check(CLI::PositiveNumber);
  density->add_option("--sigma1", c.sigma1, "first variance");
  density->add_option("--grid", c.grid, "radial grid points")->check(CLI::PositiveNumber);
  mc_flags(density);
  common(density);

  auto* verify = app.add_subcommand("verify", "Monte-Carlo verification suite");
  std::string names = "all";
  for (const auto& s : suite_names()) names += ", " + s;
  verify->add_option("--suite", c.suite, names)->required();
  verify->add_option("--group", c.group, "restrict the group suite to O, U or Sp")
      ->check(CLI::IsMember({"O", "U", "Sp"}));
  verify->add_option("--quad-order", c.quad_order)->check(CLI::PositiveNumber);
  mc_flags(verify);
  common(verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (c.jobs > 0) omp_set_num_threads(c.jobs);
  JackTable::instance().set_cache_dir(c.jack_cache.empty() ? std::nullopt
                                                           : std::optional<std::filesystem::path>(c.jack_cache));
  try {
    if (jack->parsed()) return cmd_jack(c, out);
    if (moment->parsed()) return cmd_moment(c, out);
    if (powersum->parsed()) return cmd_powersum(c, out);
    if (density->parsed()) return cmd_density(c, out);
    return cmd_verify(c, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace zonal
