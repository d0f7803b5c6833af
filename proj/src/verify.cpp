#include "zonal/verify.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "zonal/error.hpp"
#include "zonal/quadrature.hpp"

namespace zonal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(const Matrix& a) {
  const Eigen::Index n = a.rows();
  if ((a - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() == 0) return "I";
  Matrix off = a;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > 0 || a.diagonal().imag().cwiseAbs().maxCoeff() > 0) return "A";
  std::ostringstream os;
  os << "diag(";
  for (Eigen::Index i = 0; i < n; ++i) os << (i ? "," : "") << a(i, i).real();
  os << ")";
  return os.str();
}

std::string describe(cplx x) {
  std::ostringstream os;
  os << x.real();
  if (x.imag() != 0) os << (x.imag() > 0 ? "+" : "") << x.imag() << "i";
  return os.str();
}

Matrix identity(int n) { return Matrix::Identity(n, n); }

PolyEvaluator schur_evaluator(const Partition& mu, int nvars) { return PolyEvaluator(schur_poly(mu, nvars)); }

Alternate alternate(std::string name, double value, const MCEstimate& e, bool binding, bool agrees) {
  return Alternate{std::move(name), value, z_score(value, e), binding, agrees};
}

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

double z_score(double closed, const MCEstimate& e) {
  auto part = [](double diff, double se, double scale) {
    if (se > 0) return std::abs(diff) / se;
    return std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(scale)) ? 0.0 : kInf;
  };
  return std::max(part(e.mean.real() - closed, e.se_re, closed), part(e.mean.imag(), e.se_im, closed));
}

std::string ComparisonReport::verdict() const {
  for (const auto& alt : alternates)
    if (alt.binding && !alt.agrees) return "fail";
  if (!(z <= threshold)) return "fail";
  return z > warn ? "warn" : "pass";
}

ComparisonReport make_report(std::string id, double closed, const MCEstimate& e) {
  ComparisonReport r;
  r.id = std::move(id);
  r.closed = closed;
  r.estimate = e;
  r.z = z_score(closed, e);
  return r;
}

nlohmann::ordered_json to_json(const ComparisonReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["closed"] = r.closed;
  j["mean"] = r.estimate.mean.real();
  j["mean_im"] = r.estimate.mean.imag();
  j["stderr"] = r.estimate.se_re;
  j["stderr_im"] = r.estimate.se_im;
  j["n"] = r.estimate.n_samples;
  j["seed"] = r.estimate.seed;
  j["z"] = number(r.z);
  j["verdict"] = r.verdict();
  if (!r.alternates.empty()) {
    auto& alts = j["alternates"] = nlohmann::ordered_json::array();
    for (const auto& a : r.alternates)
      alts.push_back({{"name", a.name}, {"value", a.value}, {"z", number(a.z)}, {"binding", a.binding},
                      {"agrees", a.agrees}});
  }
  return j;
}

// ---------------------------------------------------------------------------

ComparisonReport mc_schur_average(Field f, const Matrix& a, const Partition& mu, int n, long samples,
                                  std::uint64_t seed) {
  if (f == Field::complex) throw Error("complex Schur averages need a partition pair");
  const Matrix am = ensemble_matrix(f, n, a);
  const GinibreSampler sampler(f, n, identity(n));
  const PolyEvaluator s = schur_evaluator(mu, sampler.dim());
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const auto ev = eigenvalues(am * sampler(rng));
    return s(ev).real();
  });
  return make_report("schur-" + to_string(f) + "-N" + std::to_string(n) + "-mu" + mu.to_string() + "-A" + describe(a),
                     schur_average_closed(f, mu, a, n), e);
}

ComparisonReport mc_schur_pair_average(const Matrix& a, const Partition& mu, const Partition& kappa, long samples,
                                       std::uint64_t seed) {
  const int n = static_cast<int>(a.rows());
  const Matrix am = ensemble_matrix(Field::complex, n, a);
  const GinibreSampler sampler(Field::complex, n, identity(n));
  const PolyEvaluator s_mu = schur_evaluator(mu, n), s_kappa = schur_evaluator(kappa, n);
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const auto ev = eigenvalues(am * sampler(rng));
    return s_mu(ev) * std::conj(s_kappa(ev));
  });
  return make_report("schur-complex-N" + std::to_string(n) + "-mu" + mu.to_string() + "-kappa" + kappa.to_string() +
                         "-A" + describe(a),
                     schur_pair_average_closed(mu, kappa, a), e);
}

ComparisonReport mc_group_integral(Group g, const Matrix& a, const Partition& lambda,
                                   const std::optional<Partition>& kappa, int n, long samples, std::uint64_t seed) {
  const Field f = group_field(g);
  const Matrix am = ensemble_matrix(f, n, a);
  const int dim = static_cast<int>(am.rows());
  const PolyEvaluator s_lambda = schur_evaluator(lambda, dim);
  std::string id = "group-" + to_string(g) + std::to_string(dim) + "-lambda" + lambda.to_string();
  if (g == Group::U) {
    if (!kappa) throw Error("unitary average needs a partition pair");
    const PolyEvaluator s_kappa = schur_evaluator(*kappa, dim);
    const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
      const auto ev = eigenvalues(am * sample_haar(g, n, rng));
      return s_lambda(ev) * std::conj(s_kappa(ev));
    });
    return make_report(id + "-kappa" + kappa->to_string() + "-A" + describe(a),
                       unitary_pair_average_closed(lambda, *kappa, a), e);
  }
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const auto ev = eigenvalues(am * sample_haar(g, n, rng));
    return s_lambda(ev).real();
  });
  return make_report(id + "-A" + describe(a), group_average_closed(f, lambda, a, n), e);
}

ComparisonReport mc_splitting(Field f, const Matrix& a, const Matrix& b, const Partition& kappa, long samples,
                              std::uint64_t seed, int nvars) {
  const int n = nvars < 0 ? static_cast<int>(a.rows()) : nvars;
  const Matrix am = ensemble_matrix(f, n, a), bm = ensemble_matrix(f, n, b);
  const JackParam alpha = jack_param(f);
  const GinibreSampler sampler(f, n, identity(n));
  const PolyEvaluator& c = jack_C_evaluator(kappa, alpha, n);
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const Matrix x = sampler(rng);
    const Matrix y = am * x * bm * x.adjoint();
    if (f == Field::quaternion) return c(quaternion_eigenvalues(y));
    const cplx v = c(eigenvalues(y));
    return f == Field::real ? cplx(v.real()) : v;
  });
  return make_report("splitting-" + to_string(f) + "-N" + std::to_string(n) + "-kappa" + kappa.to_string() + "-A" +
                         describe(a) + "-B" + describe(b),
                     splitting_closed(f, kappa, a, b), e);
}

ComparisonReport mc_charpoly_moment(Field f, int r, cplx x, const Matrix& sigma, int n, long samples,
                                    std::uint64_t seed, int quad_order) {
  const double closed = charpoly_moment(f, r, x, sigma, n);
  const GinibreSampler sampler(f, n, sigma);
  const Matrix id = identity(sampler.dim());
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const cplx d = (id - x * sampler(rng)).determinant();
    if (f == Field::complex) return std::pow(std::norm(d), r);
    return std::pow(d.real(), r);
  });
  auto report = make_report("charpoly-" + to_string(f) + "-N" + std::to_string(n) + "-r" + std::to_string(r) + "-x" +
                                describe(x) + "-Sigma" + describe(sigma),
                            closed, e);
  // Each moment is a terminating 2F0 with a = 1 in the duality integral.
  const JackParam alpha = jack_param(f);
  const auto spectrum = sigma_spectrum(f, n, sigma);
  const double scale = f == Field::real ? 2 * std::norm(x) : std::norm(x);
  const int order = f == Field::real ? r / 2 : r;
  if (order >= 1 && order <= 3) {
    std::vector<cplx> y;
    for (double s : spectrum) y.emplace_back(scale * s);
    const double dual = duality_integral(order, Rational(1), alpha, y, quad_order).real();
    const bool agrees = std::abs(dual - closed) <= 1e-8 * std::max(1.0, std::abs(closed));
    report.alternates.push_back(alternate("duality", dual, e, true, agrees));
  }
  if (f == Field::quaternion) {
    const double printed = charpoly_moment_quaternion_printed(r, x, sigma, n);
    report.alternates.push_back(alternate("printed", printed, e, false, z_score(printed, e) <= report.threshold));
  }
  return report;
}

ComparisonReport mc_power_sum(Field f, int k, const Matrix& sigma, int n, long samples, std::uint64_t seed) {
  if (k < 1) throw Error("power sum order must be positive");
  const GinibreSampler sampler(f, n, sigma);
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const Matrix x = sampler(rng);
    Matrix p = x;
    for (int i = 1; i < k; ++i) p = p * x;
    const cplx t = p.trace();
    return f == Field::complex ? std::norm(t) : t.real();
  });
  auto report = make_report(
      "powersum-" + to_string(f) + "-N" + std::to_string(n) + "-k" + std::to_string(k) + "-Sigma" + describe(sigma),
      power_sum_closed(f, k, sigma, n), e);
  const double printed = power_sum_printed(f, k, sigma, n);
  report.alternates.push_back(alternate("printed", printed, e, false, z_score(printed, e) <= report.threshold));
  return report;
}

ComparisonReport mc_kaneko(const JackParam& alpha, const Rational& a, const Partition& kappa, int n, long samples,
                           std::uint64_t seed) {
  Rational closed = kaneko_closed(a, alpha, kappa, n);
  if (alpha.value() == 2) closed *= pow(Rational(2), kappa.weight());
  const PolyEvaluator& c = jack_C_evaluator(kappa, alpha, n);
  const auto e = mc_estimate(samples, seed, [&](Philox& rng) {
    const auto t = laguerre_spectrum(alpha, n, a, rng);
    const std::vector<cplx> tc(t.begin(), t.end());
    return c(tc).real();
  });
  return make_report("kaneko-alpha" + to_string(alpha.value()) + "-a" + to_string(a) + "-N" + std::to_string(n) +
                         "-kappa" + kappa.to_string(),
                     closed.get_d(), e);
}

// ---------------------------------------------------------------------------

bool DensityReport::passed() const {
  return max_z <= threshold && std::abs(total_empirical - (n + 1)) <= 0.01 * (n + 1);
}

DensityReport mc_density(int n, double sigma, long samples, std::uint64_t seed, int grid) {
  if (n < 1 || grid < 1) throw Error("density grid needs n >= 1 and grid >= 1");
  if (!(sigma > 0)) throw Error("sigma not positive definite");
  const int dim = n + 1;
  Matrix s = identity(dim);
  s(0, 0) = sigma;
  const GinibreSampler sampler(Field::complex, dim, s);
  const double radius = std::sqrt(static_cast<double>(dim)) + 3;
  const double width = radius / grid;
  const auto hist = mc_histogram(samples, seed, grid + 1, [&](Philox& rng, std::vector<long long>& counts) {
    for (const cplx& z : eigenvalues(sampler(rng))) {
      const auto b = static_cast<std::size_t>(std::min<double>(grid, std::floor(std::abs(z) / width)));
      ++counts[b];
    }
  });
  DensityReport rep;
  rep.n = n;
  rep.sigma = sigma;
  rep.samples = samples;
  rep.seed = seed;
  const auto gl = gauss_jacobi01(16, 0.0, 0.0);
  for (int b = 0; b < grid; ++b) {
    DensityRow row;
    row.r_lo = b * width;
    row.r_hi = (b + 1) * width;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double r = row.r_lo + width * gl.nodes[i];
      row.expected += gl.weights[i] * width * 2 * std::numbers::pi * r * density_rank1(r, n, sigma);
    }
    row.empirical = hist.mean[static_cast<std::size_t>(b)];
    row.std_error = hist.std_error[static_cast<std::size_t>(b)];
    row.z = row.std_error > 0 ? std::abs(row.empirical - row.expected) / row.std_error
                              : (std::abs(row.empirical - row.expected) > 0 ? kInf : 0.0);
    if (row.expected * samples >= 100) rep.max_z = std::max(rep.max_z, row.z);
    rep.total_empirical += row.empirical;
    rep.total_expected += row.expected;
    rep.rows.push_back(row);
  }
  return rep;
}

nlohmann::ordered_json to_json(const DensityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = "density-N" + std::to_string(r.n) + "-sigma" + describe(cplx(r.sigma));
  j["n"] = r.samples;
  j["seed"] = r.seed;
  j["total_empirical"] = r.total_empirical;
  j["total_expected"] = r.total_expected;
  j["max_z"] = number(r.max_z);
  j["threshold"] = r.threshold;
  j["verdict"] = r.passed() ? "pass" : "fail";
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"r_lo", row.r_lo},
                    {"r_hi", row.r_hi},
                    {"empirical", row.empirical},
                    {"expected", row.expected},
                    {"stderr", row.std_error},
                    {"z", number(row.z)}});
  return j;
}

// ---------------------------------------------------------------------------

int ErrataReport::flagged_count() const {
  int count = 0;
  for (const auto& c : checks) count += c.flagged;
  return count;
}

ErrataReport errata_report(long samples, std::uint64_t seed) {
  ErrataReport rep;
  auto add = [&](std::string id, std::string description, const ComparisonReport& mc, double printed) {
    ErratumCheck c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.derived = mc.closed;
    c.printed = printed;
    c.mc = mc;
    c.z_printed = z_score(printed, mc.estimate);
    c.flagged = mc.passed() && c.z_printed > mc.threshold && std::abs(c.derived - c.printed) > 1e-9;
    rep.checks.push_back(std::move(c));
  };
  const Matrix i2 = identity(2), i1 = identity(1);
  {
    const auto mc = mc_power_sum(Field::real, 4, i2, 2, samples, seed);
    add("real-power-sum-hook-sum", "real <p_4(X)>, N = 2: sum over hooks (k/2-l, 1^l), l < k/2", mc,
        power_sum_printed(Field::real, 4, i2, 2));
  }
  {
    const auto mc = mc_power_sum(Field::real, 2, i2, 2, samples, seed + 1);
    add("real-power-sum-k2", "real <p_2(X)>, N = 2: single hook", mc, power_sum_printed(Field::real, 2, i2, 2));
  }
  {
    const auto mc = mc_power_sum(Field::complex, 2, i2, 2, samples, seed + 2);
    add("complex-power-sum", "complex <p_2(X) p_2(X^dag)>, N = 2: hook sum", mc,
        complex_power_sum_printed(2, 2).get_d());
  }
  {
    const auto mc = mc_power_sum(Field::quaternion, 2, i2, 2, samples, seed + 3);
    add("quaternion-power-sum-sign", "quaternion <p_2(X)>, N = 2: sign of the hook (1^{k/2})", mc,
        power_sum_printed(Field::quaternion, 2, i2, 2));
  }
  {
    const auto mc = mc_charpoly_moment(Field::quaternion, 1, 0.5, i1, 1, samples, seed + 4);
    add("quaternion-charpoly-parameter", "quaternion <det(I - xX)>, N = 1, x = 1/2: second 2F0 parameter", mc,
        charpoly_moment_quaternion_printed(1, 0.5, i1, 1));
  }
  return rep;
}

nlohmann::ordered_json to_json(const ErrataReport& r) {
  nlohmann::ordered_json j;
  j["flagged"] = r.flagged_count();
  auto& items = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["description"] = c.description;
    item["derived"] = c.derived;
    item["printed"] = c.printed;
    item["z_derived"] = number(c.mc.z);
    item["z_printed"] = number(c.z_printed);
    item["flagged"] = c.flagged;
    item["mc"] = to_json(c.mc);
    items.push_back(std::move(item));
  }
  return j;
}

// ---------------------------------------------------------------------------

bool SuiteResult::passed() const {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  for (const auto& d : densities)
    if (!d.passed()) return false;
  if (errata && errata->flagged_count() != 3) return false;
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"schur-real", "schur-complex", "schur-quaternion", "group",
                                              "splitting",  "charpoly",      "kaneko",           "powersum",
                                              "density",    "errata"};
  return names;
}

namespace {

Matrix diag(std::initializer_list<double> v) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteOptions& o) {
  SuiteResult res;
  res.name = name;
  auto& out = res.reports;
  const long n = o.samples;
  std::uint64_t seed = o.seed;
  // Every estimate gets its own seed so the reports are independent.
  auto next = [&] { return seed++; };
  if (name == "schur-real") {
    for (const auto& a : {identity(3), diag({1, 0.5, 1.0 / 3})})
      for (const auto& mu : {Partition{2}, Partition{2, 2}, Partition{4}, Partition{1}, Partition{2, 1}})
        out.push_back(mc_schur_average(Field::real, a, mu, 3, n, next()));
  } else if (name == "schur-complex") {
    const Matrix a = diag({1, 0.5});
    out.push_back(mc_schur_pair_average(a, Partition{1}, Partition{1}, n, next()));
    out.push_back(mc_schur_pair_average(a, Partition{2}, Partition{2}, n, next()));
    out.push_back(mc_schur_pair_average(a, Partition{2}, Partition{1, 1}, n, next()));
    out.push_back(mc_schur_pair_average(identity(2), Partition{1, 1}, Partition{1, 1}, n, next()));
  } else if (name == "schur-quaternion") {
    out.push_back(mc_schur_average(Field::quaternion, identity(1), Partition{1, 1}, 1, n, next()));
    out.push_back(mc_schur_average(Field::quaternion, identity(2), Partition{1, 1}, 2, n, next()));
    out.push_back(mc_schur_average(Field::quaternion, diag({1, 0.5}), Partition{1, 1}, 2, n, next()));
    out.push_back(mc_schur_average(Field::quaternion, identity(2), Partition{2, 2}, 2, n, next()));
    out.push_back(mc_schur_average(Field::quaternion, identity(2), Partition{2}, 2, n, next()));
  } else if (name == "group") {
    out.push_back(mc_group_integral(Group::O, identity(3), Partition{2}, std::nullopt, 3, n, next()));
    out.push_back(mc_group_integral(Group::O, diag({1, 0.5, 1.0 / 3}), Partition{2}, std::nullopt, 3, n, next()));
    out.push_back(mc_group_integral(Group::O, identity(3), Partition{1}, std::nullopt, 3, n, next()));
    out.push_back(mc_group_integral(Group::O, identity(3), Partition{1, 1}, std::nullopt, 3, n, next()));
    out.push_back(mc_group_integral(Group::U, identity(2), Partition{1}, Partition{1}, 2, n, next()));
    out.push_back(mc_group_integral(Group::U, diag({1, 0.5}), Partition{2}, Partition{2}, 2, n, next()));
    out.push_back(mc_group_integral(Group::U, identity(2), Partition{2}, Partition{1, 1}, 2, n, next()));
    out.push_back(mc_group_integral(Group::Sp, identity(2), Partition{1, 1}, std::nullopt, 2, n, next()));
    out.push_back(mc_group_integral(Group::Sp, identity(2), Partition{1}, std::nullopt, 2, n, next()));
    out.push_back(mc_group_integral(Group::Sp, identity(2), Partition{2}, std::nullopt, 2, n, next()));
  } else if (name == "splitting") {
    out.push_back(mc_splitting(Field::real, identity(2), identity(2), Partition{1}, n, next()));
    out.push_back(mc_splitting(Field::real, diag({1, 2}), diag({1, 0.5}), Partition{1}, n, next()));
    out.push_back(mc_splitting(Field::complex, diag({1, 0}), identity(2), Partition{1}, n, next()));
    out.push_back(mc_splitting(Field::complex, diag({1, 2}), diag({1, 0.5}), Partition{1}, n, next()));
    out.push_back(mc_splitting(Field::real, identity(2), identity(2), Partition{}, n, next()));
  } else if (name == "charpoly") {
    const Matrix s2 = diag({1.5, 0.5});
    for (int r = 1; r <= 2; ++r) {
      out.push_back(mc_charpoly_moment(Field::real, r, 0.5, identity(1), 1, n, next(), o.quad_order));
      out.push_back(mc_charpoly_moment(Field::real, r, 0.5, identity(2), 2, n, next(), o.quad_order));
      out.push_back(mc_charpoly_moment(Field::real, r, 0.5, s2, 2, n, next(), o.quad_order));
      out.push_back(mc_charpoly_moment(Field::complex, r, 0.5, identity(1), 1, n, next(), o.quad_order));
      out.push_back(mc_charpoly_moment(Field::complex, r, cplx(0.3, 0.4), s2, 2, n, next(), o.quad_order));
      out.push_back(mc_charpoly_moment(Field::quaternion, r, 0.5, identity(1), 1, n, next(), o.quad_order));
      out.push_back(mc_charpoly_moment(Field::quaternion, r, 0.5, s2, 2, n, next(), o.quad_order));
    }
  } else if (name == "kaneko") {
    out.push_back(mc_kaneko(JackParam::complex(), Rational(0), Partition{1}, 3, n, next()));
    out.push_back(mc_kaneko(JackParam::complex(), Rational(1), Partition{2}, 2, n, next()));
    out.push_back(mc_kaneko(JackParam::complex(), Rational(0), Partition{1, 1}, 2, n, next()));
    out.push_back(mc_kaneko(JackParam::complex(), Rational(0), Partition{}, 2, n, next()));
    out.push_back(mc_kaneko(JackParam::real(), make_rational(-1, 2), Partition{1}, 2, n, next()));
    out.push_back(mc_kaneko(JackParam::real(), Rational(0), Partition{2}, 2, n, next()));
    out.push_back(mc_kaneko(JackParam::real(), make_rational(1, 2), Partition{1, 1}, 2, n, next()));
  } else if (name == "powersum") {
    out.push_back(mc_power_sum(Field::real, 2, identity(3), 3, n, next()));
    out.push_back(mc_power_sum(Field::real, 4, identity(2), 2, n, next()));
    out.push_back(mc_power_sum(Field::real, 3, identity(2), 2, n, next()));
    out.push_back(mc_power_sum(Field::complex, 1, identity(2), 2, n, next()));
    out.push_back(mc_power_sum(Field::complex, 2, identity(2), 2, n, next()));
    out.push_back(mc_power_sum(Field::quaternion, 2, identity(2), 2, n, next()));
    out.push_back(mc_power_sum(Field::quaternion, 2, identity(1), 1, n, next()));
  } else if (name == "density") {
    res.densities.push_back(mc_density(20, 1.0, o.density_samples, next(), 64));
    res.densities.push_back(mc_density(20, 3.0, o.density_samples, next(), 64));
  } else if (name == "errata") {
    res.errata = errata_report(n, next());
  } else {
    throw Error("unknown suite");
  }
  if (name == "group" && o.group) {
    const std::string prefix = "group-" + to_string(*o.group);
    std::erase_if(out, [&](const ComparisonReport& r) {
      return r.id.compare(0, prefix.size(), prefix) != 0 || !std::isdigit(static_cast<unsigned char>(r.id[prefix.size()]));
    });
  }
  return res;
}

nlohmann::ordered_json to_json(const SuiteResult& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.name;
  j["verdict"] = r.passed() ? "pass" : "fail";
  auto& reports = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& rep : r.reports) reports.push_back(to_json(rep));
  for (const auto& d : r.densities) reports.push_back(to_json(d));
  if (r.errata) j["errata"] = to_json(*r.errata);
  return j;
}

std::string summary_table(const SuiteResult& r) {
  std::ostringstream os;
  os << std::left << std::setw(64) << "id" << std::right << std::setw(14) << "closed" << std::setw(14) << "mean"
     << std::setw(12) << "stderr" << std::setw(9) << "z"
     << "  verdict\n";
  os << std::setprecision(6);
  for (const auto& rep : r.reports)
    os << std::left << std::setw(64) << rep.id << std::right << std::setw(14) << rep.closed << std::setw(14)
       << rep.estimate.mean.real() << std::setw(12) << rep.estimate.se_re << std::setw(9) << std::setprecision(3)
       << rep.z << std::setprecision(6) << "  " << rep.verdict() << "\n";
  for (const auto& d : r.densities)
    os << std::left << std::setw(64) << ("density-N" + std::to_string(d.n) + "-sigma" + describe(cplx(d.sigma)))
       << std::right << std::setw(14) << d.total_expected << std::setw(14) << d.total_empirical << std::setw(12) << "-"
       << std::setw(9) << std::setprecision(3) << d.max_z << std::setprecision(6) << "  "
       << (d.passed() ? "pass" : "fail") << "\n";
  if (r.errata)
    for (const auto& c : r.errata->checks)
      os << std::left << std::setw(64) << c.id << std::right << std::setw(14) << c.derived << std::setw(14)
         << c.mc.estimate.mean.real() << std::setw(12) << c.printed << std::setw(9) << std::setprecision(3)
         << c.z_printed << std::setprecision(6) << "  " << (c.flagged ? "flagged" : "consistent") << "\n";
  return os.str();
}

}  // namespace zonal
