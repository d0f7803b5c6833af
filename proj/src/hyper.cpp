#include "zonal/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "zonal/error.hpp"
#include "zonal/quadrature.hpp"

namespace zonal {

namespace {

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

std::vector<cplx> to_cplx(const std::vector<double>& v) { return {v.begin(), v.end()}; }

std::vector<cplx> scaled(const std::vector<double>& v, double c) {
  std::vector<cplx> out;
  for (double x : v) out.emplace_back(c * x, 0.0);
  return out;
}

double c_ratio(const Partition& kappa, const JackParam& alpha, const std::vector<double>& spectrum) {
  const int n = static_cast<int>(spectrum.size());
  return jack_C_eval(kappa, alpha, to_cplx(spectrum)).real() / principal_C(kappa, alpha, n).get_d();
}

bool all_even(const Partition& mu) {
  return std::all_of(mu.parts().begin(), mu.parts().end(), [](int p) { return p % 2 == 0; });
}

Partition halved(const Partition& mu) {
  std::vector<int> parts;
  for (int p : mu.parts()) parts.push_back(p / 2);
  return Partition(parts);
}

// kappa with kappa^2 = mu, if any.
std::optional<Partition> square_root(const Partition& mu) {
  if (mu.length() % 2) return std::nullopt;
  std::vector<int> parts;
  for (int i = 0; i < mu.length(); i += 2) {
    if (mu[i] != mu[i + 1]) return std::nullopt;
    parts.push_back(mu[i]);
  }
  return Partition(parts);
}

}  // namespace

std::optional<int> termination_order(const HyperSpec& spec) {
  std::optional<int> r;
  for (const auto& a : spec.a) {
    if (is_integer(a) && a <= 0) {
      const int order = static_cast<int>(-a.get_num().get_si());
      if (!r || order < *r) r = order;
    }
  }
  return r;
}

std::vector<Partition> series_support(const HyperSpec& spec) {
  if (spec.nvars < 1) throw Error("nvars must be positive");
  if (auto r = termination_order(spec)) return partitions_in_box(spec.nvars, *r);
  if (spec.max_weight < 0) throw Error("max_weight must be nonnegative");
  std::vector<Partition> out;
  for (int w = 0; w <= spec.max_weight; ++w)
    for (auto& k : partitions_of(w, spec.nvars)) out.push_back(std::move(k));
  return out;
}

Rational hyper_coefficient(const HyperSpec& spec, const Partition& kappa) {
  Rational num(1);
  for (const auto& a : spec.a) {
    num *= gen_pochhammer(a, kappa, spec.alpha);
    if (num == 0) return num;
  }
  Rational den(1);
  for (const auto& b : spec.b) den *= gen_pochhammer(b, kappa, spec.alpha);
  if (den == 0) throw Error("b-parameter pole");
  return num / den / factorial(kappa.weight());
}

HyperValue pFq(const HyperSpec& spec, std::span<const cplx> x) {
  if (static_cast<int>(x.size()) != spec.nvars) throw Error("spectrum length mismatch");
  HyperValue out;
  out.terminating = termination_order(spec).has_value();
  const auto support = series_support(spec);
  int shell_weight = -1;
  cplx shell = 0;
  out.value = 0;
  for (const auto& kappa : support) {
    if (kappa.weight() != shell_weight) {
      out.value += shell;
      out.tail_estimate = std::abs(shell);
      shell = 0;
      shell_weight = kappa.weight();
    }
    const Rational c = hyper_coefficient(spec, kappa);
    if (c == 0) continue;
    shell += c.get_d() * jack_C_eval(kappa, spec.alpha, x);
    ++out.terms;
  }
  out.value += shell;
  out.tail_estimate = out.terminating ? 0.0 : std::abs(shell);
  return out;
}

Rational pFq_exact(const HyperSpec& spec, std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != spec.nvars) throw Error("spectrum length mismatch");
  Rational total(0);
  for (const auto& kappa : series_support(spec)) {
    const Rational c = hyper_coefficient(spec, kappa);
    if (c != 0) total += c * jack_C_exact(kappa, spec.alpha, x);
  }
  return total;
}

std::map<Partition, Rational> pFq_jack_coefficients(const HyperSpec& spec) {
  std::map<Partition, Rational> out;
  for (const auto& kappa : series_support(spec)) {
    const Rational c = hyper_coefficient(spec, kappa);
    if (c != 0) out.emplace(kappa, c * jack_C_factor(kappa, spec.alpha));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

double two_f_zero(const Rational& a1, const Rational& a2, const JackParam& alpha, const std::vector<cplx>& x) {
  HyperSpec spec{{a1, a2}, {}, alpha, static_cast<int>(x.size())};
  if (!termination_order(spec)) throw Error("2F0 does not terminate");
  return pFq(spec, x).value.real();
}

void check_order(int r) {
  if (r < 0) throw Error("moment order must be nonnegative");
}

}  // namespace

double charpoly_moment(Field f, int r, cplx x, const Matrix& sigma, int n) {
  check_order(r);
  if (n < 0) n = static_cast<int>(sigma.rows());
  const auto spec = sigma_spectrum(f, n, sigma);
  const double x2 = std::norm(x);
  switch (f) {
    case Field::real:
      if (x.imag() != 0) throw Error("real ensemble needs real x");
      return two_f_zero(make_rational(-r, 2), make_rational(-r + 1, 2), JackParam::real(), scaled(spec, 2 * x2));
    case Field::complex:
      return two_f_zero(Rational(-r), Rational(-r), JackParam::complex(), scaled(spec, x2));
    case Field::quaternion:
      return two_f_zero(Rational(-r), Rational(-r - 1), JackParam::quaternion(), scaled(spec, x2));
  }
  throw Error("unknown field");
}

double charpoly_moment_quaternion_printed(int r, cplx x, const Matrix& sigma, int n) {
  check_order(r);
  if (n < 0) n = static_cast<int>(sigma.rows());
  // The printed argument |x|^2 Sigma'/2 with Sigma' = 2 Sigma.
  const auto spec = sigma_spectrum(Field::quaternion, n, sigma);
  return two_f_zero(Rational(-r), Rational(-r + 1), JackParam::quaternion(), scaled(spec, std::norm(x)));
}

double wishart_det_moment(Field f, int s, cplx x, const Matrix& sigma, int n) {
  check_order(s);
  if (n < 0) n = static_cast<int>(sigma.rows());
  if (f == Field::real) {
    if (x.imag() != 0) throw Error("real ensemble needs real x");
    const auto spec = sigma_spectrum(f, n, sigma);
    return two_f_zero(Rational(-s), make_rational(-2 * s + 1, 2), JackParam::real(), scaled(spec, 2 * std::norm(x)));
  }
  return charpoly_moment(f, s, x, sigma, n);
}

double muirhead_form(int s, double x, const Matrix& sigma) {
  check_order(s);
  if (x == 0) throw Error("x must be nonzero");
  const int n = static_cast<int>(sigma.rows());
  const auto spec = sigma_spectrum(Field::real, n, sigma);
  double det = 1;
  for (double v : spec) det *= v;
  double log_gamma_ratio = 0;
  for (int j = 1; j <= n; ++j) {
    const double u = n / 2.0 - (j - 1) / 2.0;
    log_gamma_ratio += std::lgamma(u + s) - std::lgamma(u);
  }
  std::vector<cplx> arg;
  for (double v : spec) arg.emplace_back(-1.0 / (2 * x * x * v), 0.0);
  HyperSpec hs{{Rational(-s)}, {make_rational(n, 2)}, JackParam::real(), n};
  return std::pow(det, s) * std::pow(2.0, n * s) * std::exp(log_gamma_ratio) * pFq(hs, arg).value.real();
}

std::vector<IdentityTerm> identity_id_terms(int n, int s) {
  check_order(s);
  const JackParam alpha = JackParam::real();
  HyperSpec lhs_spec{{Rational(-s), make_rational(-2 * s + 1, 2)}, {}, alpha, n};
  const Rational half_n(n, 2);
  const Rational front = gen_pochhammer(half_n, box(s, n), alpha);
  std::vector<IdentityTerm> out;
  for (const auto& lambda : partitions_in_box(n, s)) {
    IdentityTerm t{lambda, hyper_coefficient(lhs_spec, lambda) * jack_C_factor(lambda, alpha), Rational(0)};
    // (det Y)^s P_k(-Y^-1) = (-1)^|k| P_{k^s}(Y), so lambda = k^s with k = lambda^s.
    const Partition kappa = complement(lambda, s, n);
    const Rational num = gen_pochhammer(Rational(-s), kappa, alpha);
    if (num != 0) {
      const int sign = kappa.weight() % 2 ? -1 : 1;
      t.rhs = front * num / gen_pochhammer(half_n, kappa, alpha) * sign * pow(alpha.value(), kappa.weight()) /
              hook_upper(kappa, alpha);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::pair<Rational, Rational> identity_id_values(int s, std::span<const Rational> y) {
  check_order(s);
  const int n = static_cast<int>(y.size());
  const JackParam alpha = JackParam::real();
  HyperSpec lhs_spec{{Rational(-s), make_rational(-2 * s + 1, 2)}, {}, alpha, n};
  HyperSpec rhs_spec{{Rational(-s)}, {make_rational(n, 2)}, alpha, n};
  Rational det(1);
  std::vector<Rational> inv;
  for (const auto& v : y) {
    if (v == 0) throw Error("Y must be invertible");
    det *= v;
    inv.push_back(-1 / v);
  }
  const Rational rhs = gen_pochhammer(make_rational(n, 2), box(s, n), alpha) * pow(det, s) * pFq_exact(rhs_spec, inv);
  return {pFq_exact(lhs_spec, y), rhs};
}

// ---------------------------------------------------------------------------

namespace {

cplx det_factor(std::span<const double> t, std::span<const cplx> y, double inv_alpha) {
  cplx prod = 1;
  for (double tl : t)
    for (const auto& yi : y) prod *= 1.0 + tl * inv_alpha * yi;
  return prod;
}

struct Accum {
  cplx num = 0;
  double den = 0;
};

cplx tensor_rule(int r, double a, double alpha, std::span<const cplx> y, int order) {
  const auto rule = gauss_laguerre(order, a - 1);
  const double inv_alpha = 1 / alpha;
  long total = 1;
  for (int i = 0; i < r; ++i) total *= order;
  const long outer = order;
  const long inner = total / order;
  std::vector<Accum> partial(outer);
  // One partial sum per outer node, reduced afterwards in index order.
#pragma omp parallel for schedule(static)
  for (long o = 0; o < outer; ++o) {
    std::vector<double> t(r);
    Accum acc;
    for (long idx = 0; idx < inner; ++idx) {
      long rest = idx;
      double w = rule.weights[o];
      t[0] = rule.nodes[o];
      for (int l = 1; l < r; ++l) {
        const long j = rest % order;
        rest /= order;
        t[l] = rule.nodes[j];
        w *= rule.weights[j];
      }
      double vdm = 1;
      for (int j = 0; j < r; ++j)
        for (int k = j + 1; k < r; ++k) vdm *= std::pow(std::abs(t[k] - t[j]), 2 * alpha);
      acc.num += w * vdm * det_factor(t, y, inv_alpha);
      acc.den += w * vdm;
    }
    partial[o] = acc;
  }
  Accum sum;
  for (const auto& p : partial) {
    sum.num += p.num;
    sum.den += p.den;
  }
  return sum.num / sum.den;
}

// Ordered sector t_1 <= ... <= t_r = rho with t_l = rho prod_{m>=l} v_m.
cplx sector_rule(int r, double a, double alpha, std::span<const cplx> y, int order) {
  const double c = r * a - 1 + alpha * r * (r - 1);
  const auto radial = gauss_laguerre(order, c);
  std::vector<QuadratureRule> ratio;
  for (int m = 1; m < r; ++m) ratio.push_back(gauss_jacobi01(order, 0.0, m * a - 1));
  const double inv_alpha = 1 / alpha;
  long inner = 1;
  for (int m = 1; m < r; ++m) inner *= order;
  std::vector<Accum> partial(inner);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < inner; ++idx) {
    std::vector<double> u(r), t(r);
    double w = 1;
    long rest = idx;
    std::vector<double> v(r, 1.0);
    for (int m = 1; m < r; ++m) {
      const long j = rest % order;
      rest /= order;
      v[m] = ratio[m - 1].nodes[j];
      w *= ratio[m - 1].weights[j];
    }
    u[r - 1] = 1;
    for (int l = r - 2; l >= 0; --l) u[l] = u[l + 1] * v[l + 1];
    double sum_u = 0;
    for (double x : u) sum_u += x;
    double g = 1;
    for (int j = 0; j < r; ++j)
      for (int k = j + 1; k < r; ++k) g *= std::pow(u[k] - u[j], 2 * alpha);
    const double factor = w * g * std::pow(sum_u, -(c + 1));
    Accum acc;
    for (int q = 0; q < order; ++q) {
      for (int l = 0; l < r; ++l) t[l] = radial.nodes[q] * u[l] / sum_u;
      acc.num += factor * radial.weights[q] * det_factor(t, y, inv_alpha);
      acc.den += factor * radial.weights[q];
    }
    partial[idx] = acc;
  }
  Accum sum;
  for (const auto& p : partial) {
    sum.num += p.num;
    sum.den += p.den;
  }
  return sum.num / sum.den;
}

}  // namespace

cplx duality_integral(int r, const Rational& a, const JackParam& alpha, std::span<const cplx> y, int quad_order,
                      DualityRule rule) {
  if (r < 1) throw Error("duality order must be positive");
  if (r > 4) throw Error("quadrature dimension cap");
  if (a <= 0) throw Error("a must be positive");
  if (quad_order < 1) throw Error("quadrature order must be positive");
  const Rational two_alpha = 2 * alpha.value();
  if (rule == DualityRule::automatic)
    rule = is_integer(two_alpha) && two_alpha.get_num() % 2 == 0 ? DualityRule::tensor : DualityRule::sector;
  const double ad = a.get_d(), al = alpha.value().get_d();
  return rule == DualityRule::tensor ? tensor_rule(r, ad, al, y, quad_order) : sector_rule(r, ad, al, y, quad_order);
}

cplx duality_closed(int r, const Rational& a, const JackParam& alpha, std::span<const cplx> y) {
  if (r < 0) throw Error("duality order must be nonnegative");
  HyperSpec spec{{Rational(-r), -a / alpha.value() - (r - 1)}, {}, alpha, static_cast<int>(y.size())};
  return pFq(spec, y).value;
}

// ---------------------------------------------------------------------------

double density_rank1(cplx z, int n, double sigma) {
  if (n < 1) throw Error("N must be positive");
  if (!(sigma > 0)) throw Error("sigma must be positive");
  const double x = std::norm(z);
  const double first = boost::math::gamma_q(n + 1.0, x);
  const double second = boost::math::gamma_q(static_cast<double>(n), x) / n;
  return (sigma * first + (1 - sigma) * x * second) / std::numbers::pi;
}

double density_bulk(cplx z, int n, double sigma) {
  if (n < 1) throw Error("N must be positive");
  return sigma / std::numbers::pi + (1 - sigma) * std::norm(z) / (std::numbers::pi * n);
}

double density_edge(double r) { return (1 + std::erf(std::sqrt(2.0) * r)) / (2 * std::numbers::pi); }

double density_truncated_exponential(cplx z, int n) {
  const double x = std::norm(z);
  double term = 1, sum = 1;
  for (int k = 1; k <= n; ++k) {
    term *= x / k;
    sum += term;
  }
  return std::exp(-x) * sum / std::numbers::pi;
}

// ---------------------------------------------------------------------------

Rational kaneko_closed(const Rational& a, const JackParam& alpha, const Partition& kappa, int n) {
  return principal_C(kappa, alpha, n) *
         gen_pochhammer(a + Rational(n - 1) / alpha.value() + 1, kappa, alpha);
}

Matrix ensemble_matrix(Field f, int n, const Matrix& a) {
  if (a.rows() != a.cols()) throw Error("matrix must be square");
  if (f == Field::quaternion) {
    if (a.rows() == 2 * n) {
      if (self_dual_defect(a) > 1e-10) throw Error("quaternion matrix must be self-dual");
      return a;
    }
    if (a.rows() != n) throw Error("dimension mismatch");
    return quaternion_embed(a);
  }
  if (a.rows() != n) throw Error("dimension mismatch");
  if (f == Field::real && a.imag().cwiseAbs().maxCoeff() > 0) throw Error("real ensemble needs a real matrix");
  return a;
}

std::vector<double> gram_spectrum(Field f, int n, const Matrix& a) {
  const Matrix m = ensemble_matrix(f, n, a);
  const Matrix g = m * m.adjoint();
  return f == Field::quaternion ? quaternion_hermitian_eigenvalues(g) : hermitian_eigenvalues(g);
}

Rational ginibre_C_ratio(Field f, const Partition& kappa, int n) {
  switch (f) {
    case Field::real:
      return pow(Rational(2), kappa.weight()) * gen_pochhammer(make_rational(n, 2), kappa, JackParam::real());
    case Field::complex:
      return gen_pochhammer(Rational(n), kappa, JackParam::complex());
    case Field::quaternion:
      return gen_pochhammer(Rational(2 * n), kappa, JackParam::quaternion());
  }
  throw Error("unknown field");
}

double schur_average_closed(Field f, const Partition& mu, const Matrix& a, int n) {
  std::optional<Partition> kappa;
  if (f == Field::real) {
    if (all_even(mu)) kappa = halved(mu);
  } else if (f == Field::quaternion) {
    kappa = square_root(mu);
  } else {
    throw Error("complex averages are pair averages");
  }
  const auto spectrum = gram_spectrum(f, n, a);
  if (!kappa || kappa->length() > n) return 0.0;
  return ginibre_C_ratio(f, *kappa, n).get_d() * c_ratio(*kappa, jack_param(f), spectrum);
}

double schur_pair_average_closed(const Partition& mu, const Partition& kappa, const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  const auto spectrum = gram_spectrum(Field::complex, n, a);
  if (mu != kappa || kappa.length() > n) return 0.0;
  return ginibre_C_ratio(Field::complex, kappa, n).get_d() * c_ratio(kappa, JackParam::complex(), spectrum);
}

Rational real_schur_identity_exact(const Partition& mu, int n) {
  if (!all_even(mu) || mu.length() > n) return Rational(0);
  return ginibre_C_ratio(Field::real, halved(mu), n);
}

Rational real_schur_gamma_product(const Partition& mu, int n) {
  if (!all_even(mu) || mu.length() > n) return Rational(0);
  // Gamma(x + m)/Gamma(x) = (x)_m with x = (N-n+1)/2 and m = mu_n/2.
  Rational prod = pow(Rational(2), mu.weight() / 2);
  for (int i = 1; i <= n; ++i) prod *= rising(make_rational(n - i + 1, 2), mu[i - 1] / 2);
  return prod;
}

double group_average_closed(Field f, const Partition& lambda, const Matrix& a, int n) {
  std::optional<Partition> kappa;
  if (f == Field::real) {
    if (all_even(lambda)) kappa = halved(lambda);
  } else if (f == Field::quaternion) {
    kappa = square_root(lambda);
  } else {
    throw Error("unitary averages are pair averages");
  }
  const auto spectrum = gram_spectrum(f, n, a);
  if (!kappa || kappa->length() > n) return 0.0;
  return c_ratio(*kappa, jack_param(f), spectrum);
}

double unitary_pair_average_closed(const Partition& lambda, const Partition& kappa, const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  const auto spectrum = gram_spectrum(Field::complex, n, a);
  if (lambda != kappa || kappa.length() > n) return 0.0;
  return c_ratio(kappa, JackParam::complex(), spectrum);
}

double splitting_closed(Field f, const Partition& kappa, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("dimension mismatch");
  const JackParam alpha = jack_param(f);
  int n = static_cast<int>(a.rows());
  std::vector<cplx> ea, eb;
  if (f == Field::quaternion) {
    if (self_dual_defect(a) > 1e-10 || self_dual_defect(b) > 1e-10) throw Error("quaternion matrix must be self-dual");
    n /= 2;
    ea = quaternion_eigenvalues(a);
    eb = quaternion_eigenvalues(b);
  } else {
    ea = eigenvalues(a);
    eb = eigenvalues(b);
  }
  if (kappa.length() > n) return 0.0;
  const double one = principal_C(kappa, alpha, n).get_d();
  const cplx ca = jack_C_eval(kappa, alpha, ea), cb = jack_C_eval(kappa, alpha, eb);
  return (ca * cb).real() / one * ginibre_C_ratio(f, kappa, n).get_d();
}

DPrimeForms d_prime_ratio_forms(const Partition& kappa, int n) {
  if (kappa.length() > n) throw Error("partition longer than N");
  const JackParam one = JackParam::complex();
  const int k = kappa.weight();
  const Rational two_k = pow(Rational(2), k);
  DPrimeForms out;
  out.lhs[0] = two_k * gen_pochhammer(make_rational(n, 2), kappa, JackParam::real()) /
               principal_C(kappa, JackParam::real(), n);
  out.lhs[1] = gen_pochhammer(Rational(n), kappa, one) / principal_C(kappa, one, n);
  out.lhs[2] = gen_pochhammer(Rational(2 * n), kappa, JackParam::quaternion()) / two_k /
               principal_C(kappa, JackParam::quaternion(), n);
  const Rational fact = factorial(k);
  const Rational d = hook_upper(kappa, one);
  out.rhs[0] = hook_upper(doubled(kappa), one) / (fact * two_k);
  out.rhs[1] = d * d / fact;
  out.rhs[2] = hook_upper(squared(kappa), one) / (two_k * fact);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Partition hook(int arm_len, int leg_len) {
  std::vector<int> parts{arm_len};
  parts.insert(parts.end(), leg_len, 1);
  return Partition(parts);
}

int sigma_dim(const Matrix& sigma, int n) { return n < 0 ? static_cast<int>(sigma.rows()) : n; }

}  // namespace

double power_sum_closed(Field f, int k, const Matrix& sigma, int nvars) {
  if (k < 1) throw Error("power sum order must be positive");
  const int n = sigma_dim(sigma, nvars);
  const auto spectrum = sigma_spectrum(f, n, sigma);
  const JackParam alpha = jack_param(f);
  switch (f) {
    case Field::real: {
      if (k % 2) return 0.0;
      const Partition kappa{k / 2};
      return ginibre_C_ratio(f, kappa, n).get_d() * c_ratio(kappa, alpha, spectrum);
    }
    case Field::complex: {
      double total = 0;
      for (int l = 0; l < k; ++l) {
        const Partition h = hook(k - l, l);
        if (h.length() > n) continue;
        total += ginibre_C_ratio(f, h, n).get_d() * c_ratio(h, alpha, spectrum);
      }
      return total;
    }
    case Field::quaternion: {
      if (k % 2 || k / 2 > n) return 0.0;
      const Partition kappa(std::vector<int>(k / 2, 1));
      const double sign = (k - 1) % 2 ? -1.0 : 1.0;
      return sign * ginibre_C_ratio(f, kappa, n).get_d() * c_ratio(kappa, alpha, spectrum);
    }
  }
  throw Error("unknown field");
}

double power_sum_printed(Field f, int k, const Matrix& sigma, int nvars) {
  if (k < 1) throw Error("power sum order must be positive");
  const int n = sigma_dim(sigma, nvars);
  const auto spectrum = sigma_spectrum(f, n, sigma);
  const JackParam alpha = jack_param(f);
  switch (f) {
    case Field::real: {
      if (k % 2) return 0.0;
      double total = 0;
      for (int l = 0; l < k / 2; ++l) {
        const Partition h = hook(k / 2 - l, l);
        if (h.length() > n) continue;
        total += gen_pochhammer(make_rational(n, 2), h, alpha).get_d() * c_ratio(h, alpha, spectrum);
      }
      return std::pow(2.0, k / 2) * total;
    }
    case Field::complex:
      return power_sum_closed(f, k, sigma, nvars);
    case Field::quaternion: {
      if (k % 2 || k / 2 > n) return 0.0;
      const Partition kappa(std::vector<int>(k / 2, 1));
      std::vector<double> doubled_spectrum;
      for (double v : spectrum) doubled_spectrum.push_back(2 * v);
      return std::pow(2.0, -k / 2) * gen_pochhammer(Rational(2 * n), kappa, alpha).get_d() *
             c_ratio(kappa, alpha, doubled_spectrum);
    }
  }
  throw Error("unknown field");
}

Rational complex_power_sum_from_pairs(int k, int n) {
  if (k < 1) throw Error("power sum order must be positive");
  // Sum over hook pairs (l, l') of (-1)^{l+l'} <s_h(X) s_h'(X^dag)> at Sigma = I;
  // the pair average is delta_{h,h'} [N]_h.
  Rational total(0);
  for (int l = 0; l < k; ++l)
    for (int lp = 0; lp < k; ++lp) {
      const Partition h = hook(k - l, l), hp = hook(k - lp, lp);
      if (h != hp || h.length() > n) continue;
      total += ((l + lp) % 2 ? -1 : 1) * gen_pochhammer(Rational(n), h, JackParam::complex());
    }
  return total;
}

Rational complex_power_sum_printed(int k, int n) {
  if (k < 1) throw Error("power sum order must be positive");
  Rational total(0);
  for (int l = 0; l < k; ++l) {
    const Partition h = hook(k - l, l);
    if (h.length() > n) continue;
    const JackParam one = JackParam::complex();
    total += gen_pochhammer(Rational(n), h, one) / principal_C(h, one, n) * principal_C(h, one, n);
  }
  return total;
}

}  // namespace zonal
