#include "zonal/sympoly.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include <Eigen/Dense>

#include "zonal/error.hpp"

namespace zonal {

Spectrum::Spectrum(std::vector<cplx> values) : values_(std::move(values)) {
  for (const auto& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw Error("non-finite spectrum entry");
}

Spectrum Spectrum::real(const std::vector<double>& values) {
  return Spectrum(std::vector<cplx>(values.begin(), values.end()));
}

Spectrum Spectrum::scaled(cplx factor) const {
  std::vector<cplx> out(values_);
  for (auto& v : out) v *= factor;
  return Spectrum(std::move(out));
}

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error("nvars must be positive");
}

SymPoly SymPoly::mono(const Partition& kappa, int nvars) {
  SymPoly p(nvars);
  p.add_term(kappa, Rational(1));
  return p;
}

SymPoly SymPoly::constant(const Rational& c, int nvars) { return mono(Partition(), nvars) * c; }

Rational SymPoly::coefficient(const Partition& kappa) const {
  auto it = terms_.find(kappa);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Partition& kappa, const Rational& c) {
  if (kappa.length() > nvars_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(kappa, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& other) {
  if (other.nvars_ != nvars_) throw Error("mismatched nvars");
  for (const auto& [k, c] : other.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& other) {
  if (other.nvars_ != nvars_) throw Error("mismatched nvars");
  for (const auto& [k, c] : other.terms_) add_term(k, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

// m_kappa * m_mu: the coefficient of m_nu is the number of orbit pairs
// (a, b) with a + b equal to the sorted representative nu.
std::map<Partition, long> monomial_product(const Partition& kappa, const Partition& mu, int n) {
  std::vector<std::vector<int>> orbit_mu;
  for_each_orbit_point(mu, n, [&](const std::vector<int>& e) { orbit_mu.push_back(e); });
  std::map<Partition, long> out;
  std::vector<int> sum(n);
  for_each_orbit_point(kappa, n, [&](const std::vector<int>& a) {
    for (const auto& b : orbit_mu) {
      for (int i = 0; i < n; ++i) sum[i] = a[i] + b[i];
      if (weakly_decreasing(sum)) ++out[Partition(sum)];
    }
  });
  return out;
}

}  // namespace

SymPoly SymPoly::multiply(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error("mismatched nvars");
  SymPoly out(a.nvars_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Rational c = ca * cb;
      for (const auto& [nu, count] : monomial_product(ka, kb, a.nvars_)) out.add_term(nu, c * count);
    }
  }
  return out;
}

cplx monomial_eval(const Partition& kappa, std::span<const cplx> x) {
  const int n = static_cast<int>(x.size());
  cplx total = 0;
  for_each_orbit_point(kappa, n, [&](const std::vector<int>& e) {
    cplx term = 1;
    for (int i = 0; i < n; ++i)
      if (e[i]) term *= std::pow(x[i], e[i]);
    total += term;
  });
  return total;
}

cplx SymPoly::eval(std::span<const cplx> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw Error("spectrum length mismatch");
  cplx total = 0;
  for (const auto& [k, c] : terms_) total += c.get_d() * monomial_eval(k, x);
  return total;
}

Rational SymPoly::eval_exact(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw Error("spectrum length mismatch");
  Rational total(0);
  for (const auto& [k, c] : terms_) {
    Rational m(0);
    for_each_orbit_point(k, nvars_, [&](const std::vector<int>& e) {
      Rational term(1);
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) term *= pow(x[i], e[i]);
      m += term;
    });
    total += c * m;
  }
  return total;
}

PolyEvaluator::PolyEvaluator(const SymPoly& p) : nvars_(p.nvars()) {
  for (const auto& [k, c] : p.terms()) {
    const double cd = c.get_d();
    max_degree_ = std::max(max_degree_, k[0]);
    for_each_orbit_point(k, nvars_, [&](const std::vector<int>& e) {
      coeffs_.push_back(cd);
      exponents_.insert(exponents_.end(), e.begin(), e.end());
    });
  }
}

cplx PolyEvaluator::operator()(std::span<const cplx> x) const {
  if (static_cast<int>(x.size()) != nvars_) throw Error("spectrum length mismatch");
  const int stride = max_degree_ + 1;
  // powers[i * stride + p] = x_i^p
  std::vector<cplx> powers(static_cast<std::size_t>(nvars_) * stride);
  for (int i = 0; i < nvars_; ++i) {
    powers[i * stride] = 1;
    for (int p = 1; p <= max_degree_; ++p) powers[i * stride + p] = powers[i * stride + p - 1] * x[i];
  }
  cplx total = 0;
  const int* e = exponents_.data();
  for (double c : coeffs_) {
    cplx term = c;
    for (int i = 0; i < nvars_; ++i) term *= powers[i * stride + e[i]];
    total += term;
    e += nvars_;
  }
  return total;
}

long kostka(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight()) return 0;
  const int rows = mu.length();
  // Fill values 1..len(nu) in turn; each value occupies a horizontal strip.
  std::function<long(std::vector<int>&, int)> fill = [&](std::vector<int>& shape, int value) -> long {
    if (value == nu.length()) return 1;
    const int need = nu[value];
    long count = 0;
    std::vector<int> next(shape);
    std::function<void(int, int)> place = [&](int row, int remaining) {
      if (row == rows) {
        if (remaining == 0) count += fill(next, value + 1);
        return;
      }
      const int upper = std::min(mu[row], row == 0 ? mu[0] : shape[row - 1]);
      const int room = upper - shape[row];
      for (int add = std::min(room, remaining); add >= 0; --add) {
        next[row] = shape[row] + add;
        place(row + 1, remaining - add);
      }
      next[row] = shape[row];
    };
    place(0, need);
    return count;
  };
  std::vector<int> shape(rows, 0);
  return fill(shape, 0);
}

namespace {

struct SchurKey {
  Partition mu;
  int nvars;
  friend bool operator<(const SchurKey& a, const SchurKey& b) {
    return a.nvars != b.nvars ? a.nvars < b.nvars : a.mu < b.mu;
  }
};

std::shared_mutex schur_mutex;
std::map<SchurKey, std::unique_ptr<const SymPoly>> schur_table;

SymPoly build_schur(const Partition& mu, int n) {
  SymPoly p(n);
  if (mu.length() > n) return p;
  for (const auto& nu : partitions_of(mu.weight(), n)) {
    if (!dominance_le(nu, mu)) continue;
    long k = kostka(mu, nu);
    if (k) p.add_term(nu, Rational(k));
  }
  return p;
}

}  // namespace

const SymPoly& schur_poly(const Partition& mu, int nvars) {
  SchurKey key{mu, nvars};
  {
    std::shared_lock lock(schur_mutex);
    auto it = schur_table.find(key);
    if (it != schur_table.end()) return *it->second;
  }
  auto built = std::make_unique<const SymPoly>(build_schur(mu, nvars));
  std::unique_lock lock(schur_mutex);
  auto [it, inserted] = schur_table.try_emplace(key, std::move(built));
  return *it->second;
}

cplx schur_eval(const Partition& mu, std::span<const cplx> x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw Error("empty spectrum");
  if (mu.length() > n) return 0.0;
  if (mu.empty()) return 1.0;
  double scale = 0, gap = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    scale = std::max(scale, std::abs(x[i]));
    for (int j = 0; j < i; ++j) gap = std::min(gap, std::abs(x[i] - x[j]));
  }
  if (n == 1) return std::pow(x[0], mu[0]);
  if (!(gap >= 1e-8 * scale) || scale == 0) {
    if (n > 8) throw Error("ill-conditioned bialternant");
    return schur_poly(mu, n).eval(x);
  }
  Eigen::MatrixXcd num(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) num(j, k) = std::pow(x[j], mu[k] + n - 1 - k);
  cplx vandermonde = 1;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) vandermonde *= x[j] - x[k];
  return num.partialPivLu().determinant() / vandermonde;
}

SymPoly power_sum(int k, int nvars) {
  if (k < 1) throw Error("power sum order must be positive");
  return SymPoly::mono(Partition{k}, nvars);
}

std::vector<std::pair<Partition, int>> hook_expansion(int k) {
  if (k < 1) throw Error("power sum order must be positive");
  std::vector<std::pair<Partition, int>> out;
  for (int l = 0; l < k; ++l) {
    std::vector<int> parts{k - l};
    parts.insert(parts.end(), l, 1);
    out.emplace_back(Partition(parts), l % 2 ? -1 : 1);
  }
  return out;
}

nlohmann::json partition_to_json(const Partition& p) { return nlohmann::json(p.parts()); }

Partition partition_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

nlohmann::json to_json(const SymPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : p.terms())
    terms.push_back({{"partition", partition_to_json(k)}, {"coeff", to_string(c)}});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

SymPoly sympoly_from_json(const nlohmann::json& j) {
  SymPoly p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(partition_from_json(t.at("partition")), parse_rational(t.at("coeff").get<std::string>()));
  return p;
}

}  // namespace zonal
