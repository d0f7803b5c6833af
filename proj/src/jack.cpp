#include "zonal/jack.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "zonal/error.hpp"

namespace zonal {

namespace {

bool same_multiset(std::vector<int> v, const std::vector<int>& sorted_desc) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v == sorted_desc;
}

}  // namespace

Rational jack_operator_coefficient(const std::vector<int>& target, const Partition& source,
                                   const JackParam& alpha, int nvars) {
  const int n = nvars;
  if (static_cast<int>(target.size()) != n) throw Error("exponent vector length mismatch");
  if (source.length() > n) return Rational(0);
  const std::vector<int> src = source.padded(n);
  const Rational inv_alpha = Rational(1) / alpha.value();

  Rational result(0);
  if (same_multiset(target, src)) {
    long sq = 0, deg = 0;
    for (int e : target) {
      sq += static_cast<long>(e) * e;
      deg += e;
    }
    result += Rational(sq) + Rational(n - 1) * inv_alpha * deg;
  }

  // The pair operator x_j x_k/(x_j - x_k)(d_j - d_k) sends the pair orbit
  // {x_j^a x_k^b, x_j^b x_k^a}, a > b, to
  //   (a - b) sum_{b < p < a} x_j^p x_k^{a+b-p} - b (x_j^a x_k^b + x_j^b x_k^a)
  // and x_j^a x_k^a to -a x_j^a x_k^a.
  long cross = 0;
  std::vector<int> candidate(n);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const int p = target[j], q = target[k], s = p + q;
      for (int b = 0; 2 * b <= s; ++b) {
        const int a = s - b;
        candidate = target;
        candidate[j] = a;
        candidate[k] = b;
        if (!same_multiset(candidate, src)) continue;
        if (a > b) {
          if (b < p && p < a) cross += a - b;
          if ((p == a && q == b) || (p == b && q == a)) cross -= b;
        } else if (p == a) {
          cross -= a;
        }
      }
    }
  }
  result += Rational(2) * inv_alpha * cross;
  return result;
}

Rational jack_eigenvalue_closed(const Partition& kappa, const JackParam& alpha, int nvars) {
  Rational e(0);
  for (int j = 1; j <= kappa.length(); ++j) {
    const int kj = kappa[j - 1];
    e += Rational(kj * kj) + Rational(kj * (nvars + 1 - 2 * j)) / alpha.value();
  }
  return e;
}

JackOperator::JackOperator(int weight, const JackParam& alpha, int nvars)
    : basis_(partitions_of(weight, nvars)) {
  const int size = static_cast<int>(basis_.size());
  rows_.resize(size);
  diagonal_.resize(size);
  for (int i = 0; i < size; ++i) {
    const auto target = basis_[i].padded(nvars);
    diagonal_[i] = jack_operator_coefficient(target, basis_[i], alpha, nvars);
    for (int c = 0; c < i; ++c) {
      if (!dominance_le(basis_[i], basis_[c])) continue;
      Rational v = jack_operator_coefficient(target, basis_[c], alpha, nvars);
      if (v != 0) rows_[i].emplace_back(c, std::move(v));
    }
  }
}

int JackOperator::index_of(const Partition& p) const {
  // basis_ is sorted in decreasing lexicographic order.
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p, [](const Partition& a, const Partition& b) {
    return b < a;
  });
  if (it == basis_.end() || *it != p) throw Error("partition not in operator basis");
  return static_cast<int>(it - basis_.begin());
}

Rational JackOperator::entry(const Partition& mu, const Partition& nu) const {
  const int i = index_of(mu), c = index_of(nu);
  if (i == c) return diagonal_[i];
  for (const auto& [col, v] : rows_[i])
    if (col == c) return v;
  return Rational(0);
}

Rational JackOperator::eigenvalue(const Partition& mu) const { return diagonal_[index_of(mu)]; }

namespace {

struct OperatorKey {
  int weight;
  Rational alpha;
  int nvars;
  friend bool operator<(const OperatorKey& a, const OperatorKey& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.nvars != b.nvars) return a.nvars < b.nvars;
    return a.alpha < b.alpha;
  }
};

std::shared_mutex operator_mutex;
std::map<OperatorKey, std::shared_ptr<const JackOperator>> operator_table;

std::shared_ptr<const JackOperator> shared_operator(int weight, const JackParam& alpha, int nvars) {
  OperatorKey key{weight, alpha.value(), nvars};
  {
    std::shared_lock lock(operator_mutex);
    auto it = operator_table.find(key);
    if (it != operator_table.end()) return it->second;
  }
  auto op = std::make_shared<const JackOperator>(weight, alpha, nvars);
  std::unique_lock lock(operator_mutex);
  return operator_table.try_emplace(key, std::move(op)).first->second;
}

struct PolyKey {
  Partition kappa;
  Rational alpha;
  int nvars;
  friend bool operator<(const PolyKey& a, const PolyKey& b) {
    if (a.nvars != b.nvars) return a.nvars < b.nvars;
    if (a.kappa != b.kappa) return a.kappa < b.kappa;
    return a.alpha < b.alpha;
  }
};

}  // namespace

SymPoly compute_jack_poly(const Partition& kappa, const JackParam& alpha, int nvars) {
  if (nvars < 1) throw Error("nvars must be positive");
  if (kappa.length() > nvars) throw Error("partition longer than nvars");
  SymPoly out(nvars);
  if (kappa.empty()) return SymPoly::constant(Rational(1), nvars);

  const auto op = shared_operator(kappa.weight(), alpha, nvars);
  const auto& basis = op->basis();
  const int top = static_cast<int>(std::find(basis.begin(), basis.end(), kappa) - basis.begin());
  const Rational e_top = op->eigenvalue(kappa);

  // Private copy of the rows is not needed: walk basis below kappa in
  // dominance-compatible order and back-substitute.
  std::vector<Rational> coeff(basis.size());
  std::vector<bool> live(basis.size(), false);
  coeff[top] = 1;
  live[top] = true;
  for (int i = top + 1; i < static_cast<int>(basis.size()); ++i) {
    const Partition& mu = basis[i];
    if (!dominance_le(mu, kappa)) continue;
    Rational sum(0);
    for (int c = top; c < i; ++c) {
      if (!live[c]) continue;
      Rational d = op->entry(mu, basis[c]);
      if (d != 0) sum += d * coeff[c];
    }
    const Rational gap = e_top - op->eigenvalue(mu);
    if (gap == 0) throw Error("degenerate eigenvalue");
    coeff[i] = sum / gap;
    live[i] = coeff[i] != 0;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (live[i]) out.add_term(basis[i], coeff[i]);
  return out;
}

struct JackTable::Impl {
  mutable std::shared_mutex mutex;
  std::map<PolyKey, std::unique_ptr<const SymPoly>> table;
  std::optional<std::filesystem::path> dir;
  long computed = 0;
};

JackTable::JackTable() : impl_(std::make_unique<Impl>()) {}

JackTable& JackTable::instance() {
  static JackTable table;
  return table;
}

void JackTable::set_cache_dir(std::optional<std::filesystem::path> dir) {
  std::unique_lock lock(impl_->mutex);
  impl_->dir = std::move(dir);
}

std::optional<std::filesystem::path> JackTable::cache_dir() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->dir;
}

long JackTable::computed_count() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->computed;
}

void JackTable::clear_memory() {
  std::unique_lock lock(impl_->mutex);
  impl_->table.clear();
}

std::filesystem::path JackTable::cache_file(const Partition& kappa, const JackParam& alpha, int nvars) const {
  auto dir = cache_dir();
  if (!dir) throw Error("no jack cache directory");
  std::ostringstream name;
  name << "jack_v" << kJackCacheVersion << "_k";
  for (std::size_t i = 0; i < kappa.parts().size(); ++i) name << (i ? "-" : "") << kappa.parts()[i];
  name << "_a" << alpha.value().get_num().get_str() << "over" << alpha.value().get_den().get_str() << "_n"
       << nvars << ".json";
  return *dir / name.str();
}

namespace {

std::optional<SymPoly> load_cached(const std::filesystem::path& file, const Partition& kappa,
                                   const JackParam& alpha, int nvars) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kJackCacheVersion) return std::nullopt;
    if (partition_from_json(j.at("kappa")) != kappa) return std::nullopt;
    if (parse_rational(j.at("alpha").get<std::string>()) != alpha.value()) return std::nullopt;
    if (j.at("nvars").get<int>() != nvars) return std::nullopt;
    return sympoly_from_json(j.at("poly"));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached(const std::filesystem::path& file, const Partition& kappa, const JackParam& alpha, int nvars,
                  const SymPoly& p) {
  nlohmann::json j = {{"version", kJackCacheVersion},
                      {"kappa", partition_to_json(kappa)},
                      {"alpha", to_string(alpha.value())},
                      {"nvars", nvars},
                      {"poly", to_json(p)}};
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  // Write-then-rename so concurrent writers never expose a torn file.
  auto tmp = file;
  tmp += ".tmp" + std::to_string(std::hash<std::string>{}(file.string() + std::to_string(std::rand())));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

const SymPoly& JackTable::get(const Partition& kappa, const JackParam& alpha, int nvars) {
  PolyKey key{kappa, alpha.value(), nvars};
  std::optional<std::filesystem::path> dir;
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->table.find(key);
    if (it != impl_->table.end()) return *it->second;
    dir = impl_->dir;
  }
  std::optional<SymPoly> poly;
  bool computed = false;
  if (dir) poly = load_cached(cache_file(kappa, alpha, nvars), kappa, alpha, nvars);
  if (!poly) {
    poly = compute_jack_poly(kappa, alpha, nvars);
    computed = true;
    if (dir) store_cached(cache_file(kappa, alpha, nvars), kappa, alpha, nvars, *poly);
  }
  std::unique_lock lock(impl_->mutex);
  if (computed) ++impl_->computed;
  auto [it, inserted] = impl_->table.try_emplace(key, std::make_unique<const SymPoly>(std::move(*poly)));
  return *it->second;
}

const SymPoly& jack_poly(const Partition& kappa, const JackParam& alpha, int nvars) {
  return JackTable::instance().get(kappa, alpha, nvars);
}

Rational jack_C_factor(const Partition& kappa, const JackParam& alpha) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(kappa.weight()));
  return pow(alpha.value(), kappa.weight()) * Rational(fact) / hook_upper(kappa, alpha);
}

SymPoly jack_C_poly(const Partition& kappa, const JackParam& alpha, int nvars) {
  return jack_poly(kappa, alpha, nvars) * jack_C_factor(kappa, alpha);
}

namespace {

std::shared_mutex evaluator_mutex;
std::map<PolyKey, std::unique_ptr<const PolyEvaluator>> evaluator_table;

}  // namespace

const PolyEvaluator& jack_C_evaluator(const Partition& kappa, const JackParam& alpha, int nvars) {
  PolyKey key{kappa, alpha.value(), nvars};
  {
    std::shared_lock lock(evaluator_mutex);
    auto it = evaluator_table.find(key);
    if (it != evaluator_table.end()) return *it->second;
  }
  auto ev = std::make_unique<const PolyEvaluator>(jack_C_poly(kappa, alpha, nvars));
  std::unique_lock lock(evaluator_mutex);
  return *evaluator_table.try_emplace(key, std::move(ev)).first->second;
}

cplx jack_C_eval(const Partition& kappa, const JackParam& alpha, std::span<const cplx> x) {
  const int n = static_cast<int>(x.size());
  if (kappa.length() > n) return 0.0;
  return jack_C_evaluator(kappa, alpha, n)(x);
}

Rational jack_C_exact(const Partition& kappa, const JackParam& alpha, std::span<const Rational> x) {
  const int n = static_cast<int>(x.size());
  if (kappa.length() > n) return Rational(0);
  return jack_poly(kappa, alpha, n).eval_exact(x) * jack_C_factor(kappa, alpha);
}

Rational principal(const Partition& kappa, const JackParam& alpha, int nvars) {
  if (kappa.length() > nvars) return Rational(0);
  return pow(alpha.value(), kappa.weight()) * gen_pochhammer(Rational(nvars) / alpha.value(), kappa, alpha) /
         hook_lower(kappa, alpha);
}

Rational principal_C(const Partition& kappa, const JackParam& alpha, int nvars) {
  return principal(kappa, alpha, nvars) * jack_C_factor(kappa, alpha);
}

cplx matrix_C(const Partition& kappa, const JackParam& alpha, const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw Error("matrix must be square");
  if (m.rows() < kappa.length()) throw Error("matrix dimension below partition length");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue routine failed");
  const Eigen::VectorXcd ev = solver.eigenvalues();
  std::vector<cplx> values(ev.data(), ev.data() + ev.size());
  return jack_C_eval(kappa, alpha, values);
}

}  // namespace zonal
