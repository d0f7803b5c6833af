#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "zonal/partition.hpp"
#include "zonal/sympoly.hpp"

namespace zonal {

/// Matrix of the Jack eigenoperator
///   sum_j (x_j d_j)^2 + (N-1)/alpha sum_j x_j d_j
///     + 2/alpha sum_{j<k} x_j x_k/(x_j - x_k) (d_j - d_k)
/// on the monomial basis {m_mu : |mu| = weight, length(mu) <= N}. The matrix
/// is dominance-triangular: entry(mu, nu) != 0 only if mu <= nu.
class JackOperator {
 public:
  JackOperator(int weight, const JackParam& alpha, int nvars);

  /// Basis in decreasing lexicographic order (dominance-compatible).
  const std::vector<Partition>& basis() const { return basis_; }
  /// Coefficient of m_mu in D m_nu.
  Rational entry(const Partition& mu, const Partition& nu) const;
  /// Diagonal entry e(mu).
  Rational eigenvalue(const Partition& mu) const;

 private:
  int index_of(const Partition& p) const;

  std::vector<Partition> basis_;
  // rows_[i] = nonzero (column index, value) pairs of row i, columns < i
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
  std::vector<Rational> diagonal_;
};

/// Coefficient of x^target in D m_source, computed on one representative
/// monomial (target is an exponent vector of length N).
Rational jack_operator_coefficient(const std::vector<int>& target, const Partition& source,
                                   const JackParam& alpha, int nvars);

/// Closed form sum_j kappa_j^2 + (1/alpha) sum_j kappa_j (N + 1 - 2j).
Rational jack_eigenvalue_closed(const Partition& kappa, const JackParam& alpha, int nvars);

/// Monic Jack polynomial P_kappa^(alpha) in N variables (memoized, optional
/// on-disk cache).
const SymPoly& jack_poly(const Partition& kappa, const JackParam& alpha, int nvars);

/// alpha^|kappa| |kappa|! / d'_kappa, the factor taking P to C.
Rational jack_C_factor(const Partition& kappa, const JackParam& alpha);
SymPoly jack_C_poly(const Partition& kappa, const JackParam& alpha, int nvars);
cplx jack_C_eval(const Partition& kappa, const JackParam& alpha, std::span<const cplx> x);
inline cplx jack_C_eval(const Partition& kappa, const JackParam& alpha, const Spectrum& x) {
  return jack_C_eval(kappa, alpha, x.values());
}
Rational jack_C_exact(const Partition& kappa, const JackParam& alpha, std::span<const Rational> x);

/// P_kappa^(alpha)((1)^N) = alpha^|kappa| [N/alpha]_kappa / h_kappa.
Rational principal(const Partition& kappa, const JackParam& alpha, int nvars);
/// C_kappa^(alpha)((1)^N).
Rational principal_C(const Partition& kappa, const JackParam& alpha, int nvars);

/// C_kappa^(alpha) of a square matrix argument, i.e. of its eigenvalues.
cplx matrix_C(const Partition& kappa, const JackParam& alpha, const Eigen::MatrixXcd& m);

/// Cached numeric evaluator of C_kappa^(alpha) in N variables.
const PolyEvaluator& jack_C_evaluator(const Partition& kappa, const JackParam& alpha, int nvars);

/// Process-wide table of Jack expansions. Concurrent readers and idempotent
/// concurrent insertion are allowed. When a cache directory is set, entries
/// are also read from / written to one JSON file per (kappa, alpha, N).
class JackTable {
 public:
  static JackTable& instance();

  const SymPoly& get(const Partition& kappa, const JackParam& alpha, int nvars);
  void set_cache_dir(std::optional<std::filesystem::path> dir);
  std::optional<std::filesystem::path> cache_dir() const;
  std::filesystem::path cache_file(const Partition& kappa, const JackParam& alpha, int nvars) const;

  /// Number of expansions computed from scratch (not loaded) since start-up.
  long computed_count() const;
  void clear_memory();

 private:
  JackTable();
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

inline constexpr int kJackCacheVersion = 1;

/// Build P_kappa^(alpha) directly (no memoization).
SymPoly compute_jack_poly(const Partition& kappa, const JackParam& alpha, int nvars);

}  // namespace zonal
