#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"

#include "zonal/partition.hpp"
#include "zonal/rational.hpp"

namespace zonal {

using cplx = std::complex<double>;

/// Eigenvalues of a matrix argument. Entries must be finite.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<cplx> values);
  static Spectrum real(const std::vector<double>& values);

  std::span<const cplx> values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  const cplx& operator[](std::size_t i) const { return values_[i]; }

  Spectrum scaled(cplx factor) const;

 private:
  std::vector<cplx> values_;
};

/// Symmetric polynomial in `nvars` variables, stored in the monomial basis
/// m_kappa. Zero coefficients are never stored, so equality is map equality.
class SymPoly {
 public:
  explicit SymPoly(int nvars = 1);

  /// m_kappa in N variables; the zero polynomial when length(kappa) > N.
  static SymPoly mono(const Partition& kappa, int nvars);
  static SymPoly constant(const Rational& c, int nvars);

  int nvars() const { return nvars_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Partition& kappa) const;

  /// Adds c * m_kappa (dropped when length(kappa) > nvars).
  void add_term(const Partition& kappa, const Rational& c);

  SymPoly& operator+=(const SymPoly& other);
  SymPoly& operator-=(const SymPoly& other);
  SymPoly& operator*=(const Rational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) { return multiply(a, b); }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  static SymPoly multiply(const SymPoly& a, const SymPoly& b);

  cplx eval(std::span<const cplx> x) const;
  cplx eval(const Spectrum& x) const { return eval(x.values()); }
  Rational eval_exact(std::span<const Rational> x) const;

 private:
  int nvars_;
  std::map<Partition, Rational> terms_;
};

/// Calls f(exponents) for every distinct permutation of kappa padded to n.
template <class F>
void for_each_orbit_point(const Partition& kappa, int n, F&& f);

/// Flattened monomial list of a SymPoly with double coefficients, for
/// repeated numeric evaluation (Monte-Carlo inner loops).
class PolyEvaluator {
 public:
  PolyEvaluator() = default;
  explicit PolyEvaluator(const SymPoly& p);

  int nvars() const { return nvars_; }
  cplx operator()(std::span<const cplx> x) const;

 private:
  int nvars_ = 0;
  int max_degree_ = 0;
  std::vector<double> coeffs_;
  std::vector<int> exponents_;  // row-major, nvars_ per monomial
};

/// Exact Schur polynomial s_mu in N variables (Kostka-number expansion),
/// memoized process-wide.
const SymPoly& schur_poly(const Partition& mu, int nvars);

/// s_mu(x) by the bialternant formula, falling back to the exact monomial
/// expansion when the spectrum is nearly degenerate.
cplx schur_eval(const Partition& mu, std::span<const cplx> x);
inline cplx schur_eval(const Partition& mu, const Spectrum& x) { return schur_eval(mu, x.values()); }

/// Number of semistandard tableaux of shape mu and content nu.
long kostka(const Partition& mu, const Partition& nu);

/// p_k = m_(k) in N variables.
SymPoly power_sum(int k, int nvars);

/// p_k = sum_l (-1)^l s_(k-l, 1^l): the hooks with their signs, l = 0..k-1.
std::vector<std::pair<Partition, int>> hook_expansion(int k);

/// m_kappa evaluated at x (numeric, orbit sum).
cplx monomial_eval(const Partition& kappa, std::span<const cplx> x);

nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SymPoly& p);
SymPoly sympoly_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------

template <class F>
void for_each_orbit_point(const Partition& kappa, int n, F&& f) {
  if (kappa.length() > n) return;
  std::vector<int> e = kappa.padded(n);
  std::sort(e.begin(), e.end());
  do {
    f(static_cast<const std::vector<int>&>(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace zonal
