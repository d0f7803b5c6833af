#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "zonal/rational.hpp"

namespace zonal {

/// A weakly decreasing sequence of positive integers. Zeros are stripped on
/// construction, so every partition has exactly one representation and can be
/// used directly as a map key. The default ordering is lexicographic on the
/// parts, which is a linear extension of dominance order.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); 0 beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Parts padded with zeros to length n (n >= length()).
  std::vector<int> padded(int n) const;

  std::string to_string() const;  // "(3,1)", "()"

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Jack parameter alpha, a strictly positive rational.
class JackParam {
 public:
  explicit JackParam(Rational alpha);

  static JackParam real() { return JackParam(Rational(2)); }
  static JackParam complex() { return JackParam(Rational(1)); }
  static JackParam quaternion() { return JackParam(Rational(1, 2)); }

  const Rational& value() const { return alpha_; }
  JackParam reciprocal() const { return JackParam(Rational(1) / alpha_); }

  friend bool operator==(const JackParam& a, const JackParam& b) { return a.alpha_ == b.alpha_; }
  friend bool operator<(const JackParam& a, const JackParam& b) { return a.alpha_ < b.alpha_; }

 private:
  Rational alpha_;
};

Partition conjugate(const Partition& kappa);
/// (k1, k2, ...) -> (2k1, 2k2, ...)
Partition doubled(const Partition& kappa);
/// (k1, k2, ...) -> (k1, k1, k2, k2, ...)
Partition squared(const Partition& kappa);

/// mu <= kappa in dominance order. Throws "incomparable weights" if |mu| != |kappa|.
bool dominance_le(const Partition& mu, const Partition& kappa);

// Cells are 1-based (row i, column j) with 1 <= j <= kappa_i.
int arm(const Partition& kappa, int i, int j);
int leg(const Partition& kappa, int i, int j);

/// d'_kappa = prod over cells of (alpha (arm + 1) + leg).
Rational hook_upper(const Partition& kappa, const JackParam& alpha);
/// h_kappa = prod over cells of (alpha arm + leg + 1).
Rational hook_lower(const Partition& kappa, const JackParam& alpha);

/// Generalized Pochhammer symbol [u]_kappa^(alpha) as the finite product
/// prod_j prod_{i < kappa_j} (u - (j-1)/alpha + i).
Rational gen_pochhammer(const Rational& u, const Partition& kappa, const JackParam& alpha);

/// Classical rising factorial (u)_n.
Rational rising(const Rational& u, int n);

/// kappa^s = (s - kappa_N, ..., s - kappa_1), trailing zeros removed.
/// Throws "complement undefined" unless length <= n and kappa_1 <= s.
Partition complement(const Partition& kappa, int s, int n);

/// The rectangular partition (s^n).
Partition box(int s, int n);

/// All partitions of `weight` with at most `max_length` parts and parts at
/// most `max_part` (negative = unbounded), in decreasing lexicographic order.
std::vector<Partition> partitions_of(int weight, int max_length = -1, int max_part = -1);

/// All partitions fitting in a rows x cols box (length <= rows, parts <= cols),
/// the empty partition first, ordered by weight then decreasing lex.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace zonal
