#include "zonal/partition.hpp"

#include <algorithm>
#include <functional>

#include "zonal/error.hpp"

namespace zonal {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    weight_ += parts_[i];
  }
}

std::vector<int> Partition::padded(int n) const {
  std::vector<int> v(parts_);
  if (static_cast<int>(v.size()) < n) v.resize(n, 0);
  return v;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

JackParam::JackParam(Rational alpha) : alpha_(std::move(alpha)) {
  alpha_.canonicalize();
  if (alpha_ <= 0) throw Error("alpha must be positive");
}

Partition conjugate(const Partition& kappa) {
  std::vector<int> out(kappa[0], 0);
  for (int part : kappa.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

Partition doubled(const Partition& kappa) {
  std::vector<int> out(kappa.parts());
  for (int& p : out) p *= 2;
  return Partition(std::move(out));
}

Partition squared(const Partition& kappa) {
  std::vector<int> out;
  out.reserve(2 * kappa.parts().size());
  for (int p : kappa.parts()) {
    out.push_back(p);
    out.push_back(p);
  }
  return Partition(std::move(out));
}

bool dominance_le(const Partition& mu, const Partition& kappa) {
  if (mu.weight() != kappa.weight()) throw Error("incomparable weights");
  int n = std::max(mu.length(), kappa.length());
  int smu = 0, skappa = 0;
  for (int l = 0; l < n; ++l) {
    smu += mu[l];
    skappa += kappa[l];
    if (smu > skappa) return false;
  }
  return true;
}

namespace {

void check_cell(const Partition& kappa, int i, int j) {
  if (i < 1 || i > kappa.length() || j < 1 || j > kappa[i - 1])
    throw Error("cell outside diagram");
}

// Column lengths, i.e. the conjugate's parts, indexed from column 1.
std::vector<int> column_lengths(const Partition& kappa) { return conjugate(kappa).parts(); }

}  // namespace

int arm(const Partition& kappa, int i, int j) {
  check_cell(kappa, i, j);
  return kappa[i - 1] - j;
}

int leg(const Partition& kappa, int i, int j) {
  check_cell(kappa, i, j);
  return conjugate(kappa)[j - 1] - i;
}

Rational hook_upper(const Partition& kappa, const JackParam& alpha) {
  const auto cols = column_lengths(kappa);
  Rational prod(1);
  for (int i = 1; i <= kappa.length(); ++i)
    for (int j = 1; j <= kappa[i - 1]; ++j)
      prod *= alpha.value() * (kappa[i - 1] - j + 1) + (cols[j - 1] - i);
  return prod;
}

Rational hook_lower(const Partition& kappa, const JackParam& alpha) {
  const auto cols = column_lengths(kappa);
  Rational prod(1);
  for (int i = 1; i <= kappa.length(); ++i)
    for (int j = 1; j <= kappa[i - 1]; ++j)
      prod *= alpha.value() * (kappa[i - 1] - j) + (cols[j - 1] - i) + 1;
  return prod;
}

Rational gen_pochhammer(const Rational& u, const Partition& kappa, const JackParam& alpha) {
  const Rational inv_alpha = Rational(1) / alpha.value();
  Rational prod(1);
  for (int j = 0; j < kappa.length(); ++j) {
    Rational base = u - inv_alpha * j;
    for (int i = 0; i < kappa[j]; ++i) {
      prod *= base + i;
      if (prod == 0) return prod;
    }
  }
  return prod;
}

Rational rising(const Rational& u, int n) {
  Rational prod(1);
  for (int i = 0; i < n; ++i) prod *= u + i;
  return prod;
}

Partition complement(const Partition& kappa, int s, int n) {
  if (kappa.length() > n || kappa[0] > s || s < 0) throw Error("complement undefined");
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = s - kappa[n - 1 - i];
  return Partition(std::move(out));
}

Partition box(int s, int n) { return Partition(std::vector<int>(s > 0 ? n : 0, s)); }

std::vector<Partition> partitions_of(int weight, int max_length, int max_part) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  if (max_part < 0 || max_part > weight) max_part = weight;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_length >= 0 && static_cast<int>(cur.size()) >= max_length) return;
    for (int p = std::min(remaining, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(weight, max_part);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int w = 0; w <= rows * cols; ++w) {
    auto shell = partitions_of(w, rows, cols);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

}  // namespace zonal
