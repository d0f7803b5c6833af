#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "zonal/rng.hpp"

namespace zonal {

using cplx = std::complex<double>;

struct MCEstimate {
  cplx mean;
  /// Standard errors of the real and imaginary parts.
  double se_re = 0;
  double se_im = 0;
  long n_samples = 0;
  std::uint64_t seed = 0;

  double std_error() const { return std::hypot(se_re, se_im); }
};

/// Running mean and centred second moment of real and imaginary parts.
struct Moments {
  long n = 0;
  double mean_re = 0, mean_im = 0, m2_re = 0, m2_im = 0;

  void add(cplx v);
  void merge(const Moments& other);
  MCEstimate estimate(std::uint64_t seed) const;
};

/// Samples per reduction chunk; fixed so results do not depend on the worker count.
inline constexpr long kChunk = 4096;

/// Mean of f(rng) over samples i = 0..n-1, each drawing from Philox(seed, i).
/// Chunks run under OpenMP and are merged in index order.
template <class F>
MCEstimate mc_estimate(long n, std::uint64_t seed, F&& f) {
  const long chunks = (n + kChunk - 1) / kChunk;
  std::vector<Moments> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < chunks; ++c) {
    Moments m;
    const long end = std::min(n, (c + 1) * kChunk);
    for (long i = c * kChunk; i < end; ++i) {
      Philox rng(seed, static_cast<std::uint64_t>(i));
      m.add(cplx(f(rng)));
    }
    partial[static_cast<std::size_t>(c)] = m;
  }
  Moments total;
  for (const auto& m : partial) total.merge(m);
  return total.estimate(seed);
}

/// Single-threaded reference: one running accumulator over all samples.
template <class F>
MCEstimate mc_estimate_serial(long n, std::uint64_t seed, F&& f) {
  Moments m;
  for (long i = 0; i < n; ++i) {
    Philox rng(seed, static_cast<std::uint64_t>(i));
    m.add(cplx(f(rng)));
  }
  return m.estimate(seed);
}

/// Per-bin counts summed over samples, with sums of squares for per-bin
/// standard errors. f(rng, counts) adds one sample's counts to a zeroed vector.
struct Histogram {
  std::vector<double> mean;
  std::vector<double> std_error;
  long n_samples = 0;
};

template <class F>
Histogram mc_histogram(long n, std::uint64_t seed, int bins, F&& f) {
  const long chunks = (n + kChunk - 1) / kChunk;
  const auto nb = static_cast<std::size_t>(bins);
  std::vector<std::vector<long long>> sum(static_cast<std::size_t>(chunks)), sq(sum.size());
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < chunks; ++c) {
    std::vector<long long> s(nb, 0), q(nb, 0);
    std::vector<long long> counts(nb);
    const long end = std::min(n, (c + 1) * kChunk);
    for (long i = c * kChunk; i < end; ++i) {
      Philox rng(seed, static_cast<std::uint64_t>(i));
      std::fill(counts.begin(), counts.end(), 0);
      f(rng, counts);
      for (std::size_t b = 0; b < nb; ++b) s[b] += counts[b], q[b] += counts[b] * counts[b];
    }
    sum[static_cast<std::size_t>(c)] = std::move(s);
    sq[static_cast<std::size_t>(c)] = std::move(q);
  }
  std::vector<long long> s(nb, 0), q(nb, 0);
  for (std::size_t c = 0; c < sum.size(); ++c)
    for (std::size_t b = 0; b < nb; ++b) s[b] += sum[c][b], q[b] += sq[c][b];
  Histogram h;
  h.n_samples = n;
  for (std::size_t b = 0; b < nb; ++b) {
    const double mean = static_cast<double>(s[b]) / n;
    const double var = n > 1 ? (static_cast<double>(q[b]) - n * mean * mean) / (n - 1) : 0.0;
    h.mean.push_back(mean);
    h.std_error.push_back(std::sqrt(std::max(var, 0.0) / n));
  }
  return h;
}

}  // namespace zonal
