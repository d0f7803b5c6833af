#include "zonal/mc.hpp"

namespace zonal {

void Moments::add(cplx v) {
  ++n;
  const double dr = v.real() - mean_re, di = v.imag() - mean_im;
  mean_re += dr / n;
  mean_im += di / n;
  m2_re += dr * (v.real() - mean_re);
  m2_im += di * (v.imag() - mean_im);
}

void Moments::merge(const Moments& o) {
  if (o.n == 0) return;
  if (n == 0) {
    *this = o;
    return;
  }
  const long total = n + o.n;
  const double dr = o.mean_re - mean_re, di = o.mean_im - mean_im;
  const double w = static_cast<double>(n) * o.n / total;
  mean_re += dr * o.n / total;
  mean_im += di * o.n / total;
  m2_re += o.m2_re + dr * dr * w;
  m2_im += o.m2_im + di * di * w;
  n = total;
}

MCEstimate Moments::estimate(std::uint64_t seed) const {
  MCEstimate e;
  e.mean = cplx(mean_re, mean_im);
  e.n_samples = n;
  e.seed = seed;
  if (n > 1) {
    e.se_re = std::sqrt(m2_re / (n - 1) / n);
    e.se_im = std::sqrt(m2_im / (n - 1) / n);
  }
  return e;
}

}  // namespace zonal
