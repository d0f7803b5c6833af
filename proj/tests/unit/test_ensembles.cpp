#include "doctest.h"

#include <cmath>
#include <random>

#include "zonal/ensembles.hpp"
#include "zonal/error.hpp"
#include "zonal/mc.hpp"

using namespace zonal;

namespace {

bool within(const MCEstimate& e, double target, double k = 4) {
  return std::abs(e.mean.real() - target) <= k * e.se_re;
}

Matrix identity(int n) { return Matrix::Identity(n, n); }

}  // namespace

TEST_CASE("Philox known-answer vectors") {
  using B = std::array<std::uint32_t, 4>;
  CHECK(Philox::block({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("Philox streams") {
  Philox a(7, 3), b(7, 3), c(7, 4), d(8, 3);
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs_stream |= x != c();
    differs_seed |= x != d();
  }
  CHECK(differs_stream);
  CHECK(differs_seed);
}

TEST_CASE("Ginibre samplers") {
  const int n = 3;
  GinibreSampler real(Field::real, n, identity(n));
  const auto mean = mc_estimate(20000, 1, [&](Philox& rng) { return real(rng).sum().real() / (n * n); });
  CHECK(within(mean, 0));
  const auto tr = mc_estimate(20000, 2, [&](Philox& rng) {
    const Matrix x = real(rng);
    CHECK(x.imag().cwiseAbs().maxCoeff() == 0);
    return (x * x.adjoint()).trace().real() / (n * n);
  });
  CHECK(within(tr, 1));

  GinibreSampler quat(Field::quaternion, 1, identity(1));
  const auto qt = mc_estimate(20000, 3, [&](Philox& rng) {
    const Matrix x = quat(rng);
    return qtrace(x * x.adjoint()).real();
  });
  CHECK(within(qt, 2));

  GinibreSampler q3(Field::quaternion, 3, identity(3));
  Philox rng(5, 0);
  for (int i = 0; i < 50; ++i) {
    const Matrix x = q3(rng);
    CHECK(self_dual_defect(x) < 1e-14);
    CHECK(conjugate_pairing_error(eigenvalues(x)) < 1e-8);
  }
}

TEST_CASE("variance transport") {
  const double sigma = 2.5;
  for (Field f : {Field::real, Field::complex, Field::quaternion}) {
    Matrix s = identity(2);
    s(0, 0) = sigma;
    GinibreSampler g(f, 2, s);
    const auto e = mc_estimate(40000, 11, [&](Philox& rng) { return std::norm(g(rng)(0, 0)); });
    CHECK(within(e, sigma));
  }
  Matrix bad = identity(2);
  bad(1, 1) = -1;
  CHECK_THROWS_WITH_AS(GinibreSampler(Field::complex, 2, bad), "sigma not positive definite", Error);
}

TEST_CASE("Haar samplers") {
  Philox rng(9, 0);
  for (int i = 0; i < 20; ++i) {
    const Matrix o = sample_haar(Group::O, 3, rng);
    CHECK((o.adjoint() * o - identity(3)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(o.imag().cwiseAbs().maxCoeff() <= 1e-15);
    const Matrix u = sample_haar(Group::U, 4, rng);
    CHECK((u.adjoint() * u - identity(4)).cwiseAbs().maxCoeff() <= 1e-12);
    const Matrix s = sample_haar(Group::Sp, 3, rng);
    CHECK((s.adjoint() * s - identity(6)).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(self_dual_defect(s) <= 1e-12);
  }
  CHECK(within(mc_estimate(40000, 1, [](Philox& r) { return std::norm(sample_haar(Group::O, 3, r)(0, 0)); }),
               1.0 / 3));
  CHECK(within(mc_estimate(40000, 2, [](Philox& r) { return std::norm(sample_haar(Group::U, 2, r).trace()); }), 1));
}

TEST_CASE("Haar left invariance") {
  Philox vr(99, 0);
  const Matrix v = sample_haar(Group::U, 3, vr);
  const long n = 100000;
  for (int moment = 1; moment <= 2; ++moment) {
    auto stat = [&](const Matrix& m) {
      const cplx t = m.trace();
      return moment == 1 ? t : cplx(std::norm(t));
    };
    const auto plain = mc_estimate(n, 3, [&](Philox& r) { return stat(sample_haar(Group::U, 3, r)); });
    const auto moved = mc_estimate(n, 4, [&](Philox& r) { return stat(v * sample_haar(Group::U, 3, r)); });
    const double se = std::hypot(plain.se_re, moved.se_re);
    CHECK(std::abs(plain.mean.real() - moved.mean.real()) <= 4 * se);
  }
}

TEST_CASE("Wishart and Laguerre spectra") {
  CHECK(within(mc_estimate(20000, 1, [](Philox& r) { return sample_wishart(Field::complex, 3, 3, r).trace(); }), 9));
  Philox rng(3, 0);
  for (const auto& [alpha, a] : {std::pair{JackParam::real(), make_rational(-1, 2)},
                                 std::pair{JackParam::complex(), Rational(2)},
                                 std::pair{JackParam::quaternion(), Rational(1)}})
    for (int i = 0; i < 20; ++i)
      for (double t : laguerre_spectrum(alpha, 3, a, rng)) CHECK(t > 0);
  CHECK_THROWS_WITH_AS(laguerre_spectrum(JackParam::complex(), 2, make_rational(1, 2), rng), "no matrix model for a",
                       Error);
  CHECK_THROWS_WITH_AS(laguerre_spectrum(JackParam::real(), 2, Rational(-1), rng), "no matrix model for a", Error);
  CHECK_THROWS_WITH_AS(laguerre_spectrum(JackParam(Rational(3)), 2, Rational(0), rng), "no matrix model for a", Error);
  // a = -1/2 at M = N: weight (det W)^{-1/2} e^{-Tr W/2}, so E Tr W = N^2
  CHECK(within(mc_estimate(40000, 2,
                           [](Philox& r) {
                             double s = 0;
                             for (double t : laguerre_spectrum(JackParam::real(), 2, make_rational(-1, 2), r)) s += t;
                             return s;
                           }),
               4));
}

TEST_CASE("quaternion utilities") {
  for (int n = 1; n <= 3; ++n) CHECK(qtrace(identity(2 * n)) == cplx(n));
  const cplx z(0.3, -0.7), w(1.1, 0.4);
  Matrix m(2, 2);
  m << z, w, -std::conj(w), std::conj(z);
  const double x = 0.6;
  CHECK(qdet_charpoly(m, x) == doctest::Approx(1 - 2 * x * z.real() + x * x * (std::norm(z) + std::norm(w))));
  Matrix bad = m;
  bad(0, 1) += 0.1;
  CHECK_THROWS_WITH_AS(qdet_charpoly(bad, x), "not self-dual", Error);
  GinibreSampler q(Field::quaternion, 3, identity(3));
  Philox rng(4, 0);
  for (int i = 0; i < 1000; ++i) CHECK_NOTHROW(qdet_charpoly(q(rng), 0.7));
}

TEST_CASE("Monte-Carlo reduction") {
  auto f = [](Philox& r) {
    std::normal_distribution<double> g;
    const double a = g(r);
    return cplx(a * a, g(r));
  };
  const auto par = mc_estimate(50000, 17, f);
  const auto ser = mc_estimate_serial(50000, 17, f);
  CHECK(std::abs(par.mean - ser.mean) < 1e-12);
  CHECK(std::abs(par.se_re - ser.se_re) < 1e-12);
  CHECK(std::abs(par.se_im - ser.se_im) < 1e-12);
  CHECK(par.n_samples == 50000);
  const auto again = mc_estimate(50000, 17, f);
  CHECK(again.mean == par.mean);
  CHECK(again.se_re == par.se_re);
  const auto doubled = mc_estimate(100000, 17, f);
  CHECK(std::abs(doubled.se_re * std::sqrt(2.0) / par.se_re - 1) < 0.2);
  const auto h = mc_histogram(10000, 3, 2, [](Philox& r, std::vector<long long>& c) { ++c[r() & 1]; });
  CHECK(h.mean[0] + h.mean[1] == doctest::Approx(1));
  CHECK(std::abs(h.mean[0] - 0.5) <= 4 * h.std_error[0]);
}
