#include "doctest.h"

#include <cmath>
#include <random>

#include "zonal/error.hpp"
#include "zonal/sympoly.hpp"

using namespace zonal;

TEST_CASE("monomial algebra") {
  auto m1 = SymPoly::mono(Partition{1}, 2);
  auto sq = m1 * m1;
  CHECK(sq.coefficient(Partition{2}) == 1);
  CHECK(sq.coefficient(Partition{1, 1}) == 2);
  CHECK(sq.terms().size() == 2);
  CHECK((m1 * Rational(0)).is_zero());
  CHECK(SymPoly::mono(Partition{1, 1}, 1).is_zero());
  CHECK_THROWS_AS(m1 + SymPoly::mono(Partition{1}, 3), Error);
}

TEST_CASE("numeric and exact evaluation") {
  std::vector<cplx> ones{1.0, 1.0};
  CHECK(SymPoly::mono(Partition{2}, 2).eval(ones).real() == doctest::Approx(2));
  CHECK(SymPoly::mono(Partition{1, 1}, 2).eval(ones).real() == doctest::Approx(1));
  std::vector<cplx> x{2.0, 3.0};
  CHECK(SymPoly::mono(Partition{2, 1}, 2).eval(x).real() == doctest::Approx(30));
  std::vector<Rational> xr{Rational(2), Rational(3)};
  CHECK(SymPoly::mono(Partition{2, 1}, 2).eval_exact(xr) == 30);
  std::vector<cplx> bad{1.0};
  CHECK_THROWS_WITH_AS(SymPoly::mono(Partition{1}, 2).eval(bad), "spectrum length mismatch", Error);
}

TEST_CASE("Schur polynomials") {
  std::vector<cplx> x{2.0, 3.0};
  CHECK(schur_eval(Partition{1}, x).real() == doctest::Approx(5));
  CHECK(schur_eval(Partition{1, 1}, x).real() == doctest::Approx(6));
  std::vector<cplx> ones{1.0, 1.0, 1.0};
  CHECK(schur_eval(Partition{2, 1}, ones).real() == doctest::Approx(8));

  auto s2 = schur_poly(Partition{2}, 3);
  CHECK(s2 == SymPoly::mono(Partition{2}, 3) + SymPoly::mono(Partition{1, 1}, 3));
  CHECK(schur_poly(Partition{1, 1, 1}, 3) == SymPoly::mono(Partition{1, 1, 1}, 3));
  CHECK(schur_poly(Partition{2, 1}, 3) ==
        SymPoly::mono(Partition{2, 1}, 3) + SymPoly::mono(Partition{1, 1, 1}, 3) * Rational(2));
}

TEST_CASE("bialternant agrees with expansion") {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> nd;
  for (int n = 1; n <= 6; ++n)
    for (int w = 0; w <= 6; ++w)
      for (const auto& mu : partitions_of(w, n)) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = cplx(nd(gen), nd(gen));
        const cplx a = schur_eval(mu, x), b = schur_poly(mu, n).eval(x);
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
      }
}

TEST_CASE("power sums and hooks") {
  auto h1 = hook_expansion(1);
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].first == Partition{1});
  auto h2 = hook_expansion(2);
  CHECK(h2[0] == std::make_pair(Partition{2}, 1));
  CHECK(h2[1] == std::make_pair(Partition{1, 1}, -1));
  std::vector<cplx> x{1.0, 2.0};
  cplx total = 0;
  for (auto& [mu, sign] : hook_expansion(3)) total += double(sign) * schur_eval(mu, x);
  CHECK(total.real() == doctest::Approx(9));

  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= 8; ++k) {
      std::vector<cplx> y(n);
      cplx direct = 0;
      for (auto& v : y) {
        v = cplx(nd(gen), nd(gen));
        direct += std::pow(v, k);
      }
      CHECK(std::abs(power_sum(k, n).eval(y) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
      if (n <= 5) {
        SymPoly hooks(n);
        for (auto& [mu, sign] : hook_expansion(k)) hooks += schur_poly(mu, n) * Rational(sign);
        CHECK(hooks == power_sum(k, n));
      }
    }
}

TEST_CASE("evaluator matches eval") {
  auto p = schur_poly(Partition{3, 1}, 3) * Rational(5, 7);
  PolyEvaluator ev(p);
  std::vector<cplx> x{cplx(0.3, 1), cplx(-2, 0.1), cplx(0.5, 0)};
  CHECK(std::abs(ev(x) - p.eval(x)) < 1e-12);
}

TEST_CASE("JSON round trip") {
  auto p = schur_poly(Partition{2, 1}, 3) * Rational(-2, 3);
  auto j = to_json(p);
  CHECK(j["nvars"] == 3);
  CHECK(sympoly_from_json(j) == p);
  CHECK(partition_to_json(Partition{3, 1}).dump() == "[3,1]");
}
