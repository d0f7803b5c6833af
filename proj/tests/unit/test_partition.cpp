#include "doctest.h"

#include "zonal/error.hpp"
#include "zonal/partition.hpp"

using namespace zonal;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Direct hook products over cells with arm/leg counted from the diagram.
Rational brute_hook(const Partition& k, const Rational& a, bool upper) {
  Rational prod(1);
  for (int i = 1; i <= k.length(); ++i)
    for (int j = 1; j <= k[i - 1]; ++j) {
      int arm_len = k[i - 1] - j, leg_len = 0;
      for (int r = i + 1; r <= k.length(); ++r)
        if (k[r - 1] >= j) ++leg_len;
      prod *= upper ? Rational(a * (arm_len + 1) + leg_len) : Rational(a * arm_len + leg_len + 1);
    }
  return prod;
}

std::vector<Partition> all_up_to(int w) {
  std::vector<Partition> out;
  for (int k = 0; k <= w; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("partition construction and canonical form") {
  Partition p{3, 1, 0, 0};
  CHECK(p.parts() == std::vector<int>{3, 1});
  CHECK(p.weight() == 4);
  CHECK(p.length() == 2);
  CHECK(p.to_string() == "(3,1)");
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, -1}), Error);
  CHECK(Partition().empty());
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (auto& k : all_up_to(8)) CHECK(conjugate(conjugate(k)) == k);
}

TEST_CASE("double and square") {
  CHECK(doubled(Partition{2, 1}) == Partition{4, 2});
  CHECK(squared(Partition{2, 1}) == Partition{2, 2, 1, 1});
  CHECK(doubled(Partition{}) == Partition{});
}

TEST_CASE("dominance") {
  CHECK(dominance_le(Partition{1, 1, 1}, Partition{3}));
  CHECK_FALSE(dominance_le(Partition{3}, Partition{1, 1, 1}));
  CHECK(dominance_le(Partition{2, 2}, Partition{3, 1}));
  const bool both = dominance_le(Partition{3, 3}, Partition{4, 1, 1}) || dominance_le(Partition{4, 1, 1}, Partition{3, 3});
  CHECK_FALSE(both);
  CHECK_THROWS_WITH_AS(dominance_le(Partition{2}, Partition{1}), "incomparable weights", Error);
}

TEST_CASE("arm and leg") {
  CHECK(arm(Partition{3, 1}, 1, 1) == 2);
  CHECK(leg(Partition{3, 1}, 1, 1) == 1);
  CHECK(arm(Partition{3, 1}, 1, 3) == 0);
  CHECK(leg(Partition{3, 1}, 1, 3) == 0);
  CHECK(arm(Partition{2, 2}, 1, 1) == 1);
  CHECK(leg(Partition{2, 2}, 1, 1) == 1);
  CHECK_THROWS_AS(arm(Partition{3, 1}, 2, 2), Error);
  CHECK_THROWS_AS(leg(Partition{3, 1}, 3, 1), Error);
}

TEST_CASE("hook products") {
  for (const auto& a : {q(1, 2), q(1), q(2), q(3, 2)}) {
    CHECK(hook_upper(Partition{1}, JackParam(a)) == a);
    CHECK(hook_lower(Partition{1}, JackParam(a)) == 1);
  }
  CHECK(hook_upper(Partition{2}, JackParam(q(1))) == 2);
  CHECK(hook_upper(Partition{1, 1}, JackParam(q(2))) == 6);
  CHECK(hook_lower(Partition{2}, JackParam(q(2))) == 3);
  CHECK(hook_lower(Partition{1, 1}, JackParam(q(1))) == 2);
  CHECK(hook_upper(Partition{}, JackParam(q(2))) == 1);
  for (auto& k : all_up_to(6))
    for (const auto& a : {q(1, 2), q(2), q(3, 2)}) {
      CHECK(hook_upper(k, JackParam(a)) == brute_hook(k, a, true));
      CHECK(hook_lower(k, JackParam(a)) == brute_hook(k, a, false));
    }
}

TEST_CASE("generalized Pochhammer") {
  const Rational u = q(7, 3);
  CHECK(gen_pochhammer(u, Partition{1}, JackParam(q(2))) == u);
  CHECK(gen_pochhammer(u, Partition{2}, JackParam(q(1))) == u * (u + 1));
  CHECK(gen_pochhammer(q(-1), Partition{1, 1}, JackParam::quaternion()) == 3);
  CHECK(gen_pochhammer(q(-1), Partition{2}, JackParam::complex()) == 0);
}

TEST_CASE("Pochhammer duplication and squaring") {
  for (auto& k : all_up_to(5))
    for (const auto& u : {q(1, 3), q(-5, 2), q(4)}) {
      CHECK(gen_pochhammer(u, doubled(k), JackParam::complex()) ==
            pow(Rational(4), k.weight()) * gen_pochhammer(u / 2, k, JackParam::real()) *
                gen_pochhammer((u + 1) / 2, k, JackParam::real()));
      CHECK(gen_pochhammer(u, squared(k), JackParam::complex()) ==
            gen_pochhammer(u, k, JackParam::quaternion()) * gen_pochhammer(u - 1, k, JackParam::quaternion()));
    }
}

TEST_CASE("Pochhammer and hook conjugation") {
  for (auto& k : all_up_to(5))
    for (const auto& a : {q(1, 2), q(1), q(2), q(3, 2)}) {
      JackParam al(a);
      for (const auto& u : {q(2, 7), q(-3, 2)}) {
        CHECK(gen_pochhammer(u, conjugate(k), al) ==
              pow(-a, -k.weight()) * gen_pochhammer(-a * u, k, al.reciprocal()));
      }
      CHECK(hook_upper(conjugate(k), al) == pow(a, k.weight()) * hook_lower(k, al.reciprocal()));
    }
}

TEST_CASE("complement") {
  CHECK(complement(Partition{}, 2, 2) == Partition{2, 2});
  CHECK(complement(Partition{2, 1}, 2, 2) == Partition{1});
  CHECK(complement(Partition{1}, 1, 3) == Partition{1, 1});
  CHECK_THROWS_WITH_AS(complement(Partition{3}, 2, 2), "complement undefined", Error);
  CHECK_THROWS_WITH_AS(complement(Partition{1, 1, 1}, 2, 2), "complement undefined", Error);
}

TEST_CASE("complement Pochhammer and d' ratio") {
  for (int n = 1; n <= 3; ++n)
    for (int s = 0; s <= 3; ++s)
      for (auto& k : partitions_in_box(n, s))
        for (const auto& a : {q(1, 2), q(1), q(2)}) {
          JackParam al(a);
          const Partition ks = complement(k, s, n);
          for (const auto& u : {q(1, 3), q(5, 2)}) {
            const Rational w = Rational(n - 1) / a - u + 1 - s;
            const Rational den = gen_pochhammer(w, k, al);
            if (den == 0) continue;
            const int sign = ks.weight() % 2 ? -1 : 1;
            CHECK(gen_pochhammer(u, ks, al) == sign * gen_pochhammer(w, box(s, n), al) / den);
          }
          if (a == 2) {
            const Rational lhs = pow(Rational(2), k.weight() - ks.weight()) * hook_upper(ks, al) / hook_upper(k, al);
            const Rational c = q(n + 1, 2);
            CHECK(lhs == gen_pochhammer(c, ks, al) / gen_pochhammer(c, k, al));
          }
        }
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(4).front() == Partition{4});
  CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_in_box(2, 2).size() == 6);
}

TEST_CASE("rational helpers") {
  CHECK(to_string(q(-1, 2)) == "-1/2");
  CHECK(to_string(q(3)) == "3");
  CHECK(parse_rational("0.25") == q(1, 4));
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(pow(q(2, 3), -2) == q(9, 4));
  CHECK_THROWS_AS(pow(q(0), -1), Error);
}
