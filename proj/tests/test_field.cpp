#include "doctest.h"

#include <vector>

#include "jgk/cyclotomic.hpp"
#include "jgk/json_io.hpp"
#include "jgk/rational.hpp"
#include "jgk/util.hpp"

using namespace jgk;

namespace {

Cyc zeta(int m, long long k = 1) { return Cyc::zeta_pow(m, k); }

Cyc random_elem(Rng& rng, int m) {
  std::vector<Rat> raw(static_cast<std::size_t>(m));
  for (auto& r : raw) r = Rat(rng.range(-6, 6), rng.range(1, 4));
  return Cyc::make(m, raw);
}

}  // namespace

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  Rat a(6, -4);
  CHECK(a.num_string() == "-3");
  CHECK(a.den_string() == "2");
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
  CHECK((Rat(1, 3) * Rat(3, 5)) == Rat(1, 5));
  CHECK((Rat(7, 2) / Rat(7, 2)).is_one());
  CHECK(Rat(-5, 3).inverse() == Rat(-3, 5));
  CHECK_THROWS_AS(Rat(1, 0), error);
  CHECK_THROWS_AS(Rat(1).operator/(Rat(0)), error);
}

TEST_CASE("rationals escalate past int64 and come back down") {
  Rat big(1);
  for (int i = 0; i < 40; ++i) big *= Rat(1LL << 20);  // 2^800
  CHECK_FALSE(big.is_small());
  CHECK(big.num_string().size() > 100);
  Rat back = big;
  for (int i = 0; i < 40; ++i) back /= Rat(1LL << 20);
  CHECK(back.is_small());
  CHECK(back.is_one());
  // round trip through decimal strings
  Rat parsed = Rat::from_decimal_strings(big.num_string(), "3");
  CHECK((parsed * Rat(3)) == big);
}

TEST_CASE("rational ring axioms on random values") {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    Rat a(rng.range(-50, 50), rng.range(1, 9));
    Rat b(rng.range(-50, 50), rng.range(1, 9));
    Rat c(rng.range(-50, 50), rng.range(1, 9));
    CHECK((a + b) == (b + a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("canonical reduction of raw coefficient vectors") {
  // coefficient 1 on zeta^4 reduces through 1+z+z^2+z^3+z^4 = 0
  std::vector<Rat> raw5(5);
  raw5[4] = Rat(1);
  Cyc a = Cyc::make(5, raw5);
  for (int k = 0; k < 4; ++k) CHECK(a.coeff(k) == Rat(-1));

  std::vector<Rat> raw3 = {Rat(1), Rat(1), Rat(1)};
  CHECK(Cyc::make(3, raw3).is_zero());

  std::vector<Rat> raw1 = {Rat(7, 2)};
  Cyc c = Cyc::make(1, raw1);
  CHECK(c.is_rational());
  CHECK(c.rational_part() == Rat(7, 2));

  CHECK_THROWS_AS(Cyc::make(4, raw3), error);
  CHECK_THROWS_AS(Cyc::make(3, raw5), error);
}

TEST_CASE("re-encoding a canonical element is the identity") {
  Rng rng(11);
  for (int m : {1, 3, 5}) {
    for (int t = 0; t < 50; ++t) {
      Cyc a = random_elem(rng, m);
      std::vector<Rat> raw(static_cast<std::size_t>(m));
      for (int k = 0; k < phi_of(m); ++k) raw[static_cast<std::size_t>(k)] = a.coeff(k);
      CHECK(Cyc::make(m, raw) == a);
    }
  }
}

TEST_CASE("products reduce mod the cyclotomic polynomial") {
  CHECK((zeta(5, 2) * zeta(5, 3)) == Cyc::one(5));

  Cyc one_minus = Cyc::one(5) - zeta(5);
  Cyc all = Cyc::one(5);
  for (int k = 1; k <= 4; ++k) all += zeta(5, k);
  CHECK(all.is_zero());
  CHECK((one_minus * all).is_zero());

  Cyc w2 = zeta(3) * zeta(3);
  CHECK(w2.coeff(0) == Rat(-1));
  CHECK(w2.coeff(1) == Rat(-1));

  CHECK_THROWS_AS(zeta(3) * zeta(5), error);
}

TEST_CASE("roots of unity: zeta^m = 1 and the m-term sum vanishes") {
  for (int m : {3, 5}) {
    Cyc p = Cyc::one(m);
    Cyc s = Cyc::zero(m);
    for (int k = 0; k < m; ++k) {
      s += Cyc::zeta_pow(m, k);
      p *= zeta(m);
    }
    CHECK(p == Cyc::one(m));
    CHECK(s.is_zero());
  }
}

TEST_CASE("field inversion") {
  CHECK(zeta(5).inverse() == zeta(5, 4));
  CHECK((Cyc::one(3) + zeta(3)).inverse() == -zeta(3));

  // independent value for (1 - zeta_5)^{-1}: the four conjugate factors of
  // Phi_5 multiply to 5, so the inverse is (1-z^2)(1-z^3)(1-z^4)/5
  Cyc inv = (Cyc::one(5) - zeta(5)).inverse();
  Cyc expect = Cyc::zero(5);
  expect += Cyc::rational(5, Rat(4, 5));
  expect += zeta(5, 1).scaled(Rat(3, 5));
  expect += zeta(5, 2).scaled(Rat(2, 5));
  expect += zeta(5, 3).scaled(Rat(1, 5));
  CHECK(inv == expect);
  CHECK(((Cyc::one(5) - zeta(5)) * inv) == Cyc::one(5));

  CHECK_THROWS_AS(Cyc::zero(5).inverse(), error);
}

TEST_CASE("ring axioms and double inversion on random elements") {
  Rng rng(3);
  for (int m : {3, 5}) {
    for (int t = 0; t < 200; ++t) {
      Cyc a = random_elem(rng, m), b = random_elem(rng, m), c = random_elem(rng, m);
      CHECK((a * b) == (b * a));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      if (!a.is_zero()) {
        CHECK((a * a.inverse()) == Cyc::one(m));
        CHECK(a.inverse().inverse() == a);
      }
    }
  }
}

TEST_CASE("field element JSON round trip") {
  Rng rng(19);
  for (int m : {1, 3, 5}) {
    for (int t = 0; t < 20; ++t) {
      Cyc a = random_elem(rng, m);
      CHECK(cyc_from_json(cyc_to_json(a)) == a);
    }
  }
  // big integers serialize as strings
  Rat big(1);
  for (int i = 0; i < 10; ++i) big *= Rat(1000000000000LL);
  Cyc a = Cyc::rational(5, big) + zeta(5).scaled(Rat(1, 3));
  auto j = cyc_to_json(a);
  CHECK(j["c"][0][0].is_string());
  CHECK(cyc_from_json(j) == a);
}
