#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dlab/laurent.hpp"

using dlab::LaurentPoly;

namespace {

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> low(-4, 4), len(0, 5), coeff(-6, 6);
  LaurentPoly p;
  int lo = low(rng);
  int n = len(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly(mpz_class(coeff(rng)), lo + i);
  return p;
}

}  // namespace

TEST_CASE("construction and canonical form") {
  CHECK(LaurentPoly().is_zero());
  CHECK(LaurentPoly(0).is_zero());
  CHECK(LaurentPoly(1).is_one());
  LaurentPoly p = LaurentPoly::v(3) - LaurentPoly::v(3);
  CHECK(p.is_zero());
  CHECK(p.to_string() == "0");
  // window trims on cancellation
  LaurentPoly q = LaurentPoly::v(2) + LaurentPoly::v(0);
  q -= LaurentPoly::v(2);
  CHECK(q == LaurentPoly(1));
  CHECK(q.low_exp() == 0);
  CHECK(q.high_exp() == 0);
}

TEST_CASE("arithmetic matches hand expansion") {
  LaurentPoly v = LaurentPoly::v(1), vinv = LaurentPoly::v(-1);
  // (v + v^-1)^2 = v^2 + 2 + v^-2
  LaurentPoly sq = (v + vinv) * (v + vinv);
  CHECK(sq == LaurentPoly::v(2) + LaurentPoly(2) + LaurentPoly::v(-2));
  // p + 0 = p
  LaurentPoly p = LaurentPoly(3, 0) + LaurentPoly::v(5);
  CHECK(p + LaurentPoly() == p);
  // (v^-1 - v) * v = 1 - v^2
  CHECK((vinv - v) * v == LaurentPoly(1) - LaurentPoly::v(2));
}

TEST_CASE("bar involution") {
  LaurentPoly p = LaurentPoly::v(2) + LaurentPoly::v(-1);
  CHECK(p.bar() == LaurentPoly::v(-2) + LaurentPoly::v(1));
  CHECK(p.bar().bar() == p);
  LaurentPoly sym = LaurentPoly::v(1) + LaurentPoly::v(-1);
  CHECK(sym.bar() == sym);
}

TEST_CASE("coeff") {
  LaurentPoly p = LaurentPoly::v(3) + LaurentPoly::v(1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(2) == 0);
  CHECK(p.coeff(3) == 1);
  CHECK(p.coeff(-7) == 0);
  for (int k = -3; k <= 3; ++k) CHECK(LaurentPoly().coeff(k) == 0);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a.bar() * b.bar()) == (a * b).bar());
  }
}

TEST_CASE("positivity predicates consistent with coeff") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_laurent(rng);
    bool nonneg = true;
    for (int k = a.low_exp(); k <= a.high_exp(); ++k)
      if (a.coeff(k) < 0) nonneg = false;
    CHECK(a.in_z_pos_v() == (a.is_zero() || (a.low_exp() >= 0 && nonneg)));
    CHECK(a.in_v_zv() == (a.is_zero() || a.low_exp() >= 1));
    CHECK(a.in_one_plus_v_zv() == (a.coeff(0) == 1 && (a - LaurentPoly(1)).in_v_zv()));
  }
  CHECK(LaurentPoly(1).in_one_plus_v_zv());
  CHECK((LaurentPoly(1) + LaurentPoly::v(2)).in_one_plus_v_zv());
  CHECK_FALSE((LaurentPoly(2)).in_one_plus_v_zv());
  CHECK_FALSE((LaurentPoly::v(-1) + LaurentPoly(1)).in_one_plus_v_zv());
}

TEST_CASE("coefficientwise comparison") {
  LaurentPoly a = LaurentPoly::v(1) + LaurentPoly::v(3);
  LaurentPoly b = a + LaurentPoly::v(2);
  CHECK(LaurentPoly::leq_coefficientwise(a, b));
  CHECK_FALSE(LaurentPoly::leq_coefficientwise(b, a));
  CHECK(LaurentPoly::leq_coefficientwise(a, a));
}

TEST_CASE("text round trip") {
  CHECK((LaurentPoly::v(3) + LaurentPoly::v(1)).to_string() == "1:1,0,1");
  CHECK(LaurentPoly::parse("1:1,0,1") == LaurentPoly::v(3) + LaurentPoly::v(1));
  CHECK(LaurentPoly::parse("0") == LaurentPoly());
  CHECK(LaurentPoly::parse("-2:1,0,1") ==
        LaurentPoly::v(-2) + LaurentPoly::v(0));
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_laurent(rng);
    CHECK(LaurentPoly::parse(a.to_string()) == a);
  }
  CHECK_THROWS_AS(LaurentPoly::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("1:"), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::parse("1:2,x"), std::invalid_argument);
}

TEST_CASE("arbitrary precision") {
  // (1 + v)^64 has central coefficient C(64,32), far beyond 64 bits
  LaurentPoly p(1);
  LaurentPoly base = LaurentPoly(1) + LaurentPoly::v(1);
  for (int i = 0; i < 64; ++i) p *= base;
  mpz_class expect;
  mpz_bin_uiui(expect.get_mpz_t(), 64, 32);
  CHECK(p.coeff(32) == expect);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(64) == 1);
}
