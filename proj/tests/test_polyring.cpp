#include <doctest.h>

#include <random>

#include "bhl/polyring.hpp"

using namespace bhl;

namespace {

LaurentPoly mono(int q, std::vector<int> x, Integer c = 1) { return LaurentPoly::monomial(ExponentVector(q, x), c); }
LaurentPoly one2() { return LaurentPoly::constant(2, 1); }
LaurentPoly q2(int k) { return LaurentPoly::q_power(2, k); }

std::shared_ptr<const RootData> a2_roots() {
  return std::make_shared<RootData>(2, std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
}

std::shared_ptr<const RootData> b3_like_roots() {
  return std::make_shared<RootData>(
      3, std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}, {0, 1, 2}, {1, 1, 1}});
}

LaurentPoly random_poly(std::mt19937_64& rng, int arity) {
  std::uniform_int_distribution<int> count(0, 4), coeff(-3, 3), qdeg(-2, 2), xdeg(0, 2);
  std::vector<LaurentPoly::Term> terms;
  for (int n = count(rng); n > 0; --n) {
    ExponentVector e(arity, qdeg(rng));
    for (int i = 0; i < arity; ++i) e.set_x_degree(i, xdeg(rng));
    terms.push_back({e, coeff(rng)});
  }
  return LaurentPoly::from_terms(arity, std::move(terms));
}

}  // namespace

TEST_CASE("addition cancels and merges") {
  LaurentPoly a = one2() - mono(0, {1, 1});
  LaurentPoly b = mono(0, {1, 1}) - mono(0, {1, 0});
  CHECK(a + b == one2() - mono(0, {1, 0}));
  CHECK(a + LaurentPoly(2) == a);
  CHECK(q2(1) + q2(1) == mono(1, {0, 0}, 2));
  CHECK((q2(1) + q2(1)).to_string() == "2*q");
}

TEST_CASE("multiplication") {
  LaurentPoly x1 = mono(0, {1, 0});
  CHECK((one2() - x1) * (one2() + x1) == one2() - mono(0, {2, 0}));
  CHECK(q2(-1) * q2(1) == one2());
  LaurentPoly q = LaurentPoly::q_power(0, 1), one = LaurentPoly::constant(0, 1);
  CHECK((q - one) * (q - one) == q * q - q * Integer(2) + one);
  CHECK(((q - one) * (q - one)).to_string() == "1 - 2*q + q^2");
}

TEST_CASE("arity mismatch is rejected") {
  CHECK_THROWS_AS(LaurentPoly(1) + LaurentPoly(2), std::invalid_argument);
  CHECK_THROWS_AS(LaurentPoly::constant(1, 1) * LaurentPoly::constant(2, 1), std::invalid_argument);
}

TEST_CASE("bar replaces q by q^-1") {
  LaurentPoly q = LaurentPoly::q_power(0, 1), one = LaurentPoly::constant(0, 1), qi = LaurentPoly::q_power(0, -1);
  CHECK((one - q).bar_q() == one - qi);
  CHECK((q + qi).bar_q() == q + qi);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly a = random_poly(rng, 2), b = random_poly(rng, 2);
    CHECK(a.bar_q().bar_q() == a);
    CHECK((a * b).bar_q() == a.bar_q() * b.bar_q());
    CHECK((a + b).bar_q() == a.bar_q() + b.bar_q());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    LaurentPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == LaurentPoly(3));
  }
}

TEST_CASE("binomial division") {
  const std::vector<int> a1{1, 0}, a2{0, 1}, a12{1, 1};
  auto q1 = binomial_divide(mono(0, {1, 0}) - mono(0, {1, 1}), a2);
  REQUIRE(q1);
  CHECK(*q1 == mono(0, {1, 0}));
  auto q2_ = binomial_divide(one2() - mono(0, {1, 1}), a12);
  REQUIRE(q2_);
  CHECK(*q2_ == one2());
  CHECK_FALSE(binomial_divide(one2() + mono(0, {1, 0}), a1));
  CHECK(binomial_divide(LaurentPoly(2), a1) == LaurentPoly(2));

  auto roots = b3_like_roots();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    LaurentPoly a = random_poly(rng, 3);
    int beta = static_cast<int>(rng() % static_cast<std::uint64_t>(roots->size()));
    auto quotient = binomial_divide(a * roots->binomial(beta), roots->root(beta));
    REQUIRE(quotient);
    CHECK(*quotient == a);
    if (auto q = binomial_divide(a, roots->root(beta))) CHECK(*q * roots->binomial(beta) == a);
  }
}

TEST_CASE("rational functions") {
  auto roots = a2_roots();
  LaurentPoly x1 = mono(0, {1, 0});
  RationalFn bar_r(roots, (one2() - q2(-1)) * x1, {0});
  RationalFn sum = RationalFn::one(roots) + bar_r;
  CHECK(sum == RationalFn(roots, one2() - q2(-1) * x1, {0}));
  CHECK(sum.to_string() == "(1 - q^-1*x1) / (1 - x1)");

  RationalFn p(roots, one2() + x1);
  CHECK(p == p);
  RationalFn zero = RationalFn::zero(roots) * sum;
  CHECK(zero.is_zero());
  CHECK(zero.denominator().empty());
  CHECK(zero.to_string() == "0");

  // reduction cancels a divisible factor
  RationalFn cancels(roots, (one2() - x1) * (one2() + x1), {0, 2});
  CHECK(cancels.denominator().size() == 1);
  CHECK(cancels.denominator()[0] == 2);
  CHECK(RationalFn(roots, one2(), {0, 1}).to_string() == "1 / ((1 - x1)*(1 - x2))");
  CHECK(RationalFn(roots, one2(), {2, 2}).to_string() == "1 / (1 - x1*x2)^2");
}

TEST_CASE("rf_eq matches reduced-form equality on random instances") {
  auto roots = b3_like_roots();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, roots->size() - 1), extra(0, 2);
  for (int t = 0; t < 1000; ++t) {
    LaurentPoly p = random_poly(rng, 3);
    std::vector<int> den{pick(rng), pick(rng)};
    RationalFn a(roots, p, den);
    // b is either the same value written over a larger denominator, or a perturbation
    std::vector<int> more = den;
    LaurentPoly num = p;
    for (int k = extra(rng); k > 0; --k) {
      int f = pick(rng);
      more.push_back(f);
      num *= roots->binomial(f);
    }
    bool perturb = rng() % 2 == 0;
    if (perturb) num += random_poly(rng, 3);
    RationalFn b(roots, num, more);
    CHECK((a == b) == a.same_representation(b));
    if (!perturb) CHECK(a == b);
    CHECK(a == a);
    CHECK((a == b) == (b == a));
    RationalFn c(roots, num * roots->binomial(0), multiset_sum(more, std::vector<int>{0}));
    if (a == b && b == c) CHECK(a == c);
  }
}

TEST_CASE("sum over a common denominator equals pairwise addition") {
  auto roots = b3_like_roots();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> pick(0, roots->size() - 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<RationalFn> terms;
    RationalFn acc = RationalFn::zero(roots);
    for (int k = 0; k < 4; ++k) {
      terms.emplace_back(roots, random_poly(rng, 3), std::vector<int>{pick(rng)});
      acc = acc + terms.back();
    }
    CHECK(RationalFn::sum(terms) == acc);
    CHECK(RationalFn::sum(terms).same_representation(acc));
  }
}

TEST_CASE("evaluation") {
  auto roots = a2_roots();
  RationalFn f(roots, one2() - q2(-1) * mono(0, {1, 0}), {0});
  std::vector<long double> x{3.0L, 5.0L};
  // (1 - x/q) / (1 - x) at q = 2, x = 3
  CHECK(f.evaluate(2.0L, x) == doctest::Approx((1.0 - 1.5) / (1.0 - 3.0)));
}
