#include <doctest.h>

#include <random>

#include "a2_exceptions.hpp"
#include "bhl/kl.hpp"
#include "bhl/sigma.hpp"
#include "oracles.hpp"

using namespace bhl;

namespace {

LaurentPoly qpoly(std::vector<int> coeffs, int arity = 0) {
  LaurentPoly out(arity);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += LaurentPoly::q_power(arity, static_cast<int>(k)) * Integer(coeffs[k]);
  }
  return out;
}

/// sigma from its defining double sum, with Theta from the left-multiplication oracle.
RationalFn sigma_oracle(const CoxeterGroup& g, const std::vector<std::vector<bool>>& le, RTable& rt, Element u,
                        Element v, Element w) {
  RationalFn out = RationalFn::zero(g.roots());
  for (Element x : g.elements()) {
    if (!le[x.index()][u.index()]) continue;
    for (Element y : g.elements()) {
      if (!le[v.index()][y.index()]) continue;
      LaurentPoly th = oracle::theta(g, le, x, y, w);
      if (th.is_zero()) continue;
      LaurentPoly coeff = (th * LaurentPoly::q_power(0, -g.length(y))).with_arity(g.rank());
      out = out + RationalFn(g.roots(), coeff) * bar(rt.r(y, v));
    }
  }
  return out;
}

std::size_t nonzero_oracle(const CoxeterGroup& g) {
  auto le = oracle::bruhat_table(g);
  std::size_t count = 0;
  for (Element u : g.elements()) {
    for (Element w : g.elements()) {
      Element vmin = oracle::v_min(g, le, u, w);
      for (Element v : g.elements()) count += le[v.index()][vmin.index()];
    }
  }
  return count;
}

}  // namespace

TEST_CASE("examples on A2") {
  auto g = CoxeterGroup::build(CartanType::parse("A2"));
  SigmaEngine eng(g);
  Element e = g.identity(), s1 = g.parse("1"), s2 = g.parse("2"), s12 = g.parse("12"), s21 = g.parse("21");
  RationalFn s = eng.sigma(e, s1, e);
  CHECK(s.to_string() == "(1 - q^-1*x1) / (1 - x1)");
  CHECK(s == oracle::gk_product(g, {0}));
  CHECK(eng.sigma(s1, e, s21) == RationalFn(g.roots(), qpoly({0, 1, 1}, 2)));
  CHECK(eng.sigma(s12, e, e).is_zero());

  CHECK(eng.sigma0(s1, s2) == qpoly({1, 1}));
  CHECK(eng.sigma0(s12, g.longest()) == qpoly({0, 0, 1, 1}));
  for (Element u : g.elements()) {
    LaurentPoly expect(0);
    for (Element z : g.interval(u, g.longest())) expect += LaurentPoly::q_power(0, g.length(z));
    CHECK(eng.sigma0(u, g.longest()) == expect);
  }

  auto mu_e = eng.mu_element(e);
  REQUIRE(mu_e.size() == 1);
  CHECK(mu_e.at(e) == RationalFn::one(g.roots()));
  auto mu = eng.mu_element(s1);
  REQUIRE(mu.size() == 2);
  CHECK(mu.at(e) == bar(eng.rtable().at(e, s1)));
  CHECK(mu.at(s1) == RationalFn(g.roots(), LaurentPoly::q_power(2, -1)));

  CHECK_FALSE(eng.is_gk(s1, s1, s12));
  for (Element u : g.elements()) {
    for (Element w : g.elements()) CHECK(eng.is_gk(u, eng.demazure().v_min(u, w), w));
  }
  CHECK_THROWS_AS(eng.is_gk(s12, e, e), std::invalid_argument);
}

TEST_CASE("double sum matches the oracle") {
  for (const char* t : {"A2", "B2"}) {
    auto g = CoxeterGroup::build(CartanType::parse(t));
    auto le = oracle::bruhat_table(g);
    SigmaEngine eng(g);
    RTable rt(g);
    for (Element u : g.elements()) {
      for (Element v : g.elements()) {
        for (Element w : g.elements()) CHECK(eng.sigma(u, v, w) == sigma_oracle(g, le, rt, u, v, w));
      }
    }
  }
  auto g = CoxeterGroup::build(CartanType::parse("A3"));
  auto le = oracle::bruhat_table(g);
  SigmaEngine eng(g);
  RTable rt(g);
  auto all = g.elements();
  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    Element u = all[rng() % all.size()], v = all[rng() % all.size()], w = all[rng() % all.size()];
    CHECK(eng.sigma(u, v, w) == sigma_oracle(g, le, rt, u, v, w));
  }
}

TEST_CASE("mu element expansion") {
  auto g = CoxeterGroup::build(CartanType::parse("A3"));
  SigmaEngine eng(g);
  auto le = oracle::bruhat_table(g);
  auto all = g.elements();
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    Element u = all[rng() % all.size()], v = all[rng() % all.size()], w = all[rng() % all.size()];
    RationalFn sum = RationalFn::zero(g.roots());
    for (const auto& [yi, coeff] : eng.mu_element(v)) {
      for (Element x : all) {
        if (!le[x.index()][u.index()]) continue;
        // Lambda_w(T_x T_{y^-1}) with y^-1 the key
        LaurentPoly lam = oracle::theta(g, le, x, g.inv(yi), w);
        if (!lam.is_zero()) sum = sum + RationalFn(g.roots(), lam.with_arity(g.rank())) * coeff;
      }
    }
    CHECK(sum == eng.sigma(u, v, w));
  }
}

TEST_CASE("main theorem and vanishing") {
  for (const char* t : {"A2", "B2", "C2", "A3"}) {
    auto g = CoxeterGroup::build(CartanType::parse(t));
    SigmaEngine eng(g);
    const Demazure& d = eng.demazure();
    for (Element u : g.elements()) {
      for (Element w : g.elements()) {
        Element vmin = d.v_min(u, w);
        LaurentPoly s0 = eng.sigma0(u, w);
        CHECK(s0 == eng.sigma0_bruhat(u, w));
        CHECK(RationalFn(g.roots(), s0.with_arity(g.rank())) == eng.sigma(u, vmin, w));
        LaurentPoly expect(0);
        for (Element z : g.interval(u, g.mul(w, vmin))) expect += LaurentPoly::q_power(0, g.length(z) - g.length(vmin));
        CHECK(s0 == expect);
        CHECK(eng.sigma(u, g.identity(), w) == RationalFn(g.roots(), g.poincare(u, w).with_arity(g.rank())));
        for (Element v : g.elements()) {
          RationalFn s = eng.sigma(u, v, w);
          CHECK(s.is_zero() != g.bruhat_leq(vmin, v));
          CHECK(poles_within(s, s_set3(d, u, v, w)));
        }
      }
    }
    std::size_t checked = 0;
    CHECK(verify_main_theorem(eng, 2, &checked));
    CHECK(checked == g.order() * g.order());
    CHECK(verify_vanishing(eng, 500, 3, &checked));
    CHECK(checked > 0);
  }
}

TEST_CASE("GK base case and m_{u,v} on A3") {
  auto g = CoxeterGroup::build(CartanType::parse("A3"));
  SigmaEngine eng(g);
  RTable rt(g);
  KLTable kl(rt);
  Element e = g.identity();
  for (Element v : g.elements()) {
    CHECK(eng.sigma(e, v, e) == oracle::gk_product(g, s_set(g, e, v)));
    CHECK(eng.is_gk(e, v, e));
  }
  int tested = 0;
  for (Element u : g.elements()) {
    for (Element v : g.elements()) {
      if (!g.bruhat_leq(u, v)) continue;
      RationalFn direct = RationalFn::zero(g.roots());
      for (Element y : g.interval(u, v)) direct = direct + bar(rt.r(y, v));
      CHECK(eng.sigma(u, v, e) == direct);
      if (kl.Q(u, v) != qpoly({1})) continue;
      ++tested;
      CHECK(eng.sigma(u, v, e) == oracle::gk_product(g, s_set(g, u, v)));
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("A2 classification") {
  auto g = CoxeterGroup::build(CartanType::parse("A2"));
  SigmaEngine eng(g);
  auto report = classify(eng, 1);
  CHECK(report.total == 216);
  CHECK(report.nonzero == 167);
  CHECK(report.gk == 147);
  CHECK(report.vanished == 0);
  CHECK(report.nonzero == nonzero_oracle(g));
  std::set<std::array<std::string, 3>> got(report.exceptions.begin(), report.exceptions.end());
  CHECK(got == a2_exceptions());
  CHECK(std::is_sorted(report.exceptions.begin(), report.exceptions.end()));
  CHECK(report.rows.size() == report.nonzero);
}

TEST_CASE("B2 and C2 classification") {
  for (const char* t : {"B2", "C2"}) {
    auto g = CoxeterGroup::build(CartanType::parse(t));
    SigmaEngine eng(g);
    auto report = classify(eng, 2);
    CHECK(report.nonzero == 401);
    CHECK(report.gk == 305);
    CHECK(report.nonzero == nonzero_oracle(g));
    CHECK(report.gk + report.exceptions.size() == report.nonzero);
  }
}

TEST_CASE("A3 classification") {
  auto g = CoxeterGroup::build(CartanType::parse("A3"));
  SigmaEngine eng(g);
  auto report = classify(eng, 4);
  CHECK(report.total == 24 * 24 * 24);
  CHECK(report.gk == 6281);
  CHECK(report.vanished == 0);
  CHECK(report.nonzero == nonzero_oracle(g));
  CHECK(report.gk + report.exceptions.size() == report.nonzero);
}

TEST_CASE("classification does not depend on the number of jobs") {
  auto g = CoxeterGroup::build(CartanType::parse("B2"));
  SigmaEngine eng(g);
  auto one = classify(eng, 1), many = classify(eng, 5);
  CHECK(one.exceptions == many.exceptions);
  REQUIRE(one.rows.size() == many.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].u == many.rows[i].u);
    CHECK(one.rows[i].v == many.rows[i].v);
    CHECK(one.rows[i].w == many.rows[i].w);
    CHECK(one.rows[i].is_gk == many.rows[i].is_gk);
    CHECK(one.rows[i].sigma0 == many.rows[i].sigma0);
  }
}

TEST_CASE("parallel_for") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t k) { hits[k] += 1; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t k) {
                                 if (k == 7) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
}
