#include <doctest.h>

#include "bhl/kl.hpp"
#include "bhl/rpoly.hpp"

using namespace bhl;

namespace {

LaurentPoly qpoly(std::vector<int> coeffs) {
  LaurentPoly out(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += LaurentPoly::q_power(0, static_cast<int>(k)) * Integer(coeffs[k]);
  return out;
}

}  // namespace

TEST_CASE("small examples") {
  auto g = CoxeterGroup::build(CartanType::parse("A3"));
  RTable rt(g);
  KLTable kl(rt);
  for (Element u : g.elements()) {
    CHECK(kl.P(u, u) == qpoly({1}));
    CHECK(kl.Q(u, u) == qpoly({1}));
    for (Element v : g.elements()) {
      if (!g.bruhat_leq(u, v)) CHECK(kl.P(u, v).is_zero());
      if (g.bruhat_leq(u, v) && g.length(v) - g.length(u) <= 2) CHECK(kl.P(u, v) == qpoly({1}));
    }
  }
  CHECK(kl.P(g.identity(), g.parse("2132")) == qpoly({1, 1}));
  CHECK(g.parse("2132") == g.parse("2312"));
  Element w0 = g.longest();
  for (Element u : g.elements()) {
    for (Element v : g.elements()) CHECK(kl.Q(u, v) == kl.P(g.mul(w0, v), g.mul(w0, u)));
  }
}

TEST_CASE("A2 polynomials are all trivial") {
  auto g = CoxeterGroup::build(CartanType::parse("A2"));
  RTable rt(g);
  KLTable kl(rt);
  for (Element u : g.elements()) {
    for (Element v : g.elements()) {
      if (g.bruhat_leq(u, v)) {
        CHECK(kl.P(u, v) == qpoly({1}));
        CHECK(kl.Q(u, v) == qpoly({1}));
      }
    }
  }
}

TEST_CASE("defining identity, degree bound and positivity") {
  for (const char* t : {"B2", "A3", "B3"}) {
    auto g = CoxeterGroup::build(CartanType::parse(t));
    RTable rt(g);
    KLTable kl(rt);
    for (Element u : g.elements()) {
      for (Element v : g.elements()) {
        if (!g.bruhat_leq(u, v)) continue;
        const LaurentPoly& p = kl.P(u, v);
        int delta = g.length(v) - g.length(u);
        LaurentPoly rhs(0);
        for (Element z : g.interval(u, v)) rhs += rt.classical_R(u, z) * kl.P(z, v);
        CHECK(LaurentPoly::q_power(0, delta) * p.bar_q() == rhs);
        CHECK(p.value_at_one() >= 1);
        if (u != v) CHECK(2 * *p.max_q_degree() <= delta - 1);
        CHECK(*p.min_q_degree() == 0);
        for (const auto& term : p.terms()) CHECK(term.coeff > 0);
      }
    }
  }
}

TEST_CASE("theta power conjecture") {
  for (const char* t : {"A2", "B2", "A3", "B3"}) {
    auto g = CoxeterGroup::build(CartanType::parse(t));
    std::size_t checked = 0;
    auto violations = check_theta_power_conjecture(g, &checked);
    CHECK(violations.empty());
    CHECK(checked > 0);
  }
}
