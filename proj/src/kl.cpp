#include "bhl/kl.hpp"

namespace bhl {

KLTable::KLTable(RTable& rtable) : rtable_(&rtable), memo_(rtable.group().order() * rtable.group().order()) {}

const LaurentPoly& KLTable::P(Element u, Element v) {
  const auto& g = group();
  g.require(u);
  g.require(v);
  auto& entry = memo_[static_cast<std::size_t>(u.index()) * g.order() + v.index()];
  if (entry) return *entry;

  LaurentPoly value(0);
  if (u == v) {
    value = LaurentPoly::constant(0, 1);
  } else if (g.bruhat_leq(u, v)) {
    const int bound = (g.length(v) - g.length(u) - 1) / 2;
    LaurentPoly acc(0);
    for (Element z : g.interval(u, v)) {
      if (z == u) continue;
      acc += rtable_->classical_R(u, z) * P(z, v);
    }
    std::vector<LaurentPoly::Term> low;
    for (const auto& t : acc.terms()) {
      if (t.exponent.q_degree() <= bound) low.push_back({t.exponent, -t.coeff});
    }
    value = LaurentPoly::from_terms(0, std::move(low));
  }
  // The memo never resizes, so entry is still valid after recursion.
  entry = std::move(value);
  return *entry;
}

const LaurentPoly& KLTable::Q(Element u, Element v) {
  const auto& g = group();
  return P(g.mul(g.longest(), v), g.mul(g.longest(), u));
}

std::vector<ThetaViolation> check_theta_power_conjecture(const CoxeterGroup& group, std::size_t* checked) {
  RTable rtable(group);
  KLTable kl(rtable);
  ThetaTable theta(group);
  std::vector<ThetaViolation> out;
  std::size_t count = 0;
  for (Element x : group.elements()) {
    for (Element y : group.elements()) {
      Element xy = group.mul(x, group.inv(y));
      for (Element w : group.elements()) {
        if (!group.bruhat_leq(xy, w)) continue;
        const LaurentPoly& p = kl.P(xy, w);
        if (p != LaurentPoly::constant(0, 1)) continue;
        ++count;
        const LaurentPoly& t = theta(x, y, w);
        if (!(t.is_monomial() && t.terms()[0].coeff == 1)) out.push_back({x, y, w, t});
      }
    }
  }
  if (checked) *checked = count;
  return out;
}

}  // namespace bhl
