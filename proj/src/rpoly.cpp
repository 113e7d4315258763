#include "bhl/rpoly.hpp"

#include <bit>
#include <stdexcept>

namespace bhl {

RTable::RTable(const CoxeterGroup& group)
    : group_(&group),
      r_(group.order() * group.order()),
      classical_(group.order() * group.order()),
      missing_(group.order() * group.order()) {}

std::size_t RTable::slot(Element u, Element v) const {
  group_->require(u);
  group_->require(v);
  return static_cast<std::size_t>(u.index()) * group_->order() + v.index();
}

RationalFn RTable::r_with_pivot(Element u, Element v, int s) {
  const auto& g = *group_;
  const auto& roots = g.roots();
  if (!g.bruhat_leq(u, v)) return RationalFn::zero(roots);
  if (u == v) return RationalFn::one(roots);
  if (!g.is_left_descent(s, v)) throw std::invalid_argument("pivot is not a left descent of v");

  // -v^-1 alpha_s is positive because s v < v.
  SignedRoot image = g.root_action(g.inv(v), s - 1);
  if (!image.negative) throw std::logic_error("v^-1 alpha_s should be negative");
  const int beta = image.index;
  const int r = g.rank();

  Element sv = g.left_mul_simple(s, v);
  Element su = g.left_mul_simple(s, u);
  LaurentPoly one_minus_q = LaurentPoly::constant(r, 1) - LaurentPoly::q_power(r, 1);
  if (g.is_left_descent(s, u)) {
    RationalFn coef(roots, one_minus_q, {beta});
    return coef * this->r(u, sv) + this->r(su, sv);
  }
  RationalFn coef(roots, one_minus_q * LaurentPoly::monomial(roots->exponent(beta)), {beta});
  return coef * this->r(u, sv) + this->r(su, sv) * LaurentPoly::q_power(r, 1);
}

const RationalFn& RTable::r(Element u, Element v) {
  auto& entry = r_[slot(u, v)];
  if (entry) return *entry;
  RationalFn value = RationalFn::one(group_->roots());
  if (u != v) {
    int s = v == group_->identity() ? 1 : std::countr_zero(group_->left_descents(v)) + 1;
    value = r_with_pivot(u, v, s);
  }
  // The table never resizes, so the reference is still valid after recursion.
  entry = std::move(value);
  --missing_;
  return *entry;
}

const LaurentPoly& RTable::classical_R(Element u, Element v) {
  auto& entry = classical_[slot(u, v)];
  if (entry) return *entry;
  const auto& g = *group_;
  LaurentPoly value(0);
  if (u == v) {
    value = LaurentPoly::constant(0, 1);
  } else if (g.bruhat_leq(u, v)) {
    int s = std::countr_zero(g.left_descents(v)) + 1;
    Element sv = g.left_mul_simple(s, v);
    Element su = g.left_mul_simple(s, u);
    if (g.is_left_descent(s, u)) {
      value = classical_R(su, sv);
    } else {
      LaurentPoly q = LaurentPoly::q_power(0, 1);
      value = (q - LaurentPoly::constant(0, 1)) * classical_R(u, sv) + q * classical_R(su, sv);
    }
  }
  auto& slot_ref = classical_[slot(u, v)];
  slot_ref = std::move(value);
  return *slot_ref;
}

void RTable::fill_all() {
  for (Element v : group_->elements()) {
    for (Element u : group_->elements()) r(u, v);
  }
}

const RationalFn& RTable::at(Element u, Element v) const {
  const auto& entry = r_[slot(u, v)];
  if (!entry) throw std::logic_error("r-table entry not computed");
  return *entry;
}

bool RTable::contains(Element u, Element v) const { return r_[slot(u, v)].has_value(); }

void RTable::insert(Element u, Element v, RationalFn value) {
  auto& entry = r_[slot(u, v)];
  if (!entry) --missing_;
  entry = std::move(value);
}

std::vector<int> s_set(const CoxeterGroup& group, Element u, Element v) {
  std::vector<int> out;
  for (int a = 0; a < group.num_positive_roots(); ++a) {
    Element vr = group.mul(v, group.reflection(a));
    if (group.bruhat_less(vr, v) && group.bruhat_leq(u, vr)) out.push_back(a);
  }
  return out;
}

std::vector<int> s_set3(const Demazure& dem, Element u, Element v, Element w) {
  return s_set(dem.group(), dem.v_min(u, w), v);
}

}  // namespace bhl
