#include "bhl/hecke.hpp"

#include <stdexcept>

namespace bhl {

namespace {

const LaurentPoly& q_minus_one() {
  static const LaurentPoly p = LaurentPoly::q_power(0, 1) - LaurentPoly::constant(0, 1);
  return p;
}

const LaurentPoly& q_one() {
  static const LaurentPoly p = LaurentPoly::q_power(0, 1);
  return p;
}

}  // namespace

HeckeElem HeckeElem::basis(const CoxeterGroup& group, Element w) {
  HeckeElem h(group);
  h.add(w, LaurentPoly::constant(0, 1));
  return h;
}

LaurentPoly HeckeElem::coeff(Element w) const {
  group_->require(w);
  auto it = coeffs_.find(w.index());
  return it == coeffs_.end() ? LaurentPoly(0) : it->second;
}

std::vector<Element> HeckeElem::support() const {
  std::vector<Element> out;
  for (const auto& [w, c] : coeffs_) out.push_back(group_->element(w));
  return out;
}

void HeckeElem::add(Element w, const LaurentPoly& c) {
  group_->require(w);
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(w.index(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

// T_y T_s = T_{ys} if ys > y, else (q - 1) T_y + q T_{ys}.
HeckeElem HeckeElem::times_simple(int i) const {
  HeckeElem out(*group_);
  for (const auto& [y, c] : coeffs_) {
    Element ye = group_->element(y);
    Element ys = group_->right_mul_simple(ye, i);
    if (!group_->is_right_descent(ye, i)) {
      out.add(ys, c);
    } else {
      out.add(ye, c * q_minus_one());
      out.add(ys, c * q_one());
    }
  }
  return out;
}

HeckeElem operator*(const HeckeElem& a, const HeckeElem& b) {
  if (a.group_ != b.group_) throw std::invalid_argument("Hecke elements from different groups");
  HeckeElem out(*a.group_);
  for (const auto& [v, c] : b.coeffs_) {
    HeckeElem partial = a;
    for (auto letter : a.group_->reduced_word(a.group_->element(v))) partial = partial.times_simple(letter);
    for (const auto& [y, d] : partial.coeffs_) out.add(a.group_->element(y), d * c);
  }
  return out;
}

HeckeElem operator+(const HeckeElem& a, const HeckeElem& b) {
  if (a.group_ != b.group_) throw std::invalid_argument("Hecke elements from different groups");
  HeckeElem out = a;
  for (const auto& [y, c] : b.coeffs_) out.add(a.group_->element(y), c);
  return out;
}

bool operator==(const HeckeElem& a, const HeckeElem& b) { return a.group_ == b.group_ && a.coeffs_ == b.coeffs_; }

LaurentPoly lambda(Element w, const HeckeElem& a) {
  const auto& g = a.group();
  g.require(w);
  LaurentPoly out(0);
  for (const auto& [y, c] : a.coeffs()) {
    Element ye = g.element(y);
    if (g.bruhat_leq(ye, w)) out += c.shifted(ExponentVector(0, g.length(ye)));
  }
  return out;
}

LaurentPoly theta(const CoxeterGroup& group, Element x, Element y, Element w) {
  HeckeElem prod = HeckeElem::basis(group, x) * HeckeElem::basis(group, group.inv(y));
  return lambda(w, prod);
}

ThetaTable::ThetaTable(const CoxeterGroup& group) : group_(&group) {
  const std::size_t n = group.order();
  if (n > kMaxThetaTableOrder) throw CapExceeded("Theta table needs |W| <= " + std::to_string(kMaxThetaTableOrder));
  values_.resize(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element xe = group.element(x);
      Element yi = group.inv(group.element(y));
      HeckeElem prod = HeckeElem::basis(group, xe) * HeckeElem::basis(group, yi);
      for (std::size_t w = 0; w < n; ++w) values_[(x * n + y) * n + w] = lambda(group.element(w), prod);
    }
  }
}

const LaurentPoly& ThetaTable::operator()(Element x, Element y, Element w) const {
  group_->require(x);
  group_->require(y);
  group_->require(w);
  const std::size_t n = group_->order();
  return values_[(x.index() * n + y.index()) * n + w.index()];
}

}  // namespace bhl
