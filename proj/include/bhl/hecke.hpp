#pragma once

// Iwahori-Hecke algebra H_q in the T-basis, the functionals Lambda_w and
// Theta(x, y, w) = Lambda_w(T_x T_{y^-1}).

#include <map>
#include <vector>

#include "bhl/coxeter.hpp"
#include "bhl/polyring.hpp"

namespace bhl {

/// Sparse sum of T_w with q-Laurent coefficients (arity 0).
class HeckeElem {
 public:
  explicit HeckeElem(const CoxeterGroup& group) : group_(&group) {}
  static HeckeElem basis(const CoxeterGroup& group, Element w);

  const CoxeterGroup& group() const { return *group_; }
  const std::map<std::uint32_t, LaurentPoly>& coeffs() const { return coeffs_; }
  LaurentPoly coeff(Element w) const;
  bool is_zero() const { return coeffs_.empty(); }
  std::vector<Element> support() const;

  void add(Element w, const LaurentPoly& c);
  /// Right multiplication by T_{s_i}.
  HeckeElem times_simple(int i) const;

  friend HeckeElem operator*(const HeckeElem& a, const HeckeElem& b);
  friend HeckeElem operator+(const HeckeElem& a, const HeckeElem& b);
  friend bool operator==(const HeckeElem& a, const HeckeElem& b);

 private:
  const CoxeterGroup* group_;
  std::map<std::uint32_t, LaurentPoly> coeffs_;
};

/// Lambda_w(a) = sum over y <= w in supp(a) of a_y q^l(y).
LaurentPoly lambda(Element w, const HeckeElem& a);

/// Theta(x, y, w) = Lambda_w(T_x T_{y^-1}).
LaurentPoly theta(const CoxeterGroup& group, Element x, Element y, Element w);

inline constexpr std::size_t kMaxThetaTableOrder = 128;

/// All Theta(x, y, w) values of a group, filled once and then read-only.
class ThetaTable {
 public:
  explicit ThetaTable(const CoxeterGroup& group);
  const LaurentPoly& operator()(Element x, Element y, Element w) const;
  std::size_t size() const { return values_.size(); }

 private:
  const CoxeterGroup* group_;
  std::vector<LaurentPoly> values_;  // index ((x * n) + y) * n + w
};

}  // namespace bhl
