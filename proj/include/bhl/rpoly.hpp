#pragma once

// Deformed R-polynomials r_{u,v}(z), classical Kazhdan-Lusztig R-polynomials,
// and the root sets S(u,v), S(u,v,w).

#include <optional>
#include <vector>

#include "bhl/coxeter.hpp"
#include "bhl/demazure.hpp"
#include "bhl/polyring.hpp"

namespace bhl {

/// Memo of r_{u,v} and R_{u,v} for one group. Lookups fill lazily and are not
/// thread-safe; call fill_all() before sharing across threads, then use at().
class RTable {
 public:
  explicit RTable(const CoxeterGroup& group);

  const CoxeterGroup& group() const { return *group_; }

  /// r_{u,v}, pivoting on the smallest left descent of v.
  const RationalFn& r(Element u, Element v);
  /// One recursion step for r_{u,v} with a chosen left descent s of v.
  RationalFn r_with_pivot(Element u, Element v, int s);
  /// Classical R_{u,v} from the limit recursion.
  const LaurentPoly& classical_R(Element u, Element v);

  void fill_all();
  bool filled() const { return missing_ == 0; }
  /// Read-only lookup; throws std::logic_error if the entry was never computed.
  const RationalFn& at(Element u, Element v) const;
  bool contains(Element u, Element v) const;
  /// Seeds an entry (cache loading).
  void insert(Element u, Element v, RationalFn value);

 private:
  std::size_t slot(Element u, Element v) const;

  const CoxeterGroup* group_;
  std::vector<std::optional<RationalFn>> r_;
  std::vector<std::optional<LaurentPoly>> classical_;
  std::size_t missing_;
};

/// Replaces q by q^-1 in the numerator.
inline RationalFn bar(const RationalFn& f) { return f.bar_q(); }

/// S(u,v) = {alpha > 0 : u <= v r_alpha < v}, as sorted root indices.
std::vector<int> s_set(const CoxeterGroup& group, Element u, Element v);
/// S(u,v,w) = S(U_{w^-1} v u, v).
std::vector<int> s_set3(const Demazure& dem, Element u, Element v, Element w);

}  // namespace bhl
