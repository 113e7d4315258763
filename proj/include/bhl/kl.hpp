#pragma once

// Kazhdan-Lusztig polynomials P_{u,v}, inverse polynomials Q_{u,v}, and the
// check that Theta(x, y, w) is a power of q when P_{xy^-1, w} = 1.

#include <optional>
#include <vector>

#include "bhl/coxeter.hpp"
#include "bhl/hecke.hpp"
#include "bhl/polyring.hpp"
#include "bhl/rpoly.hpp"

namespace bhl {

class KLTable {
 public:
  explicit KLTable(RTable& rtable);

  const CoxeterGroup& group() const { return rtable_->group(); }

  /// P_{u,v} from q^{l(v)-l(u)} bar(P_{u,v}) = sum_{u<=z<=v} R_{u,z} P_{z,v}.
  const LaurentPoly& P(Element u, Element v);
  /// Q_{u,v} = P_{w0 v, w0 u}.
  const LaurentPoly& Q(Element u, Element v);

 private:
  RTable* rtable_;
  std::vector<std::optional<LaurentPoly>> memo_;
};

struct ThetaViolation {
  Element x, y, w;
  LaurentPoly value;
};

/// Triples with x y^-1 <= w and P_{xy^-1, w} = 1 where Theta(x, y, w) is not q^k.
/// Optionally reports how many triples satisfied the hypotheses.
std::vector<ThetaViolation> check_theta_power_conjecture(const CoxeterGroup& group, std::size_t* checked = nullptr);

}  // namespace bhl
