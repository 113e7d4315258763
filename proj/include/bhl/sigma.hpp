#pragma once

// sigma(u, v, w) = sum_{x >= u, y <= v} q^-l(y) Theta(x, y, w) bar(r_{y,v}).
// Also GK-type testing and classification of all triples.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bhl/coxeter.hpp"
#include "bhl/demazure.hpp"
#include "bhl/hecke.hpp"
#include "bhl/polyring.hpp"
#include "bhl/rpoly.hpp"

namespace bhl {

class SigmaEngine {
 public:
  /// Uses a prefilled table when given, otherwise builds and fills one.
  explicit SigmaEngine(const CoxeterGroup& group, std::unique_ptr<RTable> rtable = nullptr);

  const CoxeterGroup& group() const { return *group_; }
  const Demazure& demazure() const { return dem_; }
  const RTable& rtable() const { return *rtable_; }
  bool has_theta_table() const { return theta_.has_value(); }

  /// The full double sum; no shortcut on the vanishing region.
  RationalFn sigma(Element u, Element v, Element w) const;
  /// sigma(u, v_min(u, w), w) as a q-polynomial of arity 0.
  /// Throws std::logic_error if x-dependence survives.
  LaurentPoly sigma0(Element u, Element w) const;
  /// q^-l(v) sum_{z in [u, w v]} q^l(z) with v = v_min(u, w).
  LaurentPoly sigma0_bruhat(Element u, Element w) const;

  /// y^-1 -> q^-l(y) bar(r_{y,v}).
  std::map<Element, RationalFn> mu_element(Element v) const;

  /// sigma0(u, w) * prod_{alpha in S(u,v,w)} (1 - q^-1 x^alpha) / (1 - x^alpha).
  RationalFn gk_product(Element u, Element v, Element w) const;
  /// Requires v >= v_min(u, w); throws std::invalid_argument otherwise.
  bool is_gk(Element u, Element v, Element w) const;

  LaurentPoly theta(Element x, Element y, Element w) const;

  /// A_y = sum_{x >= u} Theta(x, y, w) for every y, indexed by y.
  std::vector<LaurentPoly> theta_column_sums(Element u, Element w) const;
  /// sigma from precomputed column sums.
  RationalFn sigma_from_sums(std::span<const LaurentPoly> sums, Element v) const;

 private:
  const CoxeterGroup* group_;
  Demazure dem_;
  std::unique_ptr<RTable> rtable_;
  std::optional<ThetaTable> theta_;
  // For each v: the union D_v of denominators of r_{y,v}, and for each y <= v
  // the numerator of q^-l(y) bar(r_{y,v}) over D_v.
  std::vector<std::vector<int>> common_den_;
  std::vector<LaurentPoly> scaled_num_;  // index y * n + v
};

struct ClassificationRow {
  std::string u, v, w;
  bool is_gk = false;
  std::string sigma0;
};

struct ClassificationReport {
  CartanType type;
  std::size_t total = 0;
  std::size_t nonzero = 0;
  std::size_t gk = 0;
  /// Triples with v >= v_min whose sigma nevertheless vanished; expected empty.
  std::size_t vanished = 0;
  std::vector<std::array<std::string, 3>> exceptions;
  std::vector<ClassificationRow> rows;
};

/// Classifies every triple. The result does not depend on jobs.
ClassificationReport classify(const SigmaEngine& engine, unsigned jobs = 1);

/// Runs body(k) for k in [0, count) on up to jobs threads.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

/// Optionally reports the number of (u, w) pairs or triples examined.
bool verify_main_theorem(const SigmaEngine& engine, unsigned jobs = 1, std::size_t* checked = nullptr);
/// Exhaustive for |W| <= 10, otherwise sample_size random triples with v not >= v_min.
bool verify_vanishing(const SigmaEngine& engine, std::size_t sample_size = 2000, std::uint64_t seed = 1,
                      std::size_t* checked = nullptr);

/// Reduced denominator is a set contained in the given roots.
bool poles_within(const RationalFn& f, std::span<const int> roots);

}  // namespace bhl
