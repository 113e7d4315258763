#pragma once

// The 0-Hecke (Demazure) monoid acting on W: up/down actions, the Demazure
// product, mixed meet and v_min.

#include <cstdint>
#include <mutex>
#include <span>
#include <vector>

#include "bhl/coxeter.hpp"

namespace bhl {

class Demazure {
 public:
  explicit Demazure(const CoxeterGroup& group) : group_(&group) {}

  const CoxeterGroup& group() const { return *group_; }

  // One-step actions of U_i (1-based).
  Element up_left_step(int i, Element x) const;     // U_i ^ x
  Element down_left_step(int i, Element x) const;   // U_i v x
  Element up_right_step(Element x, int i) const;    // x ^ U_i
  Element down_right_step(Element x, int i) const;  // x v U_i

  // Actions of U_w obtained by folding the canonical reduced word of w.
  Element up_left(Element w, Element x) const;     // U_w ^ x
  Element down_left(Element w, Element x) const;   // U_w v x
  Element up_right(Element x, Element w) const;    // x ^ U_w
  Element down_right(Element x, Element w) const;  // x v U_w

  // The same folds along an arbitrary word (reduced or not) for U_{i1}...U_{im}.
  Element up_left_word(std::span<const int> word, Element x) const;
  Element down_left_word(std::span<const int> word, Element x) const;
  Element up_right_word(Element x, std::span<const int> word) const;
  Element down_right_word(Element x, std::span<const int> word) const;

  /// Demazure product u o v.
  Element circ(Element u, Element v) const;
  /// s_{i1} o ... o s_{im}
  Element circ_word(std::span<const int> word) const;

  /// Bruhat-maximal m with m <=_R u and m <= w; m = u (u^-1 v U_w).
  Element mixed_meet(Element u, Element w) const;
  /// U_{w^-1} v u, the smallest v with sigma(u, v, w) != 0.
  Element v_min(Element u, Element w) const;

  /// Precomputes the |W| x |W| Demazure product table; later circ calls are lookups.
  void materialize_circ_table() const;

 private:
  const CoxeterGroup* group_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint32_t> circ_table_;
};

}  // namespace bhl
