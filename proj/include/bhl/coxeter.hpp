#pragma once

// Root systems and fully enumerated finite Weyl groups.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bhl/polyring.hpp"

namespace bhl {

inline constexpr std::size_t kDefaultMaxOrder = 50000;

/// Thrown when a group would exceed the configured order cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { A, B, C, D, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses labels such as "A3", "B2", "C2", "G2".
  static CartanType parse(std::string_view label);
  std::string name() const;
  /// |W| from the classical order formulas.
  std::size_t expected_order() const;
  bool simply_laced() const { return family == Family::A || family == Family::D; }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Handle to an element of one CoxeterGroup. The group tag guards against
/// mixing elements of different groups.
class Element {
 public:
  Element() = default;
  std::uint32_t index() const { return index_; }
  std::uint32_t group_tag() const { return tag_; }
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) { return a.index_ <=> b.index_; }

 private:
  friend class CoxeterGroup;
  Element(std::uint32_t index, std::uint32_t tag) : index_(index), tag_(tag) {}
  std::uint32_t index_ = 0;
  std::uint32_t tag_ = 0;
};

/// An image w(beta) of a positive root: a positive root index and a sign.
struct SignedRoot {
  int index = 0;
  bool negative = false;
  friend bool operator==(const SignedRoot&, const SignedRoot&) = default;
};

class CoxeterGroup {
 public:
  static CoxeterGroup build(CartanType type, std::size_t max_order = kDefaultMaxOrder);

  CoxeterGroup(CoxeterGroup&&) noexcept = default;
  CoxeterGroup& operator=(CoxeterGroup&&) noexcept = default;
  CoxeterGroup(const CoxeterGroup&) = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t order() const { return order_; }
  std::uint32_t tag() const { return tag_; }

  const std::shared_ptr<const RootData>& roots() const { return roots_; }
  int num_positive_roots() const { return roots_->size(); }
  /// Integer Gram matrix entry (alpha_i, alpha_j) in a normalization with integral Cartan entries.
  int gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * rank() + j)]; }
  /// <alpha_i^vee, alpha_j>
  int cartan(int i, int j) const;

  Element element(std::size_t index) const;
  Element identity() const { return element(0); }
  Element longest() const { return element(longest_); }
  /// Simple reflection s_i, 1-based as in words.
  Element simple(int i) const;
  std::vector<Element> elements() const;

  int length(Element w) const;
  Element mul(Element a, Element b) const;
  Element inv(Element w) const;
  /// s_i * w and w * s_i, 1-based i.
  Element left_mul_simple(int i, Element w) const;
  Element right_mul_simple(Element w, int i) const;
  bool is_left_descent(int i, Element w) const;
  bool is_right_descent(Element w, int i) const;
  /// Bit i-1 set iff s_i is a descent.
  std::uint32_t left_descents(Element w) const;
  std::uint32_t right_descents(Element w) const;

  bool bruhat_leq(Element u, Element w) const;
  bool bruhat_less(Element u, Element w) const { return u != w && bruhat_leq(u, w); }
  /// u <=_R w iff l(u) + l(u^-1 w) = l(w).
  bool weak_leq_right(Element u, Element w) const;
  /// u <=_L w iff l(u) + l(w u^-1) = l(w).
  bool weak_leq_left(Element u, Element w) const;
  /// Elements of [u, w] in index order; empty when u is not below w.
  std::vector<Element> interval(Element u, Element w) const;
  /// sum_{x in [u,w]} q^l(x), with arity 0.
  LaurentPoly poincare(Element u, Element w) const;

  /// w(beta) for a positive root index beta.
  SignedRoot root_action(Element w, int root) const;
  /// w applied to arbitrary simple-root coordinates.
  std::vector<int> act(Element w, std::span<const int> coords) const;
  /// The reflection r_beta for a positive root index.
  Element reflection(int root) const;

  /// Lexicographically smallest reduced word (1-based letters).
  std::span<const std::uint8_t> reduced_word(Element w) const;
  /// "e", "121", or "1,2,1" for rank >= 10.
  std::string word(Element w) const;
  /// Product of a word; accepts "e", digit strings and comma-separated indices.
  Element parse(std::string_view text) const;
  Element from_word(std::span<const int> letters) const;

  /// Number of elements of each length.
  std::vector<std::size_t> length_histogram() const;
  bool has_mul_table() const { return !mul_table_.empty(); }

  void require(Element w) const;

 private:
  CoxeterGroup() = default;
  std::uint32_t idx(Element w) const {
    require(w);
    return w.index();
  }
  void build_bruhat();

  CartanType type_;
  std::uint32_t tag_ = 0;
  std::size_t order_ = 0;
  std::vector<int> gram_;
  std::shared_ptr<const RootData> roots_;
  std::vector<std::int16_t> keys_;  // order_ x rank x rank images of simple roots
  std::vector<std::uint8_t> length_;
  std::vector<std::uint32_t> left_gen_;   // rank x order_
  std::vector<std::uint32_t> right_gen_;  // rank x order_
  std::vector<std::uint32_t> left_desc_;
  std::vector<std::uint32_t> right_desc_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> mul_table_;  // present for small groups only
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::uint32_t> reflection_of_root_;
  std::size_t bruhat_stride_ = 0;
  std::vector<std::uint64_t> bruhat_;  // row w holds {u : u <= w}
  std::uint32_t longest_ = 0;
};

}  // namespace bhl
