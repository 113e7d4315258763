#include "bhl/demazure.hpp"

#include <ranges>

namespace bhl {

namespace {

std::vector<int> letters_of(const CoxeterGroup& g, Element w) {
  auto word = g.reduced_word(w);
  return std::vector<int>(word.begin(), word.end());
}

}  // namespace

Element Demazure::up_left_step(int i, Element x) const {
  return group_->is_left_descent(i, x) ? x : group_->left_mul_simple(i, x);
}

Element Demazure::down_left_step(int i, Element x) const {
  return group_->is_left_descent(i, x) ? group_->left_mul_simple(i, x) : x;
}

Element Demazure::up_right_step(Element x, int i) const {
  return group_->is_right_descent(x, i) ? x : group_->right_mul_simple(x, i);
}

Element Demazure::down_right_step(Element x, int i) const {
  return group_->is_right_descent(x, i) ? group_->right_mul_simple(x, i) : x;
}

// Left actions apply the rightmost generator first.
Element Demazure::up_left_word(std::span<const int> word, Element x) const {
  for (int i : std::views::reverse(word)) x = up_left_step(i, x);
  return x;
}

Element Demazure::down_left_word(std::span<const int> word, Element x) const {
  for (int i : std::views::reverse(word)) x = down_left_step(i, x);
  return x;
}

Element Demazure::up_right_word(Element x, std::span<const int> word) const {
  for (int i : word) x = up_right_step(x, i);
  return x;
}

Element Demazure::down_right_word(Element x, std::span<const int> word) const {
  for (int i : word) x = down_right_step(x, i);
  return x;
}

Element Demazure::up_left(Element w, Element x) const { return up_left_word(letters_of(*group_, w), x); }
Element Demazure::down_left(Element w, Element x) const { return down_left_word(letters_of(*group_, w), x); }
Element Demazure::up_right(Element x, Element w) const { return up_right_word(x, letters_of(*group_, w)); }
Element Demazure::down_right(Element x, Element w) const { return down_right_word(x, letters_of(*group_, w)); }

Element Demazure::circ(Element u, Element v) const {
  if (!circ_table_.empty()) {
    group_->require(u);
    group_->require(v);
    return group_->element(circ_table_[u.index() * group_->order() + v.index()]);
  }
  return up_right(u, v);
}

Element Demazure::circ_word(std::span<const int> word) const { return up_right_word(group_->identity(), word); }

Element Demazure::mixed_meet(Element u, Element w) const {
  return group_->mul(u, down_right(group_->inv(u), w));
}

Element Demazure::v_min(Element u, Element w) const { return down_left(group_->inv(w), u); }

void Demazure::materialize_circ_table() const {
  std::call_once(table_once_, [this] {
    const std::size_t n = group_->order();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = up_right(group_->element(a), group_->element(b)).index();
      }
    }
    circ_table_ = std::move(table);
  });
}

}  // namespace bhl
