#pragma once

// Exact sparse Laurent polynomials in q and x_1..x_r, and rational functions
// whose denominators are products of binomials (1 - x^beta) for positive roots.

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bhl {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kMaxArity = 8;

/// Exponent of a monomial q^a * x_1^b_1 * ... * x_r^b_r.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int arity, int q_degree = 0);
  ExponentVector(int q_degree, std::span<const int> x_degrees);

  int arity() const { return arity_; }
  int q_degree() const { return q_; }
  int x_degree(int i) const { return x_[static_cast<std::size_t>(i)]; }
  void set_q_degree(int d) { q_ = d; }
  void set_x_degree(int i, int d) { x_[static_cast<std::size_t>(i)] = d; }

  int total_x_degree() const;
  bool x_free() const;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  // Display order: total x-degree, then x_1 descending, x_2 descending, ...,
  // then q-degree ascending.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::int32_t q_ = 0;
  std::int32_t arity_ = 0;
  std::array<std::int32_t, kMaxArity> x_{};
};

class LaurentPoly {
 public:
  struct Term {
    ExponentVector exponent;
    Integer coeff;
  };

  LaurentPoly() = default;
  explicit LaurentPoly(int arity);

  static LaurentPoly constant(int arity, const Integer& c);
  static LaurentPoly monomial(const ExponentVector& e, const Integer& c = 1);
  static LaurentPoly q_power(int arity, int k);
  /// Sums like terms and drops zeros.
  static LaurentPoly from_terms(int arity, std::vector<Term> terms);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  bool x_free() const;
  /// True for a single term c * q^k * x^b.
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<int> min_q_degree() const;
  std::optional<int> max_q_degree() const;
  /// Coefficient of the given exponent (zero when absent).
  Integer coeff(const ExponentVector& e) const;

  /// Re-embeds an x-free polynomial into a context of the given arity.
  LaurentPoly with_arity(int arity) const;
  /// Substitutes q -> q^-1.
  LaurentPoly bar_q() const;
  /// Multiplies by the monomial with exponent e.
  LaurentPoly shifted(const ExponentVector& e) const;
  /// Sum of all coefficients, i.e. the value at q = x_i = 1.
  Integer value_at_one() const;
  long double evaluate(long double q, std::span<const long double> x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical rendering, e.g. "1 + 2*q + 2*q^2 + q^3" or "1 - q^-1*x1".
  std::string to_string() const;

 private:
  void check_arity(const LaurentPoly& o) const;

  int arity_ = 0;
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

/// Exact quotient a / (1 - x^beta), or nullopt when the division leaves a remainder.
std::optional<LaurentPoly> binomial_divide(const LaurentPoly& a, std::span<const int> beta);

/// Positive roots in simple-root coordinates; the context shared by every
/// RationalFn of one root system.
class RootData {
 public:
  RootData(int rank, std::vector<std::vector<int>> positive_roots);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  std::span<const int> root(int index) const { return roots_[static_cast<std::size_t>(index)]; }

  ExponentVector exponent(int index) const;
  /// 1 - x^beta
  const LaurentPoly& binomial(int index) const { return binomials_[static_cast<std::size_t>(index)]; }
  /// 1 - q^-1 x^beta
  const LaurentPoly& gk_factor(int index) const { return gk_factors_[static_cast<std::size_t>(index)]; }

  /// Index of the root with these coordinates, or -1.
  int find(std::span<const int> coords) const;

 private:
  int rank_;
  std::vector<std::vector<int>> roots_;
  std::vector<LaurentPoly> binomials_;
  std::vector<LaurentPoly> gk_factors_;
};

/// num / prod_{beta in den} (1 - x^beta), kept reduced: no factor of den divides num.
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(std::shared_ptr<const RootData> roots, LaurentPoly num, std::vector<int> den = {});

  static RationalFn zero(std::shared_ptr<const RootData> roots);
  static RationalFn one(std::shared_ptr<const RootData> roots);

  const std::shared_ptr<const RootData>& roots() const { return roots_; }
  const LaurentPoly& numerator() const { return num_; }
  /// Sorted multiset of positive-root indices.
  std::span<const int> denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }

  RationalFn bar_q() const;
  long double evaluate(long double q, std::span<const long double> x) const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const LaurentPoly& p);
  RationalFn operator-() const;

  /// Exact equality by cross-multiplication.
  friend bool operator==(const RationalFn& a, const RationalFn& b);
  /// Structural equality of the stored reduced representations.
  bool same_representation(const RationalFn& o) const;

  /// Sum over one common denominator, reduced once at the end.
  static RationalFn sum(std::span<const RationalFn> terms);

  /// e.g. "(1 - q^-1*x1) / (1 - x1)"
  std::string to_string() const;

 private:
  void check_context(const RationalFn& o) const;
  void reduce();

  std::shared_ptr<const RootData> roots_;
  LaurentPoly num_;
  std::vector<int> den_;
};

/// Multiset helpers over sorted vectors of root indices.
std::vector<int> multiset_union(std::span<const int> a, std::span<const int> b);
std::vector<int> multiset_difference(std::span<const int> a, std::span<const int> b);
std::vector<int> multiset_sum(std::span<const int> a, std::span<const int> b);

}  // namespace bhl
