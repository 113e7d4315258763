#include "bhl/polyring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bhl {

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(int arity, int q_degree) : q_(q_degree), arity_(arity) {
  if (arity < 0 || arity > kMaxArity) throw std::invalid_argument("exponent arity out of range");
}

ExponentVector::ExponentVector(int q_degree, std::span<const int> x_degrees)
    : ExponentVector(static_cast<int>(x_degrees.size()), q_degree) {
  std::copy(x_degrees.begin(), x_degrees.end(), x_.begin());
}

int ExponentVector::total_x_degree() const {
  int t = 0;
  for (int i = 0; i < arity_; ++i) t += x_[static_cast<std::size_t>(i)];
  return t;
}

bool ExponentVector::x_free() const {
  return std::all_of(x_.begin(), x_.begin() + arity_, [](int d) { return d == 0; });
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  q_ += o.q_;
  for (int i = 0; i < kMaxArity; ++i) x_[static_cast<std::size_t>(i)] += o.x_[static_cast<std::size_t>(i)];
  arity_ = std::max(arity_, o.arity_);
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  q_ -= o.q_;
  for (int i = 0; i < kMaxArity; ++i) x_[static_cast<std::size_t>(i)] -= o.x_[static_cast<std::size_t>(i)];
  arity_ = std::max(arity_, o.arity_);
  return *this;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.total_x_degree() <=> b.total_x_degree(); c != 0) return c;
  for (std::size_t i = 0; i < kMaxArity; ++i) {
    if (auto c = b.x_[i] <=> a.x_[i]; c != 0) return c;
  }
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  return a.arity_ <=> b.arity_;
}

// ---------------------------------------------------------------------------
// LaurentPoly

namespace {

void sort_and_combine(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LaurentPoly::Term& a, const LaurentPoly::Term& b) { return a.exponent < b.exponent; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exponent == terms[i].exponent) {
      c += terms[j].coeff;
      ++j;
    }
    if (c != 0) {
      terms[out].exponent = terms[i].exponent;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// a + sign * b for sorted term lists.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     std::span<const LaurentPoly::Term> b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back(b[j]);
      if (negate_b) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Integer c = negate_b ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void append_power(std::string& out, const char* var, int deg) {
  if (!out.empty()) out += '*';
  out += var;
  if (deg != 1) out += '^' + std::to_string(deg);
}

}  // namespace

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
  if (arity < 0 || arity > kMaxArity) throw std::invalid_argument("polynomial arity out of range");
}

LaurentPoly LaurentPoly::constant(int arity, const Integer& c) {
  LaurentPoly p(arity);
  if (c != 0) p.terms_.push_back({ExponentVector(arity), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& e, const Integer& c) {
  LaurentPoly p(e.arity());
  if (c != 0) p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::q_power(int arity, int k) { return monomial(ExponentVector(arity, k)); }

LaurentPoly LaurentPoly::from_terms(int arity, std::vector<Term> terms) {
  LaurentPoly p(arity);
  for (const auto& t : terms) {
    if (t.exponent.arity() != arity) throw std::invalid_argument("term arity mismatch");
  }
  sort_and_combine(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::x_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exponent.x_free(); });
}

std::optional<int> LaurentPoly::min_q_degree() const {
  if (terms_.empty()) return std::nullopt;
  int m = terms_.front().exponent.q_degree();
  for (const auto& t : terms_) m = std::min(m, t.exponent.q_degree());
  return m;
}

std::optional<int> LaurentPoly::max_q_degree() const {
  if (terms_.empty()) return std::nullopt;
  int m = terms_.front().exponent.q_degree();
  for (const auto& t : terms_) m = std::max(m, t.exponent.q_degree());
  return m;
}

Integer LaurentPoly::coeff(const ExponentVector& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const ExponentVector& v) { return t.exponent < v; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::with_arity(int arity) const {
  if (!x_free()) throw std::invalid_argument("with_arity: polynomial depends on x");
  LaurentPoly p(arity);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({ExponentVector(arity, t.exponent.q_degree()), t.coeff});
  return p;
}

LaurentPoly LaurentPoly::bar_q() const {
  LaurentPoly p(arity_);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.exponent.set_q_degree(-t.exponent.q_degree());
  // Negating q only reorders terms sharing an x-part.
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  return p;
}

LaurentPoly LaurentPoly::shifted(const ExponentVector& e) const {
  if (e.arity() != arity_) throw std::invalid_argument("shift arity mismatch");
  LaurentPoly p(arity_);
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.exponent += e;
  // A uniform shift preserves the term order.
  return p;
}

Integer LaurentPoly::value_at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

long double LaurentPoly::evaluate(long double q, std::span<const long double> x) const {
  if (static_cast<int>(x.size()) != arity_) throw std::invalid_argument("evaluate: arity mismatch");
  long double s = 0;
  for (const auto& t : terms_) {
    long double v = t.coeff.convert_to<long double>() * std::pow(q, static_cast<long double>(t.exponent.q_degree()));
    for (int i = 0; i < arity_; ++i) {
      int d = t.exponent.x_degree(i);
      if (d != 0) v *= std::pow(x[static_cast<std::size_t>(i)], static_cast<long double>(d));
    }
    s += v;
  }
  return s;
}

void LaurentPoly::check_arity(const LaurentPoly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_arity(o);
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_arity(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_arity(b);
  LaurentPoly p(a.arity_);
  if (a.terms_.empty() || b.terms_.empty()) return p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) p.terms_.push_back({s.exponent + t.exponent, s.coeff * t.coeff});
  }
  sort_and_combine(p.terms_);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    if (t.exponent.q_degree() != 0) append_power(mono, "q", t.exponent.q_degree());
    for (int i = 0; i < arity_; ++i) {
      if (int d = t.exponent.x_degree(i); d != 0) {
        std::string var = "x" + std::to_string(i + 1);
        append_power(mono, var.c_str(), d);
      }
    }
    bool negative = t.coeff < 0;
    Integer mag = negative ? Integer(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

std::optional<LaurentPoly> binomial_divide(const LaurentPoly& a, std::span<const int> beta) {
  if (static_cast<int>(beta.size()) != a.arity()) throw std::invalid_argument("binomial_divide: arity mismatch");
  int pivot = -1;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  }
  if (pivot < 0) throw std::invalid_argument("binomial_divide: zero root");
  const int bp = beta[static_cast<std::size_t>(pivot)];

  // Terms are grouped into lines e + k*beta; on each line the polynomial is a
  // Laurent polynomial in t = x^beta, divisible by (1 - t) iff its
  // coefficients sum to zero, with prefix sums as the quotient.
  struct Entry {
    ExponentVector base;
    int k;
    const Integer* coeff;
  };
  std::vector<Entry> entries;
  entries.reserve(a.size());
  for (const auto& t : a.terms()) {
    int k = floor_div(t.exponent.x_degree(pivot), bp);
    ExponentVector base = t.exponent;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      base.set_x_degree(static_cast<int>(i), base.x_degree(static_cast<int>(i)) - k * beta[i]);
    }
    entries.push_back({base, k, &t.coeff});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.base != y.base) return x.base < y.base;
    return x.k < y.k;
  });

  std::vector<LaurentPoly::Term> quotient;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    Integer running = 0;
    while (j < entries.size() && entries[j].base == entries[i].base) {
      running += *entries[j].coeff;
      bool last = (j + 1 == entries.size()) || entries[j + 1].base != entries[i].base;
      if (last) break;
      // Quotient coefficients for k in [k_j, k_{j+1}) all equal the prefix sum.
      if (running != 0) {
        for (int k = entries[j].k; k < entries[j + 1].k; ++k) {
          ExponentVector e = entries[i].base;
          for (std::size_t d = 0; d < beta.size(); ++d) {
            e.set_x_degree(static_cast<int>(d), e.x_degree(static_cast<int>(d)) + k * beta[d]);
          }
          quotient.push_back({e, running});
        }
      }
      ++j;
    }
    if (running != 0) return std::nullopt;
    i = j + 1;
  }
  return LaurentPoly::from_terms(a.arity(), std::move(quotient));
}

// ---------------------------------------------------------------------------
// RootData

RootData::RootData(int rank, std::vector<std::vector<int>> positive_roots)
    : rank_(rank), roots_(std::move(positive_roots)) {
  if (rank < 0 || rank > kMaxArity) throw std::invalid_argument("root data rank out of range");
  for (const auto& r : roots_) {
    if (static_cast<int>(r.size()) != rank) throw std::invalid_argument("root coordinate length mismatch");
  }
  binomials_.reserve(roots_.size());
  gk_factors_.reserve(roots_.size());
  for (int i = 0; i < size(); ++i) {
    ExponentVector e = exponent(i);
    LaurentPoly one = LaurentPoly::constant(rank_, 1);
    binomials_.push_back(one - LaurentPoly::monomial(e));
    e.set_q_degree(-1);
    gk_factors_.push_back(one - LaurentPoly::monomial(e));
  }
}

ExponentVector RootData::exponent(int index) const { return ExponentVector(0, root(index)); }

int RootData::find(std::span<const int> coords) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (std::equal(coords.begin(), coords.end(), roots_[i].begin(), roots_[i].end())) return static_cast<int>(i);
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Multisets

std::vector<int> multiset_union(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> multiset_difference(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> multiset_sum(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------
// RationalFn

namespace {

LaurentPoly times_binomials(LaurentPoly p, const RootData& roots, std::span<const int> factors) {
  for (int f : factors) {
    if (p.is_zero()) break;
    p *= roots.binomial(f);
  }
  return p;
}

}  // namespace

RationalFn::RationalFn(std::shared_ptr<const RootData> roots, LaurentPoly num, std::vector<int> den)
    : roots_(std::move(roots)), num_(std::move(num)), den_(std::move(den)) {
  if (!roots_) throw std::invalid_argument("RationalFn requires root data");
  if (num_.arity() != roots_->rank()) {
    if (num_.is_zero() || num_.x_free()) {
      num_ = num_.with_arity(roots_->rank());
    } else {
      throw std::invalid_argument("RationalFn numerator arity mismatch");
    }
  }
  for (int d : den_) {
    if (d < 0 || d >= roots_->size()) throw std::invalid_argument("RationalFn: bad root index");
  }
  std::sort(den_.begin(), den_.end());
  reduce();
}

RationalFn RationalFn::zero(std::shared_ptr<const RootData> roots) {
  int r = roots->rank();
  return RationalFn(std::move(roots), LaurentPoly(r));
}

RationalFn RationalFn::one(std::shared_ptr<const RootData> roots) {
  int r = roots->rank();
  return RationalFn(std::move(roots), LaurentPoly::constant(r, 1));
}

void RationalFn::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<int> kept;
  kept.reserve(den_.size());
  for (std::size_t i = 0; i < den_.size(); ++i) {
    // Once a factor fails to divide, its later copies cannot divide either.
    if (!kept.empty() && kept.back() == den_[i]) {
      kept.push_back(den_[i]);
      continue;
    }
    if (auto q = binomial_divide(num_, roots_->root(den_[i]))) {
      num_ = std::move(*q);
    } else {
      kept.push_back(den_[i]);
    }
  }
  den_ = std::move(kept);
}

void RationalFn::check_context(const RationalFn& o) const {
  if (!roots_ || !o.roots_) throw std::invalid_argument("RationalFn without root data");
  if (roots_ != o.roots_ && roots_->rank() != o.roots_->rank()) {
    throw std::invalid_argument("RationalFn arity mismatch");
  }
}

RationalFn RationalFn::bar_q() const {
  RationalFn r = *this;
  r.num_ = num_.bar_q();
  return r;
}

long double RationalFn::evaluate(long double q, std::span<const long double> x) const {
  long double v = num_.evaluate(q, x);
  for (int d : den_) v /= roots_->binomial(d).evaluate(q, x);
  return v;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  a.check_context(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<int> den = multiset_union(a.den_, b.den_);
  LaurentPoly num = times_binomials(a.num_, *a.roots_, multiset_difference(den, a.den_)) +
                    times_binomials(b.num_, *a.roots_, multiset_difference(den, b.den_));
  return RationalFn(a.roots_, std::move(num), std::move(den));
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -num_;
  return r;
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  a.check_context(b);
  if (a.is_zero() || b.is_zero()) return RationalFn::zero(a.roots_);
  return RationalFn(a.roots_, a.num_ * b.num_, multiset_sum(a.den_, b.den_));
}

RationalFn operator*(const RationalFn& a, const LaurentPoly& p) {
  LaurentPoly q = p.arity() == a.num_.arity() ? p : p.with_arity(a.num_.arity());
  return RationalFn(a.roots_, a.num_ * q, a.den_);
}

bool operator==(const RationalFn& a, const RationalFn& b) {
  a.check_context(b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  // Shared factors cancel in the cross-multiplication; the ring is a domain.
  LaurentPoly lhs = times_binomials(a.num_, *a.roots_, multiset_difference(b.den_, a.den_));
  LaurentPoly rhs = times_binomials(b.num_, *a.roots_, multiset_difference(a.den_, b.den_));
  return lhs == rhs;
}

bool RationalFn::same_representation(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }

RationalFn RationalFn::sum(std::span<const RationalFn> terms) {
  if (terms.empty()) throw std::invalid_argument("RationalFn::sum of nothing has no context");
  std::vector<int> den;
  for (const auto& t : terms) {
    terms.front().check_context(t);
    if (!t.is_zero()) den = multiset_union(den, t.den_);
  }
  LaurentPoly num(terms.front().roots_->rank());
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    num += times_binomials(t.num_, *t.roots_, multiset_difference(den, t.den_));
  }
  return RationalFn(terms.front().roots_, std::move(num), std::move(den));
}

std::string RationalFn::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < den_.size();) {
    std::size_t j = i;
    while (j < den_.size() && den_[j] == den_[i]) ++j;
    std::string f = "(" + roots_->binomial(den_[i]).to_string() + ")";
    if (j - i > 1) f += "^" + std::to_string(j - i);
    factors.push_back(std::move(f));
    i = j;
  }
  std::string den;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) den += '*';
    den += factors[i];
  }
  if (factors.size() > 1) den = "(" + den + ")";
  std::string num = num_.to_string();
  if (!num_.is_monomial()) num = "(" + num + ")";
  return num + " / " + den;
}

}  // namespace bhl
