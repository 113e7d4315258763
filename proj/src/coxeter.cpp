#include "bhl/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <charconv>
#include <set>
#include <unordered_map>

namespace bhl {

namespace {

std::atomic<std::uint32_t> next_tag{1};

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

// Symmetric Gram matrix of the simple roots, scaled to integers.
std::vector<int> gram_matrix(const CartanType& t) {
  const int r = t.rank;
  std::vector<int> g(static_cast<std::size_t>(r * r), 0);
  auto at = [&](int i, int j) -> int& { return g[static_cast<std::size_t>(i * r + j)]; };
  auto link = [&](int i, int j, int v) { at(i, j) = at(j, i) = v; };
  for (int i = 0; i < r; ++i) at(i, i) = 2;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1);
      at(r - 1, r - 1) = 1;
      break;
    case Family::C:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 2, r - 1, -2);
      at(r - 1, r - 1) = 4;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1);
      link(r - 3, r - 1, -1);
      break;
    case Family::G:
      link(0, 1, -3);
      at(1, 1) = 6;
      break;
  }
  return g;
}

std::string key_string(std::span<const std::int16_t> key) {
  return std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(std::int16_t));
}

}  // namespace

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw std::invalid_argument("unknown Cartan type '" + std::string(label) + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(label[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'G': t.family = Family::G; break;
    default: throw std::invalid_argument("unknown Cartan type '" + std::string(label) + "'");
  }
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("unknown Cartan type '" + std::string(label) + "'");
  }
  bool ok = t.rank >= 1 && t.rank <= kMaxArity;
  switch (t.family) {
    case Family::A: break;
    case Family::B:
    case Family::C: ok = ok && t.rank >= 2; break;
    case Family::D: ok = ok && t.rank >= 4; break;
    case Family::G: ok = ok && t.rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("unsupported Cartan type '" + std::string(label) + "'");
  return t;
}

std::string CartanType::name() const {
  static constexpr char letters[] = {'A', 'B', 'C', 'D', 'G'};
  return letters[static_cast<int>(family)] + std::to_string(rank);
}

std::size_t CartanType::expected_order() const {
  switch (family) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return (std::size_t{1} << rank) * factorial(rank);
    case Family::D: return (std::size_t{1} << (rank - 1)) * factorial(rank);
    case Family::G: return 12;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Construction

int CoxeterGroup::cartan(int i, int j) const { return 2 * gram(i, j) / gram(i, i); }

CoxeterGroup CoxeterGroup::build(CartanType type, std::size_t max_order) {
  if (type.expected_order() > max_order) {
    throw CapExceeded("group " + type.name() + " has order " + std::to_string(type.expected_order()) +
                      ", above the cap " + std::to_string(max_order));
  }
  CoxeterGroup g;
  g.type_ = type;
  g.tag_ = next_tag.fetch_add(1);
  g.gram_ = gram_matrix(type);
  const int r = type.rank;
  const auto ur = static_cast<std::size_t>(r);

  auto reflect = [&](int i, std::span<const int> beta) {
    std::vector<int> out(beta.begin(), beta.end());
    int pairing = 0;
    for (int j = 0; j < r; ++j) pairing += g.cartan(i, j) * beta[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] -= pairing;
    return out;
  };

  // Root closure from the simple roots.
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> a(ur, 0);
    a[static_cast<std::size_t>(i)] = 1;
    all.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < r; ++i) {
        auto img = reflect(i, b);
        if (all.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> positive;
  for (const auto& b : all) {
    if (std::all_of(b.begin(), b.end(), [](int c) { return c >= 0; })) positive.push_back(b);
  }
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int c : a) ha += c;
    for (int c : b) hb += c;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  g.roots_ = std::make_shared<const RootData>(r, positive);

  // Breadth-first closure of the identity under left multiplication by s_i.
  const std::size_t key_len = ur * ur;
  std::vector<std::int16_t> identity_key(key_len, 0);
  for (std::size_t j = 0; j < ur; ++j) identity_key[j * ur + j] = 1;
  std::unordered_map<std::string, std::uint32_t> lookup;
  g.keys_ = identity_key;
  g.length_.push_back(0);
  lookup.emplace(key_string(identity_key), 0);
  std::vector<std::vector<std::uint32_t>> left(ur);

  std::vector<int> col(ur);
  std::vector<std::int16_t> key(key_len);
  for (std::size_t w = 0; w < g.length_.size(); ++w) {
    for (int i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < ur; ++j) {
        for (std::size_t k = 0; k < ur; ++k) col[k] = g.keys_[w * key_len + j * ur + k];
        auto img = reflect(i, col);
        for (std::size_t k = 0; k < ur; ++k) key[j * ur + k] = static_cast<std::int16_t>(img[k]);
      }
      auto [it, inserted] = lookup.emplace(key_string(key), static_cast<std::uint32_t>(g.length_.size()));
      if (inserted) {
        if (g.length_.size() >= max_order) throw CapExceeded("group order exceeds the cap");
        g.keys_.insert(g.keys_.end(), key.begin(), key.end());
        g.length_.push_back(static_cast<std::uint8_t>(g.length_[w] + 1));
      }
      left[static_cast<std::size_t>(i)].push_back(it->second);
    }
  }
  const std::size_t n = g.length_.size();
  g.order_ = n;

  g.left_gen_.resize(ur * n);
  g.right_gen_.resize(ur * n);
  for (std::size_t i = 0; i < ur; ++i) {
    std::copy(left[i].begin(), left[i].end(), g.left_gen_.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  // w s_i sends alpha_j to w(alpha_j) - a_ij w(alpha_i).
  for (std::size_t w = 0; w < n; ++w) {
    const std::int16_t* kw = &g.keys_[w * key_len];
    for (int i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < ur; ++j) {
        int a = g.cartan(i, static_cast<int>(j));
        for (std::size_t k = 0; k < ur; ++k) {
          key[j * ur + k] = static_cast<std::int16_t>(kw[j * ur + k] - a * kw[static_cast<std::size_t>(i) * ur + k]);
        }
      }
      g.right_gen_[static_cast<std::size_t>(i) * n + w] = lookup.at(key_string(key));
    }
  }

  g.left_desc_.assign(n, 0);
  g.right_desc_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t i = 0; i < ur; ++i) {
      if (g.length_[g.left_gen_[i * n + w]] < g.length_[w]) g.left_desc_[w] |= 1u << i;
      if (g.length_[g.right_gen_[i * n + w]] < g.length_[w]) g.right_desc_[w] |= 1u << i;
    }
  }
  g.longest_ = static_cast<std::uint32_t>(std::max_element(g.length_.begin(), g.length_.end()) - g.length_.begin());

  // Canonical words: peel the smallest left descent.
  g.words_.assign(n, {});
  for (std::size_t w = 1; w < n; ++w) {
    int i = std::countr_zero(g.left_desc_[w]);
    std::uint32_t rest = g.left_gen_[static_cast<std::size_t>(i) * n + w];
    auto& word = g.words_[w];
    word.push_back(static_cast<std::uint8_t>(i + 1));
    word.insert(word.end(), g.words_[rest].begin(), g.words_[rest].end());
  }

  g.inverse_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::uint32_t x = 0;
    for (auto it = g.words_[w].rbegin(); it != g.words_[w].rend(); ++it) {
      x = g.right_gen_[static_cast<std::size_t>(*it - 1) * n + x];
    }
    g.inverse_[w] = x;
  }

  if (n <= 2048) {
    g.mul_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::uint32_t x = static_cast<std::uint32_t>(a);
        for (auto letter : g.words_[b]) x = g.right_gen_[static_cast<std::size_t>(letter - 1) * n + x];
        g.mul_table_[a * n + b] = x;
      }
    }
  }

  // r_beta(alpha_j) = alpha_j - <beta^vee, alpha_j> beta.
  const auto& rd = *g.roots_;
  for (int b = 0; b < rd.size(); ++b) {
    auto beta = rd.root(b);
    int norm = 0;
    for (int k = 0; k < r; ++k) {
      for (int l = 0; l < r; ++l) norm += beta[static_cast<std::size_t>(k)] * beta[static_cast<std::size_t>(l)] * g.gram(k, l);
    }
    for (std::size_t j = 0; j < ur; ++j) {
      int ip = 0;
      for (int k = 0; k < r; ++k) ip += beta[static_cast<std::size_t>(k)] * g.gram(k, static_cast<int>(j));
      int coef = 2 * ip / norm;
      for (std::size_t k = 0; k < ur; ++k) {
        key[j * ur + k] = static_cast<std::int16_t>((j == k ? 1 : 0) - coef * beta[k]);
      }
    }
    g.reflection_of_root_.push_back(lookup.at(key_string(key)));
  }

  g.build_bruhat();
  return g;
}

void CoxeterGroup::build_bruhat() {
  // Lifting: for a left descent s of w, u <= w iff u <= sw or su <= sw,
  // so row(w) = row(sw) united with s * row(sw).
  const std::size_t n = order_;
  bruhat_stride_ = (n + 63) / 64;
  bruhat_.assign(n * bruhat_stride_, 0);
  auto set_bit = [&](std::size_t row, std::size_t col) { bruhat_[row * bruhat_stride_ + col / 64] |= std::uint64_t{1} << (col % 64); };
  set_bit(0, 0);
  for (std::size_t w = 1; w < n; ++w) {
    std::size_t s = static_cast<std::size_t>(std::countr_zero(left_desc_[w]));
    std::size_t sw = left_gen_[s * n + w];
    const std::uint64_t* src = &bruhat_[sw * bruhat_stride_];
    std::uint64_t* dst = &bruhat_[w * bruhat_stride_];
    std::copy(src, src + bruhat_stride_, dst);
    for (std::size_t blk = 0; blk < bruhat_stride_; ++blk) {
      std::uint64_t bits = src[blk];
      while (bits) {
        std::size_t u = blk * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        std::size_t su = left_gen_[s * n + u];
        dst[su / 64] |= std::uint64_t{1} << (su % 64);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Queries

void CoxeterGroup::require(Element w) const {
  if (w.tag_ != tag_ || w.index_ >= order_) throw std::invalid_argument("element does not belong to this group");
}

Element CoxeterGroup::element(std::size_t index) const {
  if (index >= order_) throw std::out_of_range("element index out of range");
  return Element(static_cast<std::uint32_t>(index), tag_);
}

Element CoxeterGroup::simple(int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple reflection index out of range");
  return element(left_gen_[static_cast<std::size_t>(i - 1) * order_]);
}

std::vector<Element> CoxeterGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(Element(static_cast<std::uint32_t>(i), tag_));
  return out;
}

int CoxeterGroup::length(Element w) const { return length_[idx(w)]; }

Element CoxeterGroup::mul(Element a, Element b) const {
  std::uint32_t x = idx(a);
  std::uint32_t y = idx(b);
  if (!mul_table_.empty()) return Element(mul_table_[x * order_ + y], tag_);
  for (auto letter : words_[y]) x = right_gen_[static_cast<std::size_t>(letter - 1) * order_ + x];
  return Element(x, tag_);
}

Element CoxeterGroup::inv(Element w) const { return Element(inverse_[idx(w)], tag_); }

Element CoxeterGroup::left_mul_simple(int i, Element w) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple reflection index out of range");
  return Element(left_gen_[static_cast<std::size_t>(i - 1) * order_ + idx(w)], tag_);
}

Element CoxeterGroup::right_mul_simple(Element w, int i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("simple reflection index out of range");
  return Element(right_gen_[static_cast<std::size_t>(i - 1) * order_ + idx(w)], tag_);
}

bool CoxeterGroup::is_left_descent(int i, Element w) const { return (left_descents(w) >> (i - 1)) & 1u; }
bool CoxeterGroup::is_right_descent(Element w, int i) const { return (right_descents(w) >> (i - 1)) & 1u; }
std::uint32_t CoxeterGroup::left_descents(Element w) const { return left_desc_[idx(w)]; }
std::uint32_t CoxeterGroup::right_descents(Element w) const { return right_desc_[idx(w)]; }

bool CoxeterGroup::bruhat_leq(Element u, Element w) const {
  std::size_t a = idx(u);
  std::size_t b = idx(w);
  return (bruhat_[b * bruhat_stride_ + a / 64] >> (a % 64)) & 1u;
}

bool CoxeterGroup::weak_leq_right(Element u, Element w) const {
  return length(u) + length(mul(inv(u), w)) == length(w);
}

bool CoxeterGroup::weak_leq_left(Element u, Element w) const {
  return length(u) + length(mul(w, inv(u))) == length(w);
}

std::vector<Element> CoxeterGroup::interval(Element u, Element w) const {
  std::vector<Element> out;
  if (!bruhat_leq(u, w)) return out;
  for (std::size_t x = 0; x < order_; ++x) {
    Element e(static_cast<std::uint32_t>(x), tag_);
    if (bruhat_leq(u, e) && bruhat_leq(e, w)) out.push_back(e);
  }
  return out;
}

LaurentPoly CoxeterGroup::poincare(Element u, Element w) const {
  std::vector<LaurentPoly::Term> terms;
  for (Element x : interval(u, w)) terms.push_back({ExponentVector(0, length(x)), Integer(1)});
  return LaurentPoly::from_terms(0, std::move(terms));
}

std::vector<int> CoxeterGroup::act(Element w, std::span<const int> coords) const {
  const auto ur = static_cast<std::size_t>(rank());
  if (coords.size() != ur) throw std::invalid_argument("root coordinate length mismatch");
  const std::int16_t* kw = &keys_[idx(w) * ur * ur];
  std::vector<int> out(ur, 0);
  for (std::size_t j = 0; j < ur; ++j) {
    for (std::size_t k = 0; k < ur; ++k) out[k] += coords[j] * kw[j * ur + k];
  }
  return out;
}

SignedRoot CoxeterGroup::root_action(Element w, int root) const {
  if (root < 0 || root >= roots_->size()) throw std::invalid_argument("root index out of range");
  auto img = act(w, roots_->root(root));
  bool negative = std::any_of(img.begin(), img.end(), [](int c) { return c < 0; });
  if (negative) {
    for (int& c : img) c = -c;
  }
  int found = roots_->find(img);
  if (found < 0) throw std::logic_error("root image is not a root");
  return {found, negative};
}

Element CoxeterGroup::reflection(int root) const {
  if (root < 0 || root >= roots_->size()) throw std::invalid_argument("root index out of range");
  return Element(reflection_of_root_[static_cast<std::size_t>(root)], tag_);
}

std::span<const std::uint8_t> CoxeterGroup::reduced_word(Element w) const { return words_[idx(w)]; }

std::string CoxeterGroup::word(Element w) const {
  const auto& letters = words_[idx(w)];
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (rank() >= 10 && i) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

Element CoxeterGroup::from_word(std::span<const int> letters) const {
  std::uint32_t x = 0;
  for (int i : letters) {
    if (i < 1 || i > rank()) throw std::invalid_argument("letter " + std::to_string(i) + " out of range");
    x = right_gen_[static_cast<std::size_t>(i - 1) * order_ + x];
  }
  return Element(x, tag_);
}

Element CoxeterGroup::parse(std::string_view text) const {
  auto bad = [&] { return std::invalid_argument("malformed element word '" + std::string(text) + "'"); };
  if (text == "e") return identity();
  if (text.empty()) throw bad();
  std::vector<int> letters;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      auto tok = text.substr(pos, end - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) throw bad();
      letters.push_back(v);
      pos = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw bad();
      letters.push_back(c - '0');
    }
  }
  for (int i : letters) {
    if (i < 1 || i > rank()) throw bad();
  }
  return from_word(letters);
}

std::vector<std::size_t> CoxeterGroup::length_histogram() const {
  std::vector<std::size_t> h(static_cast<std::size_t>(length_[longest_]) + 1, 0);
  for (auto l : length_) ++h[l];
  return h;
}

}  // namespace bhl
