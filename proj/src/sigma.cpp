#include "bhl/sigma.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace bhl {

namespace {

LaurentPoly times_binomials(LaurentPoly p, const RootData& roots, std::span<const int> factors) {
  for (int f : factors) p *= roots.binomial(f);
  return p;
}

}  // namespace

SigmaEngine::SigmaEngine(const CoxeterGroup& group, std::unique_ptr<RTable> rtable)
    : group_(&group), dem_(group), rtable_(std::move(rtable)) {
  if (!rtable_) rtable_ = std::make_unique<RTable>(group);
  if (&rtable_->group() != &group) throw std::invalid_argument("r-table belongs to another group");
  if (!rtable_->filled()) rtable_->fill_all();
  if (group.order() <= kMaxThetaTableOrder) theta_.emplace(group);

  const std::size_t n = group.order();
  const int r = group.rank();
  const auto& roots = *group.roots();
  common_den_.resize(n);
  scaled_num_.assign(n * n, LaurentPoly(r));
  for (std::size_t vi = 0; vi < n; ++vi) {
    Element v = group.element(vi);
    std::vector<int> den;
    for (std::size_t yi = 0; yi < n; ++yi) {
      const RationalFn& f = rtable_->at(group.element(yi), v);
      if (!f.is_zero()) den = multiset_union(den, f.denominator());
    }
    for (std::size_t yi = 0; yi < n; ++yi) {
      Element y = group.element(yi);
      const RationalFn& f = rtable_->at(y, v);
      if (f.is_zero()) continue;
      LaurentPoly num = f.numerator().bar_q().shifted(ExponentVector(r, -group.length(y)));
      scaled_num_[yi * n + vi] = times_binomials(std::move(num), roots, multiset_difference(den, f.denominator()));
    }
    common_den_[vi] = std::move(den);
  }
}

LaurentPoly SigmaEngine::theta(Element x, Element y, Element w) const {
  return theta_ ? (*theta_)(x, y, w) : bhl::theta(*group_, x, y, w);
}

std::vector<LaurentPoly> SigmaEngine::theta_column_sums(Element u, Element w) const {
  const auto& g = *group_;
  const std::size_t n = g.order();
  std::vector<LaurentPoly> sums(n, LaurentPoly(0));
  for (Element x : g.elements()) {
    if (!g.bruhat_leq(u, x)) continue;
    for (std::size_t yi = 0; yi < n; ++yi) sums[yi] += theta(x, g.element(yi), w);
  }
  for (auto& s : sums) s = s.with_arity(g.rank());
  return sums;
}

RationalFn SigmaEngine::sigma_from_sums(std::span<const LaurentPoly> sums, Element v) const {
  const auto& g = *group_;
  g.require(v);
  const std::size_t n = g.order();
  LaurentPoly num(g.rank());
  for (std::size_t yi = 0; yi < n; ++yi) {
    const LaurentPoly& scaled = scaled_num_[yi * n + v.index()];
    if (scaled.is_zero() || sums[yi].is_zero()) continue;
    num += sums[yi] * scaled;
  }
  return RationalFn(g.roots(), std::move(num), common_den_[v.index()]);
}

RationalFn SigmaEngine::sigma(Element u, Element v, Element w) const {
  group_->require(u);
  group_->require(v);
  group_->require(w);
  return sigma_from_sums(theta_column_sums(u, w), v);
}

namespace {

LaurentPoly require_x_free(const RationalFn& s) {
  if (!s.is_polynomial() || !s.numerator().x_free()) {
    throw std::logic_error("sigma0 retained x-dependence: " + s.to_string());
  }
  return s.numerator().with_arity(0);
}

}  // namespace

LaurentPoly SigmaEngine::sigma0(Element u, Element w) const {
  return require_x_free(sigma(u, dem_.v_min(u, w), w));
}

LaurentPoly SigmaEngine::sigma0_bruhat(Element u, Element w) const {
  const auto& g = *group_;
  Element v = dem_.v_min(u, w);
  return g.poincare(u, g.mul(w, v)).shifted(ExponentVector(0, -g.length(v)));
}

std::map<Element, RationalFn> SigmaEngine::mu_element(Element v) const {
  const auto& g = *group_;
  std::map<Element, RationalFn> out;
  for (Element y : g.elements()) {
    const RationalFn& r = rtable_->at(y, v);
    if (r.is_zero()) continue;
    out.emplace(g.inv(y), bar(r) * LaurentPoly::q_power(g.rank(), -g.length(y)));
  }
  return out;
}

RationalFn SigmaEngine::gk_product(Element u, Element v, Element w) const {
  const auto& roots = group_->roots();
  std::vector<int> s = s_set3(dem_, u, v, w);
  LaurentPoly num = sigma0(u, w).with_arity(group_->rank());
  for (int a : s) num *= roots->gk_factor(a);
  return RationalFn(roots, std::move(num), std::move(s));
}

bool SigmaEngine::is_gk(Element u, Element v, Element w) const {
  if (!group_->bruhat_leq(dem_.v_min(u, w), v)) throw std::invalid_argument("is_gk needs v >= v_min(u, w)");
  return sigma(u, v, w) == gk_product(u, v, w);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct PairResult {
  std::size_t nonzero = 0, gk = 0, vanished = 0;
  std::vector<std::array<std::uint32_t, 3>> exceptions;
  std::vector<std::pair<std::array<std::uint32_t, 3>, ClassificationRow>> rows;
};

}  // namespace

ClassificationReport classify(const SigmaEngine& engine, unsigned jobs) {
  const auto& g = engine.group();
  const auto& dem = engine.demazure();
  const auto& roots = g.roots();
  const std::size_t n = g.order();
  std::vector<PairResult> results(n * n);

  parallel_for(n * n, jobs, [&](std::size_t k) {
    Element u = g.element(k / n);
    Element w = g.element(k % n);
    PairResult& out = results[k];
    auto sums = engine.theta_column_sums(u, w);
    Element vmin = dem.v_min(u, w);
    LaurentPoly s0 = require_x_free(engine.sigma_from_sums(sums, vmin));
    std::string s0_text = s0.to_string();
    LaurentPoly s0_lifted = s0.with_arity(g.rank());
    for (Element v : g.elements()) {
      if (!g.bruhat_leq(vmin, v)) continue;
      ++out.nonzero;
      RationalFn s = engine.sigma_from_sums(sums, v);
      if (s.is_zero()) ++out.vanished;
      std::vector<int> roots_s = s_set(g, vmin, v);
      LaurentPoly num = s0_lifted;
      for (int a : roots_s) num *= roots->gk_factor(a);
      bool gk = s == RationalFn(roots, std::move(num), std::move(roots_s));
      std::array<std::uint32_t, 3> key{u.index(), v.index(), w.index()};
      if (gk) {
        ++out.gk;
      } else {
        out.exceptions.push_back(key);
      }
      out.rows.push_back({key, ClassificationRow{g.word(u), g.word(v), g.word(w), gk, s0_text}});
    }
  });

  ClassificationReport report;
  report.type = g.type();
  report.total = n * n * n;
  std::vector<std::pair<std::array<std::uint32_t, 3>, ClassificationRow>> rows;
  for (auto& r : results) {
    report.nonzero += r.nonzero;
    report.gk += r.gk;
    report.vanished += r.vanished;
    for (const auto& e : r.exceptions) {
      report.exceptions.push_back({g.word(g.element(e[0])), g.word(g.element(e[1])), g.word(g.element(e[2]))});
    }
    for (auto& row : r.rows) rows.push_back(std::move(row));
  }
  std::sort(report.exceptions.begin(), report.exceptions.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  report.rows.reserve(rows.size());
  for (auto& row : rows) report.rows.push_back(std::move(row.second));
  return report;
}

bool verify_main_theorem(const SigmaEngine& engine, unsigned jobs, std::size_t* checked) {
  const auto& g = engine.group();
  const std::size_t n = g.order();
  std::atomic<bool> ok{true};
  parallel_for(n * n, jobs, [&](std::size_t k) {
    Element u = g.element(k / n);
    Element w = g.element(k % n);
    try {
      if (engine.sigma0(u, w) != engine.sigma0_bruhat(u, w)) ok = false;
    } catch (const std::logic_error&) {
      ok = false;
    }
  });
  if (checked) *checked = n * n;
  return ok;
}

bool verify_vanishing(const SigmaEngine& engine, std::size_t sample_size, std::uint64_t seed, std::size_t* checked) {
  const auto& g = engine.group();
  const auto& dem = engine.demazure();
  const std::size_t n = g.order();
  auto vanishes = [&](Element u, Element v, Element w) { return engine.sigma(u, v, w).is_zero(); };
  std::size_t count = 0;
  if (checked) *checked = 0;
  if (n <= 10) {
    for (Element u : g.elements()) {
      for (Element w : g.elements()) {
        Element vmin = dem.v_min(u, w);
        auto sums = engine.theta_column_sums(u, w);
        for (Element v : g.elements()) {
          if (g.bruhat_leq(vmin, v)) continue;
          if (!engine.sigma_from_sums(sums, v).is_zero()) return false;
          if (checked) *checked = ++count;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t done = 0; done < sample_size;) {
    Element u = g.element(pick(rng)), v = g.element(pick(rng)), w = g.element(pick(rng));
    if (g.bruhat_leq(dem.v_min(u, w), v)) continue;
    if (!vanishes(u, v, w)) return false;
    ++done;
    if (checked) *checked = done;
  }
  return true;
}

bool poles_within(const RationalFn& f, std::span<const int> roots) {
  auto den = f.denominator();
  if (std::adjacent_find(den.begin(), den.end()) != den.end()) return false;
  return std::all_of(den.begin(), den.end(), [&](int a) { return std::find(roots.begin(), roots.end(), a) != roots.end(); });
}

}  // namespace bhl
