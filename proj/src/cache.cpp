#include "bhl/cache.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace bhl {

namespace {

using json = nlohmann::ordered_json;

json fingerprint(const CoxeterGroup& group) {
  return {{"order", group.order()}, {"lengths", group.length_histogram()}};
}

json encode(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    std::vector<int> x;
    for (int i = 0; i < p.arity(); ++i) x.push_back(t.exponent.x_degree(i));
    terms.push_back({t.coeff.str(), t.exponent.q_degree(), x});
  }
  return terms;
}

LaurentPoly decode(const json& terms, int arity) {
  std::vector<LaurentPoly::Term> out;
  for (const auto& t : terms) {
    auto x = t.at(2).get<std::vector<int>>();
    if (static_cast<int>(x.size()) != arity) throw std::runtime_error("bad exponent arity");
    out.push_back({ExponentVector(t.at(1).get<int>(), x), Integer(t.at(0).get<std::string>())});
  }
  return LaurentPoly::from_terms(arity, std::move(out));
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir, const CartanType& type) {
  return dir / (type.name() + ".rtable.json");
}

std::unique_ptr<RTable> load_rtable(const CoxeterGroup& group, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return nullptr;
  try {
    json doc = json::parse(in);
    if (doc.at("header") != kCacheHeader || doc.at("type") != group.type().name() ||
        doc.at("fingerprint") != fingerprint(group)) {
      return nullptr;
    }
    auto table = std::make_unique<RTable>(group);
    for (const auto& entry : doc.at("entries")) {
      Element u = group.parse(entry.at("u").get<std::string>());
      Element v = group.parse(entry.at("v").get<std::string>());
      auto den = entry.at("den").get<std::vector<int>>();
      table->insert(u, v, RationalFn(group.roots(), decode(entry.at("num"), group.rank()), std::move(den)));
    }
    // Entries absent from the file are the zeros below the Bruhat order.
    for (Element v : group.elements()) {
      for (Element u : group.elements()) {
        if (table->contains(u, v)) continue;
        if (group.bruhat_leq(u, v)) return nullptr;
        table->insert(u, v, RationalFn::zero(group.roots()));
      }
    }
    return table;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void save_rtable(const RTable& table, const std::filesystem::path& file) {
  const auto& group = table.group();
  json entries = json::array();
  for (Element v : group.elements()) {
    for (Element u : group.elements()) {
      const RationalFn& f = table.at(u, v);
      if (f.is_zero()) continue;
      auto den = f.denominator();
      entries.push_back({{"u", group.word(u)},
                         {"v", group.word(v)},
                         {"num", encode(f.numerator())},
                         {"den", std::vector<int>(den.begin(), den.end())}});
    }
  }
  json doc = {{"header", kCacheHeader},
              {"type", group.type().name()},
              {"fingerprint", fingerprint(group)},
              {"entries", std::move(entries)}};

  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace bhl
