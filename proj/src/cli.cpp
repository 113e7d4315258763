#include "bhl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bhl/cache.hpp"
#include "bhl/coxeter.hpp"
#include "bhl/demazure.hpp"
#include "bhl/hecke.hpp"
#include "bhl/rpoly.hpp"
#include "bhl/sigma.hpp"
#include "bhl/verify.hpp"

namespace bhl {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t max_order_from_env() {
  const char* text = std::getenv("BHL_MAX_ORDER");
  if (!text || !*text) return kDefaultMaxOrder;
  char* end = nullptr;
  unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0' || value == 0) throw UsageError(std::string("BHL_MAX_ORDER is not a positive integer: ") + text);
  return static_cast<std::size_t>(value);
}

CoxeterGroup build_group(const std::string& type) {
  return CoxeterGroup::build(CartanType::parse(type), max_order_from_env());
}

std::optional<std::filesystem::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  const char* env = std::getenv("BHL_CACHE_DIR");
  if (env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

std::string root_text(std::span<const int> coords) {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) out += (i ? "," : "") + std::to_string(coords[i]);
  return out + ")";
}

struct Options {
  std::string type;
  std::string u, v, w, x, y;
  std::string format;
  std::string cache;
  std::string out_file;
  std::string suite;
  unsigned jobs = 1;
  bool info = false;
  bool bar = false;
};

int cmd_group(const Options& o, std::ostream& out) {
  auto g = build_group(o.type);
  out << "type " << g.type().name() << '\n';
  out << "order " << g.order() << '\n';
  if (o.info) {
    out << "lengths " << join(g.length_histogram()) << '\n';
    out << "positive_roots " << g.num_positive_roots() << '\n';
    for (int i = 0; i < g.num_positive_roots(); ++i) out << "  " << root_text(g.roots()->root(i)) << '\n';
  }
  return 0;
}

int cmd_meet(const Options& o, std::ostream& out, bool vmin) {
  auto g = build_group(o.type);
  Demazure dem(g);
  Element u = g.parse(o.u), w = g.parse(o.w);
  out << g.word(vmin ? dem.v_min(u, w) : dem.mixed_meet(u, w)) << '\n';
  return 0;
}

int cmd_theta(const Options& o, std::ostream& out) {
  auto g = build_group(o.type);
  out << theta(g, g.parse(o.x), g.parse(o.y), g.parse(o.w)).to_string() << '\n';
  return 0;
}

int cmd_rpoly(const Options& o, std::ostream& out) {
  auto g = build_group(o.type);
  RTable table(g);
  const RationalFn& r = table.r(g.parse(o.u), g.parse(o.v));
  out << (o.bar ? bar(r) : r).to_string() << '\n';
  return 0;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  auto g = build_group(o.type);
  Element u = g.parse(o.u), v = g.parse(o.v), w = g.parse(o.w);
  SigmaEngine engine(g);
  std::string value = engine.sigma(u, v, w).to_string();
  if (o.format == "json") {
    nlohmann::ordered_json doc = {{"type", g.type().name()}, {"u", g.word(u)}, {"v", g.word(v)}, {"w", g.word(w)}, {"sigma", value}};
    out << doc.dump(2) << '\n';
  } else {
    out << "σ = " << value << '\n';
  }
  return 0;
}

std::unique_ptr<RTable> cached_rtable(const CoxeterGroup& g, const Options& o) {
  auto dir = cache_dir(o.cache);
  if (!dir) return nullptr;
  auto file = cache_path(*dir, g.type());
  if (auto table = load_rtable(g, file)) return table;
  auto table = std::make_unique<RTable>(g);
  table->fill_all();
  save_rtable(*table, file);
  return table;
}

int cmd_classify(const Options& o, std::ostream& out) {
  auto g = build_group(o.type);
  SigmaEngine engine(g, cached_rtable(g, o));
  ClassificationReport report = classify(engine, o.jobs);

  std::ostringstream text;
  if (o.format == "csv") {
    text << "type,u,v,w,is_gk,sigma0\n";
    for (const auto& row : report.rows) {
      text << report.type.name() << ',' << row.u << ',' << row.v << ',' << row.w << ',' << (row.is_gk ? "true" : "false")
           << ',' << row.sigma0 << '\n';
    }
  } else {
    nlohmann::ordered_json exceptions = nlohmann::ordered_json::array();
    for (const auto& [u, v, w] : report.exceptions) exceptions.push_back({{"u", u}, {"v", v}, {"w", w}});
    nlohmann::ordered_json doc = {{"type", report.type.name()},
                                  {"total", report.total},
                                  {"nonzero", report.nonzero},
                                  {"gk", report.gk},
                                  {"exceptions", std::move(exceptions)}};
    text << doc.dump(2) << '\n';
  }

  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw UsageError("cannot open output file " + o.out_file);
    file << text.str();
  } else {
    out << text.str();
  }
  if (report.vanished != 0) throw std::logic_error("sigma vanished on " + std::to_string(report.vanished) + " triples with v >= v_min");
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto g = build_group(o.type);
  SigmaEngine engine(g);
  VerifyOptions options;
  options.jobs = o.jobs;
  std::size_t failed = 0, total = 0;
  auto run_one = [&](const std::string& suite) {
    for (const auto& r : run_suite(suite, engine, options)) {
      ++total;
      if (r.passed) {
        out << "PASS " << suite << ": " << r.name << " (" << r.cases << " cases)\n";
      } else {
        ++failed;
        out << "FAIL " << suite << ": " << r.name << " (" << r.cases << " cases): " << r.failure << '\n';
      }
    }
  };
  if (o.suite == "all") {
    for (const auto& suite : suite_names()) run_one(suite);
  } else {
    run_one(o.suite);
  }
  if (failed == 0) {
    out << "all " << total << " checks passed\n";
    return 0;
  }
  out << failed << " of " << total << " checks failed\n";
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Matrix coefficients sigma(u, v, w) of intertwining operators on Iwahori fixed vectors", "bhl"};
  app.require_subcommand(1);

  auto add_type = [&](CLI::App* sub) { sub->add_option("--type", o.type, "Cartan type, e.g. A2, B2, C2, A3")->required(); };
  auto add_elem = [&](CLI::App* sub, const std::string& name, std::string& target) {
    sub->add_option(name, target, "element word: e, 121 or 1,2,1")->required();
  };

  auto* group = app.add_subcommand("group", "group order, length histogram and positive roots");
  add_type(group);
  group->add_flag("--info", o.info, "print lengths and positive roots");

  auto* meet = app.add_subcommand("meet", "mixed meet of u and w");
  auto* vmin = app.add_subcommand("vmin", "v_min(u, w)");
  for (auto* sub : {meet, vmin}) {
    add_type(sub);
    add_elem(sub, "-u", o.u);
    add_elem(sub, "-w", o.w);
  }

  auto* theta_cmd = app.add_subcommand("theta", "Theta(x, y, w)");
  add_type(theta_cmd);
  add_elem(theta_cmd, "-x", o.x);
  add_elem(theta_cmd, "-y", o.y);
  add_elem(theta_cmd, "-w", o.w);

  auto* rpoly = app.add_subcommand("rpoly", "deformed R-polynomial r_{u,v}");
  add_type(rpoly);
  add_elem(rpoly, "-u", o.u);
  add_elem(rpoly, "-v", o.v);
  rpoly->add_flag("--bar", o.bar, "replace q by q^-1");

  auto* sigma_cmd = app.add_subcommand("sigma", "sigma(u, v, w)");
  add_type(sigma_cmd);
  add_elem(sigma_cmd, "-u", o.u);
  add_elem(sigma_cmd, "-v", o.v);
  add_elem(sigma_cmd, "-w", o.w);
  o.format = "text";
  sigma_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "count nonzero and GK-type triples");
  add_type(classify_cmd);
  classify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  classify_cmd->add_option("--cache", o.cache, "r-table cache directory (default $BHL_CACHE_DIR)");
  classify_cmd->add_option("--out", o.out_file, "write the report to a file");
  auto* classify_format = classify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  add_type(verify_cmd);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  if (classify_cmd->parsed() && classify_format->count() == 0) o.format = "json";

  try {
    if (group->parsed()) return cmd_group(o, out);
    if (meet->parsed()) return cmd_meet(o, out, false);
    if (vmin->parsed()) return cmd_meet(o, out, true);
    if (theta_cmd->parsed()) return cmd_theta(o, out);
    if (rpoly->parsed()) return cmd_rpoly(o, out);
    if (sigma_cmd->parsed()) return cmd_sigma(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace bhl
