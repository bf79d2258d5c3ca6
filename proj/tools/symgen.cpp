#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "symgen/dce.hpp"
#include "symgen/m22.hpp"
#include "symgen/presentation.hpp"
#include "symgen/progenitor.hpp"
#include "symgen/simplicity.hpp"
#include "symgen/todd_coxeter.hpp"

using json = nlohmann::ordered_json;
using namespace symgen;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string pres;
  std::string sub;
  std::string strategy = "felsch";
  std::optional<std::size_t> max_cosets;
  std::string json_out;
  std::string dot_out;
  std::string table_out;
  bool verbose = false;

  void validate() const {
    std::vector<std::string> paths;
    for (const auto *p : {&json_out, &dot_out, &table_out})
      if (!p->empty())
        paths.push_back(*p);
    if (std::set<std::string>(paths.begin(), paths.end()).size() != paths.size())
      throw UsageError("output paths must be distinct");
    if (max_cosets && *max_cosets < 1)
      throw UsageError("--max-cosets must be at least 1");
  }
};

std::size_t cap_from_env(std::size_t fallback) {
  const char *env = std::getenv("SYMGEN_MAX_COSETS");
  if (!env || !*env)
    return fallback;
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(env, &pos);
    if (pos != std::string(env).size() || v < 1)
      throw std::invalid_argument("bad");
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw UsageError(std::string("SYMGEN_MAX_COSETS is not a positive integer: ") + env);
  }
}

EnumerationOptions enumeration_options(const RunConfig &cfg, std::size_t fallback = kDefaultMaxCosets) {
  EnumerationOptions o;
  o.max_cosets = cfg.max_cosets ? *cfg.max_cosets : cap_from_env(fallback);
  try {
    o.strategy = parse_strategy(cfg.strategy);
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
  return o;
}

// The shipped M22 file when no path is given.
PresentationFile load(const RunConfig &cfg) {
  if (cfg.pres.empty())
    return m22::presentation_file();
  try {
    return load_presentation(cfg.pres);
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
}

const std::vector<FlatWord> &subgroup_words(const Presentation &p, const std::string &name) {
  if (!p.has_subgroup(name))
    throw UsageError("presentation has no subgroup named '" + name + "'");
  return p.subgroup(name);
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + path);
  out << text;
}

json stats_json(const EnumerationStats &s) {
  return json{{"strategy", to_string(s.strategy)},   {"cosets_defined", s.cosets_defined},
              {"max_live", s.max_live},              {"coincidences", s.coincidences},
              {"deductions", s.deductions},          {"compactions", s.compactions},
              {"lookaheads", s.lookaheads}};
}

json labels_json(const std::vector<std::vector<Point>> &orbs) {
  json out = json::array();
  for (const auto &o : orbs) {
    json one = json::array();
    for (Point p : o)
      one.push_back(p + 1);
    out.push_back(one);
  }
  return out;
}

json claims_json(const m22::Claims &claims) {
  json out = json::array();
  for (const auto &c : claims)
    out.push_back({{"id", c.id}, {"statement", c.statement}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

int run_enumerate(const RunConfig &cfg) {
  cfg.validate();
  auto file = load(cfg);
  const auto &p = file.presentation;
  auto opts = enumeration_options(cfg);
  CosetTable table = enumerate(p, subgroup_words(p, cfg.sub), opts);
  std::cout << "index " << table.index() << "\n";
  if (cfg.verbose)
    std::cout << stats_json(table.stats()).dump(2) << "\n";
  if (!cfg.table_out.empty())
    write_file(cfg.table_out, table.to_tsv());
  if (!cfg.json_out.empty()) {
    json j{{"schema", 1}, {"group", p.name}, {"subgroup", cfg.sub}, {"index", table.index()},
           {"max_cosets", opts.max_cosets}, {"stats", stats_json(table.stats())}};
    write_file(cfg.json_out, j.dump(2) + "\n");
  }
  return kOk;
}

struct DceResult {
  CosetTable table;
  DoubleCosetDecomposition d;
};

DceResult dce_pipeline(const RunConfig &cfg) {
  auto file = load(cfg);
  if (!file.progenitor)
    throw UsageError("the presentation has no progenitor directive");
  const auto &p = file.presentation;
  CosetTable table = enumerate(p, subgroup_words(p, cfg.sub), enumeration_options(cfg));
  auto map = progenitor_from_file(file).generator_map();
  auto d = decompose(table, map.control_words(), map.symmetric_generator_words());
  return {std::move(table), std::move(d)};
}

json dce_json(const DceResult &r) {
  json cosets = json::array();
  CollapsedCayleyGraph g = collapsed_graph(r.d);
  for (std::size_t k = 0; k < r.d.size(); ++k) {
    const auto &dc = r.d.double_cosets()[k];
    json gens = json::array();
    for (const auto &s : dc.stabilizer.generators())
      gens.push_back(s.to_cycles());
    json edges = json::array();
    for (const auto &e : g.edges)
      if (e.from == k)
        edges.push_back({{"to", double_coset_name(r.d.double_cosets()[e.to].representative)},
                         {"multiplicity", e.multiplicity},
                         {"orbit_sizes", e.orbit_sizes}});
    cosets.push_back({{"name", double_coset_name(dc.representative)},
                      {"representative", dc.representative},
                      {"count", dc.count()},
                      {"stabilizer_order", dc.stabilizer.order()},
                      {"stabilizer_generators", gens},
                      {"stabilizer_orbits", labels_json(dc.stabilizer_orbits)},
                      {"edges", edges}});
  }
  return json{{"schema", 1}, {"index", r.table.index()}, {"double_cosets", cosets}};
}

int run_dce(const RunConfig &cfg) {
  cfg.validate();
  DceResult r = dce_pipeline(cfg);
  std::size_t total = 0;
  for (const auto &dc : r.d.double_cosets()) {
    std::cout << double_coset_name(dc.representative) << "\t" << dc.count() << "\t|N^(w)| = "
              << dc.stabilizer.order() << "\n";
    total += dc.count();
  }
  std::cout << r.d.size() << " double cosets, " << total << " single cosets\n";
  if (!cfg.json_out.empty())
    write_file(cfg.json_out, dce_json(r).dump(2) + "\n");
  if (!cfg.dot_out.empty())
    write_file(cfg.dot_out, collapsed_graph(r.d).to_dot());
  return kOk;
}

int run_graph(const RunConfig &cfg) {
  cfg.validate();
  DceResult r = dce_pipeline(cfg);
  std::string dot = collapsed_graph(r.d).to_dot();
  if (cfg.dot_out.empty())
    std::cout << dot;
  else
    write_file(cfg.dot_out, dot);
  return kOk;
}

int run_iwasawa(const RunConfig &cfg, const std::vector<std::string> &k_text, std::uint64_t expect) {
  cfg.validate();
  auto file = load(cfg);
  const auto &p = file.presentation;
  std::vector<FlatWord> k;
  for (const auto &w : k_text) {
    try {
      k.push_back(flatten(parse_word(w, p.generators)));
    } catch (const std::exception &e) {
      throw UsageError("--k " + w + ": " + e.what());
    }
  }
  CosetTable table = enumerate(p, subgroup_words(p, cfg.sub), enumeration_options(cfg));
  IwasawaReport r = iwasawa_check(table, p, k, expect);
  std::cout << "degree            " << r.degree << "\n"
            << "image order       " << r.image_order << " (expected " << r.expected_order << ")\n"
            << "stabilizer order  " << r.stabilizer_order << ", bound " << r.order_bound << "\n"
            << "faithful          " << (r.faithful ? "yes" : "no") << "\n"
            << "perfect           " << (r.perfect ? "yes" : "no") << " (derived order " << r.derived_order << ")\n"
            << "primitive         " << (r.primitive ? "yes" : "no") << "\n"
            << "K order           " << r.k_order << (r.k_abelian ? ", abelian" : ", not abelian") << "\n"
            << "K normal in stab  " << (r.k_in_stabilizer && r.k_normalized ? "yes" : "no") << "\n"
            << "K closure         " << r.k_closure_order << "\n"
            << "verdict           " << to_string(r.verdict) << "\n";
  json kg = json::array();
  for (const auto &g : r.k_generators)
    kg.push_back(g.to_cycles());
  json j{{"schema", 1},
         {"degree", r.degree},
         {"image_order", r.image_order},
         {"expected_order", r.expected_order},
         {"stabilizer_order", r.stabilizer_order},
         {"order_bound", r.order_bound},
         {"faithful", r.faithful},
         {"derived_order", r.derived_order},
         {"perfect", r.perfect},
         {"primitive", r.primitive},
         {"k_generators", kg},
         {"k_order", r.k_order},
         {"k_abelian", r.k_abelian},
         {"k_in_stabilizer", r.k_in_stabilizer},
         {"k_normalized", r.k_normalized},
         {"k_closure_order", r.k_closure_order},
         {"k_closure_is_whole", r.k_closure_is_whole},
         {"verdict", to_string(r.verdict)},
         {"notes", r.notes}};
  if (!cfg.json_out.empty())
    write_file(cfg.json_out, j.dump(2) + "\n");
  else
    std::cout << j.dump(2) << "\n";
  return r.verdict == Verdict::Simple ? kOk : kFailed;
}

int run_verify(const RunConfig &cfg, const std::string &target, bool covers) {
  cfg.validate();
  if (target != "m22")
    throw UsageError("unknown verification target '" + target + "'");
  m22::VerifyOptions o;
  o.covers = covers;
  o.cover_max_cosets = cfg.max_cosets ? *cfg.max_cosets : cap_from_env(m22::kCoverMaxCosets);
  auto claims = m22::verify_all(o);
  std::size_t failed = 0;
  for (const auto &c : claims) {
    failed += !c.passed;
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.id << "  " << c.statement;
    if (!c.detail.empty() && (!c.passed || cfg.verbose))
      std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  std::cout << claims.size() - failed << "/" << claims.size() << " claims hold\n";
  if (!cfg.json_out.empty()) {
    json j{{"schema", 1}, {"target", target}, {"passed", failed == 0}, {"claims", claims_json(claims)}};
    write_file(cfg.json_out, j.dump(2) + "\n");
  }
  return failed == 0 ? kOk : kFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"symgen: symmetric generation, coset enumeration and the M22 checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--pres", cfg.pres, "presentation file (default: the shipped M22 presentation)");
    sub->add_option("--sub", cfg.sub, "subgroup name from the presentation")->required();
    sub->add_option("--strategy", cfg.strategy, "felsch or hlt")->check(CLI::IsMember({"felsch", "hlt"}));
    sub->add_option("--max-cosets", cfg.max_cosets, "coset table cap (env SYMGEN_MAX_COSETS)");
    sub->add_flag("-v,--verbose", cfg.verbose);
  };

  auto *enumerate_cmd = app.add_subcommand("enumerate", "coset enumeration");
  common(enumerate_cmd);
  enumerate_cmd->add_option("--json", cfg.json_out);
  enumerate_cmd->add_option("--table", cfg.table_out, "write the standardized table as TSV");

  auto *dce_cmd = app.add_subcommand("dce", "double coset decomposition");
  common(dce_cmd);
  dce_cmd->add_option("--out,--json", cfg.json_out);
  dce_cmd->add_option("--dot", cfg.dot_out);

  auto *graph_cmd = app.add_subcommand("graph", "collapsed Cayley graph as DOT");
  common(graph_cmd);
  graph_cmd->add_option("--dot,--out", cfg.dot_out);

  std::vector<std::string> k_words;
  std::uint64_t expect = 0;
  auto *iw_cmd = app.add_subcommand("iwasawa", "Iwasawa simplicity check on the coset action");
  common(iw_cmd);
  iw_cmd->add_option("--k", k_words, "generator of K, repeatable")->required();
  iw_cmd->add_option("--expect", expect, "expected group order")->required();
  iw_cmd->add_option("--json", cfg.json_out);

  std::string target;
  bool no_covers = false;
  auto *verify_cmd = app.add_subcommand("verify", "verify every claim about a shipped group");
  verify_cmd->add_option("target", target, "m22")->required();
  verify_cmd->add_option("--json", cfg.json_out);
  verify_cmd->add_option("--max-cosets", cfg.max_cosets, "cap for the cover enumerations");
  verify_cmd->add_flag("--no-covers", no_covers, "skip the cover enumerations");
  verify_cmd->add_flag("-v,--verbose", cfg.verbose);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate_cmd->parsed())
      return run_enumerate(cfg);
    if (dce_cmd->parsed())
      return run_dce(cfg);
    if (graph_cmd->parsed())
      return run_graph(cfg);
    if (iw_cmd->parsed())
      return run_iwasawa(cfg, k_words, expect);
    if (verify_cmd->parsed())
      return run_verify(cfg, target, !no_covers);
  } catch (const CapExceeded &e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kCap;
  } catch (const UsageError &e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kUsage;
  } catch (const PresentationError &e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kUsage;
  } catch (const WordParseError &e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "symgen: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
