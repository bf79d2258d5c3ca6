// One line per criterion: "PASS|FAIL <nn> <name>: <detail> (<seconds> s, budget <b> s)".
// With an argument only that criterion runs and the exit status reflects it.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "symgen/m22.hpp"

using namespace symgen;
using namespace symgen::m22;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int number;
  const char *name;
  double budget;
  std::function<Outcome()> run;
};

std::string failures(const Claims &claims) {
  std::string out;
  for (const auto &c : claims)
    if (!c.passed)
      out += (out.empty() ? "" : "; ") + c.id + (c.detail.empty() ? "" : " [" + c.detail + "]");
  return out;
}

Outcome from_claims(const Claims &claims, const std::string &ok_detail) {
  std::string f = failures(claims);
  std::size_t bad = 0;
  for (const auto &c : claims)
    bad += !c.passed;
  if (f.empty())
    return {true, ok_detail};
  return {false, std::to_string(bad) + "/" + std::to_string(claims.size()) + " failed: " + f};
}

const DceRun &dce() {
  static const DceRun run = run_dce();
  return run;
}

Outcome model_orders() {
  auto m = build_model();
  PermutationGroup s1({m.x, m.y, m.si(1)}, 22);
  bool ok = m.G.order() == 443520 && m.N.order() == 168 && s1.order() == 1344;
  std::ostringstream d;
  d << "|<x,y,t>| = " << m.G.order() << ", |<x,y>| = " << m.N.order() << ", |<x,y,s1>| = " << s1.order();
  return {ok, d.str()};
}

Outcome relators() {
  auto m = build_model();
  auto facts = verify_model_facts(m);
  for (const auto &c : facts)
    if (c.id == "relators-hold")
      return {c.passed, c.passed ? "10 of 10 relators are the identity in the model" : c.detail};
  return {false, "relator claim missing"};
}

Outcome todd_coxeter() {
  const auto &p = presentation_file().presentation;
  std::string detail;
  bool ok = true;
  for (auto [sub, want] : {std::pair<const char *, std::size_t>{"M", 330}, {"N", 2640}}) {
    std::vector<CosetTable> tables;
    for (Strategy s : {Strategy::Felsch, Strategy::Hlt}) {
      auto start = std::chrono::steady_clock::now();
      tables.push_back(enumerate(p, p.subgroup(sub), {kDefaultMaxCosets, s}));
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      ok = ok && tables.back().index() == want && dt.count() < 30;
      detail += std::string(sub) + "/" + to_string(s) + " " + std::to_string(tables.back().index()) + ", ";
    }
    bool same = tables[0] == tables[1];
    ok = ok && same;
    detail += same ? "tables equal; " : "tables differ; ";
  }
  return {ok, detail.substr(0, detail.size() - 2)};
}

Outcome double_cosets() { return from_claims(verify_decomposition(dce()), "8 double cosets {1,7,42,84,84,84,14,14}, stabilizers {168,24,4,2,2,2,12,12}"); }

Outcome cayley_graph() { return from_claims(verify_graph(dce()), "26 edges incl. loops match, out-degree 14, connected"); }

Outcome coset_fixtures_run() {
  auto claims = verify_fixtures(dce());
  if (claims.size() < 12)
    return {false, "only " + std::to_string(claims.size()) + " fixtures"};
  return from_claims(claims, std::to_string(claims.size()) + " fixtures hold");
}

Outcome relation_families() {
  auto m = build_model();
  Claims claims;
  FanoStructure f = verify_s_structure(m, &claims);
  auto rep = verify_relation_families(m, f);
  claims.insert(claims.end(), rep.claims.begin(), rep.claims.end());
  return from_claims(claims, std::to_string(rep.witnesses.size()) + " witnesses in N, gamma separation sharp");
}

Outcome iwasawa() {
  auto r = run_iwasawa(dce());
  return from_claims(iwasawa_claims(r), "order 443520 on 330 points, perfect, primitive, |K| = 8, closure whole");
}

Outcome maximal_subgroups() {
  auto m = build_model();
  std::string detail, orders;
  bool ok = true;
  for (const auto &row : verify_maximal_subgroups(m)) {
    orders += (orders.empty() ? "" : ",") + std::to_string(row.order);
    if (!row.passed()) {
      ok = false;
      detail += row.name + " order " + std::to_string(row.order);
      if (!row.stabilizes) {
        detail += " does not stabilize the printed set";
        for (const auto &o : row.orbits_of_claimed_size) {
          detail += " (orbit {";
          for (std::size_t k = 0; k < o.size(); ++k)
            detail += (k ? "," : "") + std::to_string(o[k]);
          detail += "})";
        }
      }
      detail += "; ";
    }
  }
  return {ok, "orders " + orders + (ok ? "; all stabilization claims hold" : "; " + detail.substr(0, detail.size() - 2))};
}

Outcome covers() {
  auto res = verify_covers();
  bool ok = true;
  std::string detail;
  for (const auto &c : res) {
    ok = ok && c.index == c.expected;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s: %zu (%.1f s)", detail.empty() ? "" : ", ",
                  c.dropped.empty() ? "full" : ("without " + c.dropped).c_str(), c.index, c.seconds);
    detail += buf;
  }
  return {ok, detail};
}

Outcome properties() {
  std::string bad;
  std::size_t groups = 0, bfs = 0, round_trips = 0, homs = 0;
  auto m = build_model();

  // groups of the corpus
  std::vector<PermutationGroup> corpus{m.N, m.M, PermutationGroup(m.s, 22)};
  corpus.push_back(PermutationGroup({Permutation::from_cycles("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", 14),
                                     Permutation::from_cycles("(1,12)(2,3)(4,11)(5,8)(6,13)(9,10)", 14)},
                                    14));
  const Permutation tt[] = {m.t};
  corpus.push_back(centralizer_bruteforce(m.N, tt));
  for (const auto &dc : dce().decomposition.double_cosets())
    corpus.push_back(dc.stabilizer);
  for (const auto &row : verify_maximal_subgroups(m))
    if (row.order <= 10000) {
      std::vector<Permutation> gens;
      for (const auto &w : row.words)
        gens.push_back(m.evaluate(w));
      corpus.emplace_back(gens, 22);
    }
  auto s3 = parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a*b)^2\nsub T\n").presentation;
  auto a5 = parse_presentation("gens a b\nrel a^2\nrel b^3\nrel (a*b)^5\nsub T\nsub A a\n").presentation;
  corpus.emplace_back(enumerate(s3, s3.subgroup("T")).generator_actions(), 6);
  corpus.emplace_back(enumerate(a5, a5.subgroup("T")).generator_actions(), 60);
  corpus.emplace_back(enumerate(a5, a5.subgroup("A")).generator_actions(), 30);

  for (const auto &g : corpus) {
    std::uint64_t order = g.order();
    if (order > 10000)
      continue;
    ++groups;
    for (Point p = 0; p < g.degree(); ++p)
      if (orbit(g, p).size() * point_stabilizer(g, p).order() != order)
        bad += "orbit-stabilizer fails in a group of order " + std::to_string(order) + "; ";
    std::uint64_t product = 1;
    for (auto s : g.basic_orbit_sizes())
      product *= s;
    if (product != order)
      bad += "basic orbits do not multiply to the order; ";
    if (order <= 5000) {
      ++bfs;
      if (oracle::closure_size(g.generators(), g.degree()) != order)
        bad += "BFS closure differs from order " + std::to_string(order) + "; ";
    }
  }

  // parser round-trips
  const auto &file = presentation_file();
  const auto &gens = file.presentation.generators;
  for (const auto &e : file.relator_exprs) {
    ++round_trips;
    if (!(parse_word(to_string(e, gens), gens) == e))
      bad += "round-trip fails for a shipped relator; ";
  }
  std::mt19937_64 rng(1);
  for (int k = 0; k < 500; ++k) {
    auto e = oracle::random_expr(rng, 4, gens.size());
    ++round_trips;
    if (!(parse_word(to_string(e, gens), gens) == e))
      bad += "round-trip fails for " + to_string(e, gens) + "; ";
  }

  // evaluate is a homomorphism
  const Permutation model[] = {m.x, m.y, m.t};
  for (int k = 0; k < 200; ++k) {
    FlatWord a = oracle::random_flat(rng, 16, 3), b = oracle::random_flat(rng, 16, 3);
    ++homs;
    if (!(evaluate(a * b, model) == evaluate(a, model) * evaluate(b, model)))
      bad += "evaluate is not multiplicative; ";
  }

  std::ostringstream d;
  d << groups << " groups checked for orbit-stabilizer, " << bfs << " against BFS closure, " << round_trips
    << " round-trips, " << homs << " homomorphism pairs";
  return {bad.empty(), bad.empty() ? d.str() : bad};
}

const std::vector<Criterion> &criteria() {
  static const std::vector<Criterion> all{
      {1, "concrete model orders", 1, model_orders},
      {2, "relators hold in the model", 1, relators},
      {3, "Todd-Coxeter indices and strategy agreement", 60, todd_coxeter},
      {4, "double coset decomposition", 10, double_cosets},
      {5, "collapsed Cayley graph", 10, cayley_graph},
      {6, "coset equivalence fixtures", 5, coset_fixtures_run},
      {7, "relation families", 30, relation_families},
      {8, "Iwasawa simplicity check", 60, iwasawa},
      {9, "maximal subgroups", 30, maximal_subgroups},
      {10, "covers", 120, covers},
      {11, "property suites", 60, properties},
  };
  return all;
}

bool run_one(const Criterion &c) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  bool in_time = dt.count() <= c.budget;
  bool passed = o.passed && in_time;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", dt.count(), c.budget);
  std::cout << (passed ? "PASS " : "FAIL ") << (c.number < 10 ? "0" : "") << c.number << " " << c.name << ": "
            << o.detail << (in_time ? "" : " [over budget]") << " (" << timing << ")" << std::endl;
  return passed;
}

} // namespace

int main(int argc, char **argv) {
  if (argc > 2) {
    std::cerr << "usage: symgen_acceptance [criterion]\n";
    return 2;
  }
  if (argc == 2) {
    int n = std::atoi(argv[1]);
    for (const auto &c : criteria())
      if (c.number == n)
        return run_one(c) ? 0 : 1;
    std::cerr << "no criterion " << argv[1] << "\n";
    return 2;
  }
  bool all = true;
  for (const auto &c : criteria())
    all = run_one(c) && all;
  return all ? 0 : 1;
}
