#include "symgen/m22.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "symgen/m22_data.hpp"

namespace symgen::m22 {

std::string_view presentation_text() { return kEmbeddedPresentation; }

const PresentationFile &presentation_file() {
  static const PresentationFile file = parse_presentation(presentation_text());
  return file;
}

const ProgenitorSpec &progenitor() {
  static const ProgenitorSpec spec = progenitor_from_file(presentation_file());
  return spec;
}

namespace {

constexpr std::size_t kDegree = 22;
constexpr std::size_t kLabels = 14;

Claim claim(std::string id, std::string statement, bool passed, std::string detail = {}) {
  return Claim{std::move(id), std::move(statement), passed, std::move(detail)};
}

std::string join(const std::vector<std::size_t> &v, const char *sep = ",") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

std::string join_words(const std::vector<std::string> &v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? ", " : "") + v[k];
  return out;
}

std::string labels_text(const LabelWord &w) {
  if (w.empty())
    return "1";
  std::string out;
  for (std::size_t l : w)
    out += "t" + std::to_string(l);
  return out;
}

std::vector<std::size_t> sorted_multiset(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

Permutation ConcreteModel::evaluate(std::string_view word) const {
  const auto &gens = presentation_file().presentation.generators;
  const Permutation assignment[] = {x, y, t};
  return symgen::evaluate(flatten(parse_word(word, gens)), assignment);
}

Permutation ConcreteModel::evaluate_labels(const LabelWord &w) const {
  Permutation p = Permutation::identity(kDegree);
  for (std::size_t l : w)
    p = p * ti(l);
  return p;
}

Permutation ConcreteModel::label_action(const Permutation &g) const {
  auto l = induced_label_action(tgens, g);
  if (!l)
    throw VerificationError("element does not permute the symmetric generators: " + g.to_cycles());
  return *l;
}

ConcreteModel build_model() {
  ConcreteModel m;
  m.x = Permutation::from_cycles(kModelX, kDegree);
  m.y = Permutation::from_cycles(kModelY, kDegree);
  m.t = Permutation::from_cycles(kModelT, kDegree);

  const Permutation model[] = {m.x, m.y, m.t};
  auto check = verify_conjugation_action(progenitor().generator_map(), model);
  if (!check.ok)
    throw VerificationError("symmetric generators in the model: " + check.diagnostic);
  m.tgens = check.symmetric_generators;
  for (std::size_t i = 1; i <= 7; ++i)
    m.s.push_back(m.ti(i) * m.ti(i + 7));

  m.N = PermutationGroup({m.x, m.y}, kDegree);
  std::vector<Permutation> mgens;
  for (const auto &w : presentation_file().presentation.subgroup("M"))
    mgens.push_back(symgen::evaluate(w, model));
  m.M = PermutationGroup(mgens, kDegree);
  m.G = PermutationGroup({m.x, m.y, m.t}, kDegree);

  auto expect = [](const char *what, std::uint64_t got, std::uint64_t want) {
    if (got != want)
      throw VerificationError(std::string("|") + what + "| = " + std::to_string(got) + ", expected " +
                              std::to_string(want));
  };
  expect("N", m.N.order(), 168);
  expect("M", m.M.order(), 1344);
  expect("G", m.G.order(), 443520);
  return m;
}

// ---------------------------------------------------------------- Fano

bool FanoStructure::collinear(std::size_t i, std::size_t j, std::size_t k) const {
  std::array<std::size_t, 3> r{residue(i), residue(j), residue(k)};
  std::sort(r.begin(), r.end());
  if (r[0] == r[1] || r[1] == r[2])
    return false;
  return std::find(lines.begin(), lines.end(), r) != lines.end();
}

std::size_t FanoStructure::third(std::size_t i, std::size_t j) const {
  std::size_t a = residue(i), b = residue(j);
  for (const auto &l : lines)
    if (std::count(l.begin(), l.end(), a) && std::count(l.begin(), l.end(), b) && a != b)
      for (std::size_t p : l)
        if (p != a && p != b)
          return p;
  throw VerificationError("no line through " + std::to_string(a) + " and " + std::to_string(b));
}

FanoStructure verify_s_structure(const ConcreteModel &m, Claims *claims) {
  auto fail = [](const std::string &msg) { throw VerificationError(msg); };
  const auto id = Permutation::identity(kDegree);

  for (std::size_t i = 1; i <= 7; ++i) {
    const auto &s = m.si(i);
    if (s == id || !(s * s == id))
      fail("s_" + std::to_string(i) + " is not an involution");
    if (!(m.ti(i + 7) * m.ti(i) == s))
      fail("s_" + std::to_string(i) + " != s_" + std::to_string(i + 7));
  }
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = i + 1; j <= 7; ++j)
      if (!commute(m.si(i), m.si(j)))
        fail("s_" + std::to_string(i) + " and s_" + std::to_string(j) + " do not commute");
  PermutationGroup sgroup(m.s, kDegree);
  if (sgroup.order() != 8)
    fail("<s_1,...,s_7> has order " + std::to_string(sgroup.order()));

  FanoStructure f;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = i + 1; j <= 7; ++j)
      for (std::size_t k = j + 1; k <= 7; ++k)
        if (m.si(i) * m.si(j) == m.si(k))
          f.lines.push_back({i, j, k});
  if (f.lines.size() != 7)
    fail("found " + std::to_string(f.lines.size()) + " lines, expected 7");
  for (std::size_t p = 1; p <= 7; ++p) {
    auto on = std::count_if(f.lines.begin(), f.lines.end(),
                            [&](const auto &l) { return std::count(l.begin(), l.end(), p) > 0; });
    if (on != 3)
      fail("point " + std::to_string(p) + " lies on " + std::to_string(on) + " lines");
  }
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b) {
      int shared = 0;
      for (std::size_t p : f.lines[a])
        shared += static_cast<int>(std::count(f.lines[b].begin(), f.lines[b].end(), p));
      if (shared != 1)
        fail("two lines meet in " + std::to_string(shared) + " points");
    }

  // s_i s_j = s_k s_l when no three of i, j, k, l are collinear
  std::size_t quads = 0;
  for (std::size_t i = 1; i <= 7; ++i)
    for (std::size_t j = 1; j <= 7; ++j)
      for (std::size_t k = 1; k <= 7; ++k)
        for (std::size_t l = 1; l <= 7; ++l) {
          std::set<std::size_t> d{i, j, k, l};
          if (d.size() != 4 || f.collinear(i, j, k) || f.collinear(i, j, l) ||
              f.collinear(i, k, l) || f.collinear(j, k, l))
            continue;
          ++quads;
          if (!(m.si(i) * m.si(j) == m.si(k) * m.si(l)))
            fail("s_" + std::to_string(i) + "s_" + std::to_string(j) + " != s_" + std::to_string(k) +
                 "s_" + std::to_string(l));
        }

  // N on lines, through its label action read mod 7
  std::set<std::array<std::size_t, 3>> seen{f.lines.front()};
  std::vector<std::array<std::size_t, 3>> queue{f.lines.front()};
  const Permutation lx = m.label_action(m.x), ly = m.label_action(m.y);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto *g : {&lx, &ly}) {
      std::array<std::size_t, 3> img;
      for (std::size_t k = 0; k < 3; ++k)
        img[k] = residue((*g)[static_cast<Point>(queue[q][k] - 1)] + 1);
      std::sort(img.begin(), img.end());
      if (std::find(f.lines.begin(), f.lines.end(), img) == f.lines.end())
        fail("N does not map lines to lines");
      if (seen.insert(img).second)
        queue.push_back(img);
    }
  if (seen.size() != 7)
    fail("N is not transitive on lines");

  if (claims) {
    std::string lines;
    for (const auto &l : f.lines)
      lines += "{" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) + "}";
    claims->push_back(claim("s-involutions", "s_i = t_i t_(i+7) are involutions with s_i = s_(i+7)", true));
    claims->push_back(claim("s-commute", "the s_i commute pairwise and generate a group of order 8", true));
    claims->push_back(claim("fano-lines", "s_i s_j = s_k defines 7 lines forming a Fano plane", true, lines));
    claims->push_back(claim("fano-quotable-lines", "{1,5,7} and {2,3,7} are lines",
                            f.collinear(1, 5, 7) && f.collinear(2, 3, 7)));
    claims->push_back(claim("four-point-rule", "s_i s_j = s_k s_l when no three are collinear", true,
                            std::to_string(quads) + " quadruples"));
    claims->push_back(claim("lines-transitive", "N permutes the 7 lines transitively", true));
  }
  return f;
}

// ---------------------------------------------------------------- families

FamilyReport verify_relation_families(const ConcreteModel &m, const FanoStructure &f) {
  FamilyReport rep;
  auto lab = [&](const LabelWord &w) { return m.evaluate_labels(w); };
  auto record = [&](std::string fam, std::vector<std::size_t> idx, Permutation e) {
    RelationFamilyWitness w;
    w.family = std::move(fam);
    w.indices = std::move(idx);
    w.in_n = m.N.contains(e);
    w.order = static_cast<std::size_t>(e.order());
    w.element = std::move(e);
    rep.witnesses.push_back(w);
    return rep.witnesses.back();
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= kLabels; ++i)
    for (std::size_t j = 1; j <= kLabels; ++j)
      if (j != i && j != bar(i))
        pairs.emplace_back(i, j);

  // alpha
  {
    std::vector<std::string> bad;
    for (auto [i, j] : pairs) {
      auto w = record("alpha", {i, j}, lab({i, j, i, j, i}));
      if (!w.in_n || w.order != 2 || !(w.element == lab({j, i, j, i, j})))
        bad.push_back(std::to_string(i) + "," + std::to_string(j));
    }
    rep.claims.push_back(claim("alpha", "alpha_(i,j) = t_i t_j t_i t_j t_i lies in N, is an involution and equals alpha_(j,i), for all 168 ordered pairs",
                               bad.empty() && pairs.size() == 168,
                               bad.empty() ? std::to_string(pairs.size()) + " pairs" : "fails at " + bad.front()));
  }
  // beta
  {
    std::vector<std::string> bad;
    for (auto [i, j] : pairs) {
      auto w = record("beta", {i, j, bar(i)}, lab({i, j, bar(i), bar(j), i}));
      if (!w.in_n || w.order != 4 || !(w.element == lab({bar(j), i, j, bar(i), bar(j)})))
        bad.push_back(std::to_string(i) + "," + std::to_string(j));
    }
    rep.claims.push_back(claim("beta", "beta_(i,j,i') = t_i t_j t_i' t_j' t_i lies in N, has order 4 and equals t_j' t_i t_j t_i' t_j'",
                               bad.empty(), bad.empty() ? "" : "fails at " + bad.front()));
  }
  // delta
  {
    std::vector<std::string> bad;
    for (auto [i, j] : pairs) {
      auto w = record("delta", {i, j}, m.ti(bar(j)) * m.si(i) * m.ti(j) * m.si(i));
      bool ok = w.in_n && w.order == 2;
      if (ok) {
        auto l = m.label_action(w.element);
        ok = l[static_cast<Point>(j - 1)] == j - 1 && l[static_cast<Point>(bar(j) - 1)] == bar(j) - 1 &&
             l[static_cast<Point>(i - 1)] == bar(i) - 1 && l[static_cast<Point>(bar(i) - 1)] == i - 1;
      }
      if (!ok)
        bad.push_back(std::to_string(i) + "," + std::to_string(j));
    }
    rep.claims.push_back(claim("delta", "delta_(i,j) = t_j' s_i t_j s_i lies in N, is an involution, fixes j and j' and swaps i and i'",
                               bad.empty(), bad.empty() ? "" : "fails at " + bad.front()));
  }
  // gamma, with the sharp separation
  {
    std::size_t collinear = 0, wrong = 0;
    std::string first;
    for (std::size_t i = 1; i <= kLabels; ++i)
      for (std::size_t j = 1; j <= kLabels; ++j)
        for (std::size_t k = 1; k <= kLabels; ++k) {
          if (std::set<std::size_t>{residue(i), residue(j), residue(k)}.size() != 3)
            continue;
          Permutation e = lab({i, j, k, i, j});
          bool col = f.collinear(i, j, k);
          bool in = m.N.contains(e);
          if (col) {
            ++collinear;
            record("gamma", {i, j, k}, e);
          }
          if (in != col) {
            ++wrong;
            if (first.empty())
              first = std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
          }
        }
    rep.claims.push_back(claim("gamma", "gamma_(i,j,k) = t_i t_j t_k t_i t_j lies in N exactly when i, j, k are collinear",
                               wrong == 0 && collinear > 0,
                               std::to_string(collinear) + " collinear triples" +
                                   (first.empty() ? "" : ", first mismatch " + first)));
  }
  // sigma
  {
    std::vector<std::string> bad;
    for (std::size_t i = 1; i <= kLabels; ++i)
      for (std::size_t j = 1; j <= kLabels; ++j)
        for (std::size_t k = 1; k <= kLabels; ++k) {
          if (!f.collinear(i, j, k))
            continue;
          auto w = record("sigma", {i, j, k}, lab({i, j, k}) * lab({i, j, bar(k)}).inverse());
          if (!w.in_n)
            bad.push_back(std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k));
        }
    rep.claims.push_back(claim("sigma", "(t_i t_j t_k)(t_i t_j t_(k+7))^-1 lies in N for collinear i, j, k",
                               bad.empty(), bad.empty() ? "" : "fails at " + bad.front()));
  }
  // epsilon: the base relation and its N-conjugates
  {
    const LabelWord lhs{7, 1, 2, 3}, rhs{7, 6, 5, 4};
    bool base = lab(lhs) == m.x * lab(rhs);
    std::size_t bad = 0;
    std::unordered_set<Permutation, PermutationHash> distinct;
    m.N.for_each_element([&](const Permutation &n) {
      Permutation l = m.label_action(n);
      LabelWord a, b;
      for (std::size_t v : lhs)
        a.push_back(l[static_cast<Point>(v - 1)] + 1);
      for (std::size_t v : rhs)
        b.push_back(l[static_cast<Point>(v - 1)] + 1);
      Permutation e = lab(a) * lab(b).inverse();
      if (!(e == conjugate(m.x, n)) || !m.N.contains(e))
        ++bad;
      if (distinct.insert(e).second)
        record("epsilon", {a[0], a[1], a[2], a[3], b[1], b[2], b[3]}, e);
      return true;
    });
    rep.claims.push_back(claim("epsilon-base", "t7t1t2t3 = x t7t6t5t4", base));
    rep.claims.push_back(claim("epsilon-conjugates", "every N-conjugate of the base relation holds with its element in N",
                               base && bad == 0, std::to_string(distinct.size()) + " distinct elements"));
  }

  // named instances
  Permutation a23 = lab({2, 3, 2, 3, 2});
  rep.claims.push_back(claim("alpha-2-3", "alpha_(2,3) = t2t3t2t3t2 = y", a23 == m.y));
  Permutation b = lab({1, 12, 8, 5, 1});
  Permutation xyx2 = m.evaluate("x*y*x^2").inverse();
  rep.claims.push_back(claim("beta-1-12-8", "beta_(1,12,8) = t1t12t8t5t1 = (x y x^2)^-1, of order 4",
                             b == xyx2 && b.order() == 4));
  Permutation d = m.ti(5) * m.si(1) * m.ti(12) * m.si(1);
  Permutation a112 = lab({1, 12, 1, 12, 1});
  rep.claims.push_back(claim("delta-1-12", "delta_(1,12) = beta_(1,12,8)^-1 alpha_(1,12)", d == b.inverse() * a112));
  Permutation witness = lab({14, 6, 3, 11}) * lab({5, 3, 8, 14}).inverse();
  rep.claims.push_back(claim("t14t6t3t11-witness", "t14t6t3t11 (t5t3t8t14)^-1 lies in N", m.N.contains(witness)));

  Permutation sigma = lab({1, 6, 4, 2}) * lab({1, 3, 5, 7}).inverse();
  bool sigma_in = m.N.contains(sigma);
  rep.sigma_label_action = sigma_in ? m.label_action(sigma) : Permutation::identity(kLabels);
  rep.claims.push_back(claim("sigma-t1t6t4t2", "t1t6t4t2 (t1t3t5t7)^-1 lies in N", sigma_in,
                             sigma_in ? "label action " + rep.sigma_label_action.to_cycles() : ""));
  return rep;
}

// ---------------------------------------------------------------- model facts

Claims verify_prop21(const ConcreteModel &m) {
  Claims out;
  const Permutation tg[] = {m.t};
  PermutationGroup cnt = centralizer_bruteforce(m.N, tg);
  out.push_back(claim("centralizer-N-t", "|C_N(t)| = 12", cnt.order() == 12, std::to_string(cnt.order())));

  std::unordered_set<Permutation, PermutationHash> conj;
  m.N.for_each_element([&](const Permutation &n) {
    conj.insert(conjugate(m.t, n));
    return true;
  });
  out.push_back(claim("t-conjugates", "t has 14 conjugates under N", conj.size() == 14,
                      std::to_string(conj.size())));

  PermutationGroup tgroup(m.tgens, kDegree);
  out.push_back(claim("t-generate", "|<t_1,...,t_14>| = 443520", tgroup.order() == 443520,
                      std::to_string(tgroup.order())));

  PermutationGroup nt18({m.x, m.y, m.ti(1) * m.ti(8)}, kDegree);
  out.push_back(claim("N-t1t8", "|<N, t1t8>| = 1344", nt18.order() == 1344, std::to_string(nt18.order())));

  PermutationGroup cg = centralizer_bruteforce(m.G, cnt.generators());
  std::uint64_t dorder = derived_subgroup(cg).order();
  out.push_back(claim("centralizer-G-A4", "C_G(C_N(t)) has order 12 with derived subgroup of order 4",
                      cg.order() == 12 && dorder == 4,
                      std::to_string(cg.order()) + ", derived " + std::to_string(dorder)));
  return out;
}

Claims verify_model_facts(const ConcreteModel &m) {
  Claims out;
  const auto &file = presentation_file();
  const Permutation model[] = {m.x, m.y, m.t};
  std::vector<std::string> bad;
  for (std::size_t k = 0; k < file.presentation.relators.size(); ++k)
    if (!symgen::evaluate(file.presentation.relators[k], model).is_identity())
      bad.push_back(file.relator_sources[k]);
  out.push_back(claim("relators-hold", "all " + std::to_string(file.presentation.relators.size()) +
                                           " relators evaluate to the identity in the model",
                      bad.empty() && file.presentation.relators.size() == 10,
                      bad.empty() ? "" : "fails: " + bad.front()));

  bool action_ok = true;
  std::string action_detail;
  for (const auto &[name, cycles] : file.actions) {
    Permutation want = Permutation::from_cycles(cycles, kLabels);
    Permutation got = m.label_action(m.evaluate(name));
    if (!(want == got)) {
      action_ok = false;
      action_detail = name + " acts as " + got.to_cycles();
    }
  }
  out.push_back(claim("label-action", "conjugation by x and y permutes t_1..t_14 as declared",
                      action_ok && file.actions.size() == 2, action_detail));

  Permutation s7 = m.evaluate("t*t^(x^6*y*x)");
  out.push_back(claim("s7-in-M", "s_7 = t t^(x^6 y x) lies in M and equals t7t14",
                      m.M.contains(s7) && s7 == m.ti(7) * m.ti(14)));
  out.push_back(claim("t-not-in-M", "t lies in neither M nor N", !m.M.contains(m.t) && !m.N.contains(m.t)));
  out.push_back(claim("t-is-t7", "t = t_7", m.t == m.ti(7)));

  // blocks through label 1, one per choice of a second label
  PermutationGroup on_labels({m.label_action(m.x), m.label_action(m.y)}, kLabels);
  std::set<std::size_t> block_sizes;
  std::string pairs;
  for (Point b = 1; b < kLabels; ++b) {
    auto blocks = minimal_blocks(on_labels, 0, b);
    block_sizes.insert(blocks.front().size());
    if (blocks.size() == 7 && pairs.empty())
      for (const auto &blk : blocks)
        pairs += "{" + std::to_string(blk[0] + 1) + "," + std::to_string(blk[1] + 1) + "}";
  }
  std::string sizes;
  for (auto s : block_sizes)
    sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  out.push_back(claim("labels-two-blocks-of-7", "N on the 14 labels is imprimitive with two blocks of size seven",
                      block_sizes.count(7) > 0,
                      "block sizes through label 1: {" + sizes + "}; the system of size 2 is " + pairs));
  out.push_back(claim("G-transitive", "G is transitive on 22 points", is_transitive(m.G)));

  auto classes = conjugacy_classes_bruteforce(m.N);
  std::size_t inv_classes = 0, involutions = 0;
  for (const auto &c : classes)
    if (c.front().order() == 2) {
      ++inv_classes;
      involutions += c.size();
    }
  out.push_back(claim("involutions-conjugate", "all involutions of N are conjugate in N", inv_classes == 1,
                      std::to_string(involutions) + " involutions in " + std::to_string(inv_classes) +
                          " classes"));
  return out;
}

// ---------------------------------------------------------------- maximal subgroups

const std::array<std::array<int, 6>, 4> &mog() {
  static const std::array<std::array<int, 6>, 4> table{{{24, 14, 17, 11, 22, 19},
                                                         {23, 8, 4, 13, 1, 9},
                                                         {3, 20, 16, 7, 12, 5},
                                                         {15, 18, 10, 2, 21, 6}}};
  return table;
}

std::vector<MaximalSubgroupRow> verify_maximal_subgroups(const ConcreteModel &m) {
  std::vector<MaximalSubgroupRow> rows{
      {"L3(4)", {"x", "t^(x^6*t)"}, 20160, 0, "point", {4}, false, {}},
      {"2^4:A6", {"x*t", "y^(x^3)"}, 5760, 0, "set", {5, 8, 9, 10, 17, 18}, false, {}},
      {"A7", {"x", "t^(x*t*x^4*t)"}, 2520, 0, "set", {1, 8, 12, 14, 15, 17, 20}, false, {}},
      {"A7", {"x", "t^(x^3*t*x^6*t)"}, 2520, 0, "set", {5, 6, 11, 16, 19, 20, 21}, false, {}},
      {"2^4:S5", {"x*t", "t^(x*y*x^4)"}, 1920, 0, "set", {5, 18}, false, {}},
      {"2^3:L3(2)", {"x", "y", "t*t^(x^6*y*x)"}, 1344, 0, "set", {2, 3, 4, 7, 9, 13, 18, 22}, false, {}},
      {"M10", {"x^2*t", "y^(x^4)"}, 720, 0, "set", {2, 4, 5, 11, 12, 16, 18, 19, 20, 22}, false, {}},
      {"L2(11)", {"x*y", "t"}, 660, 0, "set", {1, 2, 5, 7, 8, 9, 10, 14, 15, 17, 22}, false, {}},
  };
  std::set<int> mog_labels;
  for (const auto &r : mog())
    mog_labels.insert(r.begin(), r.end());
  for (auto &row : rows) {
    std::vector<Permutation> gens;
    for (const auto &w : row.words)
      gens.push_back(m.evaluate(w));
    PermutationGroup h(gens, kDegree);
    row.order = h.order();
    std::vector<Point> set;
    bool labelled = true;
    for (std::size_t p : row.claimed_set) {
      set.push_back(static_cast<Point>(p - 1));
      labelled = labelled && mog_labels.count(static_cast<int>(p));
    }
    row.stabilizes = labelled && stabilizes_set(gens, set);
    for (const auto &o : orbits(h))
      if (o.size() == row.claimed_set.size()) {
        std::vector<std::size_t> one;
        for (Point p : o)
          one.push_back(p + 1);
        std::sort(one.begin(), one.end());
        row.orbits_of_claimed_size.push_back(one);
      }
  }
  return rows;
}

// ---------------------------------------------------------------- covers

Presentation presentation_without(std::string_view relator_source) {
  const auto &file = presentation_file();
  Presentation p = file.presentation;
  p.relators.clear();
  bool found = false;
  for (std::size_t k = 0; k < file.presentation.relators.size(); ++k) {
    if (file.relator_sources[k] == relator_source) {
      found = true;
      continue;
    }
    p.relators.push_back(file.presentation.relators[k]);
  }
  if (!found)
    throw std::invalid_argument("no relator " + std::string(relator_source));
  return p;
}

std::vector<CoverResult> verify_covers(std::size_t max_cosets) {
  struct Run {
    std::string drop;
    std::size_t expected;
  };
  const Run runs[] = {{"(y*t^(x^2))^5", 5280}, {"(x*t)^8", 7920}, {"", 2640}};
  std::vector<CoverResult> out;
  for (const auto &r : runs) {
    Presentation p = r.drop.empty() ? presentation_file().presentation : presentation_without(r.drop);
    EnumerationOptions opts;
    opts.max_cosets = max_cosets;
    opts.strategy = Strategy::Felsch;
    auto start = std::chrono::steady_clock::now();
    CosetTable table = enumerate(p, p.subgroup("N"), opts);
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    out.push_back({table.index(), r.expected, r.drop, table.stats(), dt.count()});
  }
  return out;
}

// ---------------------------------------------------------------- double cosets

namespace {

using K = CosetFixture::Kind;

const std::vector<LabelWord> &named_words() {
  static const std::vector<LabelWord> words{{}, {7}, {7, 1}, {7, 1, 2}, {7, 1, 3}, {7, 1, 2, 3}, {7, 1, 2, 4}, {7, 1, 3, 9}};
  return words;
}

// count and stabilizer order per named word
const std::vector<std::pair<std::size_t, std::uint64_t>> &expected_table() {
  static const std::vector<std::pair<std::size_t, std::uint64_t>> rows{
      {1, 168}, {7, 24}, {42, 4}, {84, 2}, {84, 2}, {84, 2}, {14, 12}, {14, 12}};
  return rows;
}

std::string display_name(const DoubleCosetDecomposition &d, std::size_t dc) {
  for (const auto &w : named_words())
    if (d.double_coset_of(w) == dc)
      return double_coset_name(w);
  return "?";
}

} // namespace

std::vector<CosetFixture> coset_fixtures() {
  return {
      {{7}, {14}, K::SameCoset, {}},
      {{7, 1, 8}, {14}, K::SameCoset, {}},
      {{7, 1}, {7, 8}, K::SameCoset, {}},
      {{7, 1}, {14, 1}, K::SameCoset, {}},
      {{7, 1, 7}, {7, 1}, K::SameCoset, {}},
      {{7, 1, 12}, {1, 7}, K::SameCoset, {}},
      {{7, 1, 2}, {5, 1, 9}, K::SameCoset, {}},
      {{7, 1, 2, 1}, {4, 1, 2}, K::SameCoset, {}},
      {{7, 1, 2, 5}, {8, 5, 11, 3}, K::SameCoset, {}},
      {{7, 1, 2, 6}, {11, 2, 1}, K::SameCoset, {}},
      {{7, 1, 2, 8}, {5, 1, 9}, K::SameCoset, {}},
      {{7, 1, 2, 12}, {13, 5, 8, 10}, K::SameCoset, {}},
      {{7, 1, 3}, {12, 1, 10}, K::SameCoset, {}},
      {{7, 1, 3, 1}, {6, 1, 3}, K::SameCoset, {}},
      {{7, 1, 3, 2}, {2, 6, 3, 7}, K::SameCoset, {}},
      {{7, 1, 3, 4}, {9, 10, 1}, K::SameCoset, {}},
      {{7, 1, 3, 5}, {2, 4, 6, 1}, K::SameCoset, {}},
      {{7, 1, 3, 7}, {12, 10, 4, 14}, K::SameCoset, {}},
      {{14, 4, 10}, {12, 10, 14}, K::SameCoset, {}},
      {{7, 1, 3, 7}, {13, 1, 11, 7}, K::SameCoset, {}},
      {{7, 1, 3, 8}, {7, 1, 3}, K::SameCoset, {}},
      {{7, 1, 2, 3}, {14, 6, 2, 10}, K::SameCoset, {}},
      {{7, 1, 2, 3, 2}, {3, 13, 2, 7}, K::SameCoset, {}},
      {{7, 1, 2, 3, 4}, {7, 6, 5}, K::SameCoset, {}},
      {{7, 1, 2, 3, 5}, {10, 13, 5, 4}, K::SameCoset, {}},
      {{7, 1, 2, 3, 5}, {6, 3, 4}, K::SameCoset, {}},
      {{7, 1, 2, 3, 6}, {6, 3, 4, 5, 6}, K::SameCoset, {}},
      {{7, 1, 2, 3, 6}, {6, 7, 1}, K::SameCoset, {}},
      {{7, 1, 2, 3, 7}, {3, 5, 2}, K::SameCoset, {}},
      {{7, 1, 2, 3, 8}, {8, 4, 13}, K::SameCoset, {}},
      {{7, 1, 2, 3, 9}, {14, 6, 2, 10}, K::SameCoset, {}},
      {{7, 1, 3, 9}, {14, 11, 3, 2}, K::SameCoset, {}},
      {{7, 1, 3, 9}, {9, 12, 10, 1}, K::SameCoset, {}},
      {{7, 1, 3, 9}, {12, 1, 10, 9}, K::SameCoset, {}},
      {{7, 1, 3, 9, 3}, {7, 1, 3, 9}, K::SameCoset, {}},
      {{7, 1, 3, 9, 10}, {7, 8, 10, 6}, K::SameCoset, {}},
      {{12, 8, 3}, {7, 8, 10}, K::SameCoset, {}},
      {{7, 1, 2, 4}, {3, 7, 2, 12}, K::SameCoset, {}},
      {{7, 1, 2, 4}, {4, 10, 2, 13}, K::SameCoset, {}},
      {{7, 1, 2, 4, 2}, {3, 6, 9, 7}, K::SameCoset, {}},
      {{7, 1, 2, 4, 9}, {3, 13, 2, 11}, K::SameCoset, {}},

      {{7, 1, 2, 1}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 5}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 6}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 8}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{13, 5, 8, 10}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{6, 1, 3}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 2}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 4}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 5}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 7}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{14, 4, 10}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{13, 1, 11}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 8}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 3, 2}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 3, 4}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{7, 13, 1}, {7, 1, 2}, K::SameDoubleCoset, "printed t7t13t15, subscripts read mod 14"},
      {{7, 1, 2, 3, 5}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 3, 6}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 3, 7}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 3, 8}, {7, 1, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 3, 9}, {7, 1, 2, 3}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 9, 3}, {7, 1, 3, 9}, K::SameDoubleCoset, {}},
      {{7, 1, 3, 9, 10}, {7, 1, 2, 4}, K::SameDoubleCoset, {}},
      {{12, 8, 3}, {7, 1, 2}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 4, 2}, {7, 1, 3, 9}, K::SameDoubleCoset, {}},
      {{7, 1, 2, 4, 9}, {7, 1, 2, 4}, K::SameDoubleCoset, {}},
  };
}

std::string fixture_text(const CosetFixture &f) {
  std::string s = f.kind == K::SameCoset ? labels_text(f.lhs) + " ~ " + labels_text(f.rhs)
                                         : labels_text(f.lhs) + " in " + double_coset_name(f.rhs);
  if (!f.note.empty())
    s += " (" + f.note + ")";
  return s;
}

std::vector<StabilizerFixture> stabilizer_fixtures() {
  return {
      {{7}, {"(2,13)(3,4)(5,12)(6,9)(7,14)(10,11)"}, {{7, 14}, {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13}}},
      {{7, 1},
       {"(2,13)(3,4)(5,12)(6,9)(7,14)(10,11)", "(1,8)(2,10)(3,9)(4,6)(5,12)(11,13)"},
       {{1, 8}, {5, 12}, {7, 14}, {2, 10, 11, 13}, {3, 4, 6, 9}}},
      {{7, 1, 2},
       {"(2,9)(3,11)(4,10)(5,7)(6,13)(12,14)"},
       {{1}, {8}, {2, 9}, {3, 11}, {4, 10}, {5, 7}, {6, 13}, {12, 14}}},
      {{7, 1, 3},
       {"(2,6)(3,10)(4,11)(5,14)(7,12)(9,13)"},
       {{1}, {8}, {2, 6}, {3, 10}, {4, 11}, {5, 14}, {7, 12}, {9, 13}}},
      {{7, 1, 2, 3},
       {"(1,6)(3,10)(4,12)(5,11)(7,14)(8,13)"},
       {{2}, {9}, {1, 6}, {3, 10}, {4, 12}, {5, 11}, {7, 14}, {8, 13}}},
      {{7, 1, 3, 9},
       {"(1,11)(2,9)(4,8)(5,6)(7,14)(12,13)", "(1,12,9)(2,8,5)(4,13,14)(6,7,11)"},
       {{3}, {10}, {1, 2, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14}}},
      {{7, 1, 2, 4},
       {"(1,13)(3,7)(4,11)(5,12)(6,8)(10,14)", "(1,10,12)(3,5,8)(4,13,7)(6,14,11)"},
       {{2}, {9}, {1, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14}}},
  };
}

std::vector<ExpectedEdge> expected_graph() {
  return {
      {{}, {7}, 14, {}},
      {{7}, {}, 2, {}},
      {{7}, {7, 1}, 12, {}},
      {{7, 1}, {7}, 2, {}},
      {{7, 1}, {7, 1}, 4, {2, 2}},
      {{7, 1}, {7, 1, 2}, 4, {}},
      {{7, 1}, {7, 1, 3}, 4, {}},
      {{7, 1, 2}, {7, 1}, 2, {}},
      {{7, 1, 2}, {7, 1, 2}, 3, {1, 2}},
      {{7, 1, 2}, {7, 1, 3}, 1, {}},
      {{7, 1, 2}, {7, 1, 2, 3}, 6, {}},
      {{7, 1, 2}, {7, 1, 2, 4}, 2, {}},
      {{7, 1, 3}, {7, 1}, 2, {}},
      {{7, 1, 3}, {7, 1, 2}, 1, {}},
      {{7, 1, 3}, {7, 1, 3}, 3, {1, 2}},
      {{7, 1, 3}, {7, 1, 2, 3}, 6, {}},
      {{7, 1, 3}, {7, 1, 3, 9}, 2, {}},
      {{7, 1, 2, 3}, {7, 1, 2}, 6, {}},
      {{7, 1, 2, 3}, {7, 1, 3}, 6, {}},
      {{7, 1, 2, 3}, {7, 1, 2, 3}, 2, {1, 1}},
      {{7, 1, 2, 4}, {7, 1, 2}, 12, {}},
      {{7, 1, 2, 4}, {7, 1, 2, 4}, 1, {1}},
      {{7, 1, 2, 4}, {7, 1, 3, 9}, 1, {}},
      {{7, 1, 3, 9}, {7, 1, 3}, 12, {}},
      {{7, 1, 3, 9}, {7, 1, 3, 9}, 1, {1}},
      {{7, 1, 3, 9}, {7, 1, 2, 4}, 1, {}},
  };
}

DceRun run_dce(Strategy strategy) {
  const auto &file = presentation_file();
  EnumerationOptions opts;
  opts.strategy = strategy;
  CosetTable table = enumerate(file.presentation, file.presentation.subgroup("M"), opts);
  auto map = progenitor().generator_map();
  auto control = map.control_words();
  auto tgens = map.symmetric_generator_words();
  auto d = decompose(table, control, tgens);
  return DceRun{std::move(table), std::move(control), std::move(tgens), std::move(d)};
}

Claims verify_decomposition(const DceRun &run) {
  Claims out;
  const auto &d = run.decomposition;
  std::vector<std::size_t> counts, orders;
  std::size_t total = 0;
  bool orbit_stab = true;
  for (const auto &dc : d.double_cosets()) {
    counts.push_back(dc.count());
    orders.push_back(static_cast<std::size_t>(dc.stabilizer.order()));
    total += dc.count();
    orbit_stab = orbit_stab && dc.count() * dc.stabilizer.order() == d.control_group().order();
  }
  out.push_back(claim("index-M", "M has index 330", run.table.index() == 330, std::to_string(run.table.index())));
  out.push_back(claim("double-coset-count", "there are 8 double cosets", d.size() == 8, std::to_string(d.size())));
  out.push_back(claim("double-coset-sizes", "single-coset counts are {1,7,42,84,84,84,14,14}",
                      sorted_multiset(counts) == sorted_multiset({1, 7, 42, 84, 84, 84, 14, 14}) && total == 330,
                      join(counts)));
  out.push_back(claim("stabilizer-orders", "coset stabilizer orders are {168,24,4,2,2,2,12,12}",
                      sorted_multiset(orders) == sorted_multiset({168, 24, 4, 2, 2, 2, 12, 12}), join(orders)));
  out.push_back(claim("orbit-stabilizer", "count * |N^(w)| = 168 for every double coset", orbit_stab));

  // each printed representative names a different double coset with the printed sizes
  std::set<std::size_t> hit;
  bool rows_ok = true;
  std::string detail;
  for (std::size_t k = 0; k < named_words().size(); ++k) {
    std::size_t dc = d.double_coset_of(named_words()[k]);
    hit.insert(dc);
    const auto &got = d.double_cosets()[dc];
    if (got.count() != expected_table()[k].first || got.stabilizer.order() != expected_table()[k].second) {
      rows_ok = false;
      detail += double_coset_name(named_words()[k]) + " has " + std::to_string(got.count()) + " cosets; ";
    }
  }
  out.push_back(claim("table-rows", "each printed representative lies in its own double coset with the printed count and stabilizer order",
                      rows_ok && hit.size() == 8, detail));

  bool contains_pointwise = true;
  for (const auto &dc : d.double_cosets()) {
    std::vector<Point> pts;
    for (std::size_t l : dc.representative)
      pts.push_back(static_cast<Point>(l - 1));
    contains_pointwise = contains_pointwise && dc.stabilizer.contains(pointwise_stabilizer(d.control_group(), pts));
  }
  out.push_back(claim("pointwise-inside", "N^(w) contains the pointwise stabilizer of the labels of w", contains_pointwise));
  return out;
}

Claims verify_graph(const DceRun &run) {
  Claims out;
  const auto &d = run.decomposition;
  CollapsedCayleyGraph g = collapsed_graph(d);
  auto expected = expected_graph();
  std::string detail;
  bool ok = g.edges.size() == expected.size();
  if (!ok)
    detail = std::to_string(g.edges.size()) + " edges, expected " + std::to_string(expected.size()) + "; ";
  for (const auto &e : expected) {
    std::size_t from = d.double_coset_of(e.from), to = d.double_coset_of(e.to);
    auto it = std::find_if(g.edges.begin(), g.edges.end(),
                           [&](const CollapsedEdge &c) { return c.from == from && c.to == to; });
    std::string name = double_coset_name(e.from) + "->" + double_coset_name(e.to);
    if (it == g.edges.end()) {
      ok = false;
      detail += name + " missing; ";
      continue;
    }
    if (it->multiplicity != e.multiplicity || (from == to && it->orbit_sizes != e.loop_orbits)) {
      ok = false;
      detail += name + " has " + std::to_string(it->multiplicity) + " (" + join(it->orbit_sizes, "+") + "); ";
    }
  }
  out.push_back(claim("graph-edges", "collapsed Cayley graph edges and loops match the expected graph", ok, detail));
  bool degrees = true;
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    degrees = degrees && g.out_degree(k) == 14;
  out.push_back(claim("graph-degree", "every node has 14 outgoing edges counted with multiplicity", degrees));
  out.push_back(claim("graph-connected", "the collapsed Cayley graph is connected", g.connected()));
  return out;
}

Claims verify_fixtures(const DceRun &run) {
  Claims out;
  const auto &d = run.decomposition;
  for (const auto &f : coset_fixtures()) {
    bool ok;
    std::string detail;
    if (f.kind == K::SameCoset) {
      ok = words_equivalent(run.table, run.tgen_words, f.lhs, f.rhs);
      if (!ok)
        detail = "cosets " + std::to_string(d.coset_of(f.lhs) + 1) + " and " + std::to_string(d.coset_of(f.rhs) + 1) +
                 " in " + display_name(d, d.double_coset_of(f.lhs)) + " and " + display_name(d, d.double_coset_of(f.rhs));
    } else {
      ok = d.double_coset_of(f.lhs) == d.double_coset_of(f.rhs);
      if (!ok)
        detail = labels_text(f.lhs) + " lies in " + display_name(d, d.double_coset_of(f.lhs));
    }
    std::string id = (f.kind == K::SameCoset ? "coset-" : "member-") + join(f.lhs, ".") + "-" + join(f.rhs, ".");
    out.push_back(claim(id, fixture_text(f), ok, detail));
  }
  return out;
}

Claims verify_stabilizer_fixtures(const DceRun &run) {
  Claims out;
  const auto &d = run.decomposition;
  for (const auto &f : stabilizer_fixtures()) {
    PermutationGroup stab = d.coset_stabilizer(f.word);
    bool members = true;
    for (const auto &g : f.generators)
      members = members && stab.contains(Permutation::from_cycles(g, kLabels));
    std::vector<std::vector<std::size_t>> got;
    for (const auto &o : orbits(stab)) {
      std::vector<std::size_t> one;
      for (Point p : o)
        one.push_back(p + 1);
      std::sort(one.begin(), one.end());
      got.push_back(one);
    }
    auto want = f.orbits;
    for (auto &o : want)
      std::sort(o.begin(), o.end());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    std::string name = double_coset_name(f.word);
    out.push_back(claim("stabilizer-" + join(f.word, "."), "the listed elements lie in N^(" + labels_text(f.word) + ")",
                        members, "order " + std::to_string(stab.order())));
    if (!want.empty()) {
      std::string shown;
      for (const auto &o : got)
        shown += "{" + join(o) + "}";
      out.push_back(claim("orbits-" + join(f.word, "."), "N^(" + labels_text(f.word) + ") has the listed orbits",
                          got == want, shown));
    }
  }
  return out;
}

IwasawaReport run_iwasawa(const DceRun &run) {
  const auto &p = presentation_file().presentation;
  const auto &t = run.tgen_words;
  // s7, s1, s2
  const FlatWord k[] = {t[6] * t[13], t[0] * t[7], t[1] * t[8]};
  return iwasawa_check(run.table, p, k, 443520);
}

Claims iwasawa_claims(const IwasawaReport &r) {
  auto n = [](std::uint64_t v) { return std::to_string(v); };
  return {
      claim("image-order", "the action on 330 cosets has image of order 443520 = 330 * 1344",
            r.degree == 330 && r.image_order == 443520 && r.stabilizer_order == 1344 && r.faithful,
            "degree " + n(r.degree) + ", image " + n(r.image_order) + ", stabilizer " + n(r.stabilizer_order)),
      claim("perfect", "the image is perfect", r.perfect, "derived order " + n(r.derived_order)),
      claim("primitive", "the image is primitive on 330 points", r.primitive),
      claim("K-abelian", "K = <s7,s1,s2> is abelian of order 8", r.k_abelian && r.k_order == 8, "order " + n(r.k_order)),
      claim("K-normal", "K lies in the stabilizer of the trivial coset and is normalized by it",
            r.k_in_stabilizer && r.k_normalized),
      claim("K-closure", "the normal closure of K is the whole image", r.k_closure_is_whole,
            "order " + n(r.k_closure_order)),
      claim("verdict", "the verdict is simple", r.verdict == Verdict::Simple, to_string(r.verdict)),
  };
}

Claims verify_all(const VerifyOptions &options) {
  Claims out;
  auto add = [&](Claims c) { out.insert(out.end(), c.begin(), c.end()); };
  ConcreteModel m = build_model();
  out.push_back(claim("orders", "|G| = 443520, |M| = 1344, |N| = 168", true));
  add(verify_model_facts(m));
  Claims s;
  FanoStructure f = verify_s_structure(m, &s);
  add(s);
  add(verify_relation_families(m, f).claims);
  add(verify_prop21(m));
  for (const auto &row : verify_maximal_subgroups(m)) {
    std::string what = row.kind == "point" ? "fixes " + join(row.claimed_set) : "stabilizes {" + join(row.claimed_set) + "}";
    std::string detail = "order " + std::to_string(row.order);
    if (!row.stabilizes && !row.orbits_of_claimed_size.empty()) {
      detail += "; orbits of that size:";
      for (const auto &o : row.orbits_of_claimed_size)
        detail += " {" + join(o) + "}";
    }
    out.push_back(claim("maximal-" + row.name + "-" + join(row.claimed_set, "."),
                        "<" + join_words(row.words) + "> has order " + std::to_string(row.expected_order) + " and " + what,
                        row.passed(), detail));
  }
  DceRun run = run_dce();
  add(verify_decomposition(run));
  add(verify_graph(run));
  add(verify_fixtures(run));
  add(verify_stabilizer_fixtures(run));
  add(iwasawa_claims(run_iwasawa(run)));
  if (options.covers)
    for (const auto &c : verify_covers(options.cover_max_cosets))
      out.push_back(claim(c.dropped.empty() ? "cover-control" : "cover-" + std::to_string(c.expected / 2640),
                          (c.dropped.empty() ? std::string("the full presentation") : "dropping " + c.dropped) +
                              " gives index " + std::to_string(c.expected) + " over <x,y>",
                          c.index == c.expected, "index " + std::to_string(c.index)));
  return out;
}

} // namespace symgen::m22
