#include "symgen/dce.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "symgen/progenitor.hpp"

namespace symgen {

namespace {

Permutation restrict_to_labels(const Permutation &p, std::size_t n) {
  return Permutation(std::vector<Point>(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(n)));
}

PermutationGroup label_stabilizer(const PermutationGroup &big, std::size_t n, std::uint32_t coset) {
  PermutationGroup stab = point_stabilizer(big, static_cast<Point>(n + coset));
  std::vector<Permutation> gens;
  for (const auto &g : stab.generators())
    gens.push_back(restrict_to_labels(g, n));
  return PermutationGroup(gens, n);
}

} // namespace

DoubleCosetDecomposition::DoubleCosetDecomposition(std::vector<DoubleCoset> double_cosets,
                                                   std::vector<std::uint32_t> owner,
                                                   std::vector<Permutation> tgen_actions,
                                                   PermutationGroup control,
                                                   PermutationGroup combined)
    : double_cosets_(std::move(double_cosets)), owner_(std::move(owner)),
      tgen_actions_(std::move(tgen_actions)), control_(std::move(control)),
      combined_(std::move(combined)) {}

const Permutation &DoubleCosetDecomposition::tgen_action(std::size_t label) const {
  if (label == 0 || label > tgen_actions_.size())
    throw DceError("label " + std::to_string(label) + " out of range 1.." +
                   std::to_string(tgen_actions_.size()));
  return tgen_actions_[label - 1];
}

std::uint32_t DoubleCosetDecomposition::coset_of(const LabelWord &w) const {
  std::uint32_t c = 0;
  for (std::size_t label : w)
    c = tgen_action(label)[c];
  return c;
}

PermutationGroup DoubleCosetDecomposition::coset_stabilizer(std::uint32_t coset) const {
  if (coset >= owner_.size())
    throw DceError("coset " + std::to_string(coset) + " out of range");
  return label_stabilizer(combined_, degree(), coset);
}

std::map<std::size_t, std::size_t> DoubleCosetDecomposition::edge_counts_at(std::uint32_t coset) const {
  std::map<std::size_t, std::size_t> out;
  for (const auto &t : tgen_actions_)
    ++out[owner_.at(t[coset])];
  return out;
}


DoubleCosetDecomposition decompose(const CosetTable &table, std::span<const FlatWord> control_words,
                                   std::span<const FlatWord> tgen_words) {
  const std::size_t n = tgen_words.size();
  const std::size_t index = table.index();
  if (n == 0 || control_words.empty())
    throw DceError("need control words and symmetric generator words");

  std::vector<Permutation> tacts, cacts;
  for (const auto &w : tgen_words)
    tacts.push_back(table.coset_action(w));
  for (const auto &w : control_words)
    cacts.push_back(table.coset_action(w));

  // Label action of N, read off from conjugation of the t_i actions.
  std::vector<Permutation> labels;
  for (const auto &c : cacts) {
    auto l = induced_label_action(tacts, c);
    if (!l)
      throw DceError("control words do not permute the symmetric generators in the coset action");
    labels.push_back(*l);
  }
  PermutationGroup control(labels, n);

  // N acting on labels and cosets at once; coset c is point n + c.
  std::vector<Permutation> combined;
  for (std::size_t k = 0; k < cacts.size(); ++k) {
    std::vector<Point> img(n + index);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = labels[k][static_cast<Point>(i)];
    for (std::size_t c = 0; c < index; ++c)
      img[n + c] = static_cast<Point>(n + cacts[k][static_cast<Point>(c)]);
    combined.emplace_back(std::move(img));
  }
  PermutationGroup big(combined, n + index);
  if (big.order() != control.order())
    throw DceError("the label action of the control words is not faithful on the cosets");
  if (orbit(cacts, 0, index).size() != 1)
    throw DceError("the control group does not fix the trivial coset");

  // Shortlex-minimal label words for every coset.
  std::vector<LabelWord> word(index);
  std::vector<bool> seen(index, false);
  std::vector<std::uint32_t> discovery{0};
  seen[0] = true;
  for (std::size_t k = 0; k < discovery.size(); ++k) {
    std::uint32_t c = discovery[k];
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t d = tacts[i][c];
      if (seen[d])
        continue;
      seen[d] = true;
      word[d] = word[c];
      word[d].push_back(i + 1);
      discovery.push_back(d);
    }
  }
  if (discovery.size() != index)
    throw DceError("the symmetric generators do not reach every coset");

  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> owner(index, kNone);
  std::vector<DoubleCoset> out;
  for (std::uint32_t c : discovery) {
    if (owner[c] != kNone)
      continue;
    DoubleCoset dc;
    dc.representative = word[c];
    dc.coset = c;
    auto members = orbit(cacts, c, index);
    for (Point m : members)
      owner[m] = static_cast<std::uint32_t>(out.size());
    dc.cosets.assign(members.begin(), members.end());
    std::sort(dc.cosets.begin(), dc.cosets.end());
    dc.stabilizer = label_stabilizer(big, n, c);
    if (dc.count() * dc.stabilizer.order() != control.order())
      throw DceError("orbit-stabilizer failed for " + double_coset_name(dc.representative));
    dc.stabilizer_orbits = orbits(dc.stabilizer);
    out.push_back(std::move(dc));
  }
  for (auto &dc : out)
    for (std::size_t i = 0; i < n; ++i)
      dc.edges.push_back(owner[tacts[i][dc.coset]]);
  return DoubleCosetDecomposition(std::move(out), std::move(owner), std::move(tacts),
                                  std::move(control), std::move(big));
}

bool words_equivalent(const CosetTable &table, std::span<const FlatWord> tgen_words,
                      const LabelWord &a, const LabelWord &b) {
  auto walk = [&](const LabelWord &w) {
    std::uint32_t c = 0;
    for (std::size_t label : w) {
      if (label == 0 || label > tgen_words.size())
        throw DceError("label " + std::to_string(label) + " out of range 1.." +
                       std::to_string(tgen_words.size()));
      c = table.trace(c, tgen_words[label - 1]);
    }
    return c;
  };
  return walk(a) == walk(b);
}

std::string double_coset_name(const LabelWord &w) {
  if (w.empty())
    return "[*]";
  std::string out = "[";
  for (std::size_t label : w)
    out += "t" + std::to_string(label);
  return out + "]";
}

std::size_t CollapsedCayleyGraph::multiplicity(std::size_t from, std::size_t to) const {
  for (const auto &e : edges)
    if (e.from == from && e.to == to)
      return e.multiplicity;
  return 0;
}

std::size_t CollapsedCayleyGraph::out_degree(std::size_t from) const {
  std::size_t total = 0;
  for (const auto &e : edges)
    if (e.from == from)
      total += e.multiplicity;
  return total;
}

bool CollapsedCayleyGraph::connected() const {
  if (nodes.empty())
    return true;
  std::vector<bool> seen(nodes.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (const auto &e : edges) {
      std::size_t v = e.from == u ? e.to : e.to == u ? e.from : u;
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string CollapsedCayleyGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph collapsed_cayley {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << double_coset_name(nodes[i].representative) << " ("
        << nodes[i].count << ")\"];\n";
  for (const auto &e : edges) {
    // loops spell out their stabilizer orbits ("2+2"), other edges give the total
    std::string label = std::to_string(e.multiplicity);
    if (e.from == e.to && e.orbit_sizes.size() > 1) {
      label.clear();
      for (std::size_t k = 0; k < e.orbit_sizes.size(); ++k)
        label += (k ? "+" : "") + std::to_string(e.orbit_sizes[k]);
    }
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

CollapsedCayleyGraph collapsed_graph(const DoubleCosetDecomposition &d) {
  CollapsedCayleyGraph g;
  for (const auto &dc : d.double_cosets()) {
    g.nodes.push_back({dc.representative, dc.count()});
    std::map<std::size_t, CollapsedEdge> by_target;
    for (const auto &orb : dc.stabilizer_orbits) {
      auto &e = by_target[dc.edges[orb.front()]];
      e.multiplicity += orb.size();
      e.orbit_sizes.push_back(orb.size());
    }
    for (auto &[to, e] : by_target) {
      e.from = g.nodes.size() - 1;
      e.to = to;
      std::sort(e.orbit_sizes.begin(), e.orbit_sizes.end());
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

} // namespace symgen
