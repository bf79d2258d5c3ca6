#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgen/perm_group.hpp"
#include "symgen/todd_coxeter.hpp"
#include "symgen/word.hpp"

namespace symgen {

class DceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Label sequences use 1-indexed symmetric-generator labels, e.g. {7,1,2}.
using LabelWord = std::vector<std::size_t>;

struct DoubleCoset {
  LabelWord representative;
  std::uint32_t coset = 0;           // table index of the representative single coset
  std::vector<std::uint32_t> cosets; // every single coset in it, ascending
  PermutationGroup stabilizer;       // N^(w) acting on the labels
  std::vector<std::vector<Point>> stabilizer_orbits; // 0-indexed labels
  std::vector<std::size_t> edges;    // per 0-indexed label: destination double coset

  std::size_t count() const { return cosets.size(); }
};

class DoubleCosetDecomposition {
public:
  DoubleCosetDecomposition(std::vector<DoubleCoset> double_cosets,
                           std::vector<std::uint32_t> owner, std::vector<Permutation> tgen_actions,
                           PermutationGroup control, PermutationGroup combined);

  const std::vector<DoubleCoset> &double_cosets() const { return double_cosets_; }
  std::size_t size() const { return double_cosets_.size(); }
  std::size_t degree() const { return tgen_actions_.size(); } // number of labels
  std::size_t index() const { return owner_.size(); }         // number of single cosets
  const PermutationGroup &control_group() const { return control_; } // N on the labels

  // Right multiplication by t_label on single cosets.
  const Permutation &tgen_action(std::size_t label) const;
  std::uint32_t coset_of(const LabelWord &w) const;
  std::size_t double_coset_of_coset(std::uint32_t coset) const { return owner_.at(coset); }
  std::size_t double_coset_of(const LabelWord &w) const { return owner_.at(coset_of(w)); }

  // N^(w) for an arbitrary single coset, on the labels.
  PermutationGroup coset_stabilizer(std::uint32_t coset) const;
  PermutationGroup coset_stabilizer(const LabelWord &w) const { return coset_stabilizer(coset_of(w)); }

  // Destination double coset -> number of labels carrying this coset there.
  std::map<std::size_t, std::size_t> edge_counts_at(std::uint32_t coset) const;

private:
  std::vector<DoubleCoset> double_cosets_;
  std::vector<std::uint32_t> owner_;
  std::vector<Permutation> tgen_actions_;
  PermutationGroup control_;
  PermutationGroup combined_; // labels 0..n-1, then coset c as point n + c
};

// control_words generate N, tgen_words are t_1..t_n, all over the table's
// generators. N^(w) is computed in the label action that N induces on the
// t_i by conjugation inside the coset action.
DoubleCosetDecomposition decompose(const CosetTable &table, std::span<const FlatWord> control_words,
                                   std::span<const FlatWord> tgen_words);

bool words_equivalent(const CosetTable &table, std::span<const FlatWord> tgen_words,
                      const LabelWord &a, const LabelWord &b);

// "[t7t1t2]" style names; the trivial double coset is "[*]".
std::string double_coset_name(const LabelWord &w);

struct CollapsedEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> orbit_sizes; // N^(w)-orbits on labels making up the edge, as "2+2"
};

struct CollapsedCayleyGraph {
  struct Node {
    LabelWord representative;
    std::size_t count = 0;
  };
  std::vector<Node> nodes;
  std::vector<CollapsedEdge> edges; // loops included, sorted by (from, to)

  std::size_t multiplicity(std::size_t from, std::size_t to) const;
  std::size_t out_degree(std::size_t from) const;
  bool connected() const;
  std::string to_dot() const;
};

CollapsedCayleyGraph collapsed_graph(const DoubleCosetDecomposition &d);

} // namespace symgen
