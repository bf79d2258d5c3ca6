#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgen/perm_group.hpp"
#include "symgen/presentation.hpp"
#include "symgen/word.hpp"

namespace symgen {

class ProgenitorError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A transitive control group N acting on n symmetric-generator labels.
struct ControlAction {
  std::vector<std::string> names;
  std::vector<Permutation> permutations; // degree n, one per control generator
  Point base_point = 0;                  // 0-indexed label of the symmetric generator t

  std::size_t degree() const;
  PermutationGroup group() const;
  // Throws ProgenitorError unless the generators share degree n, the base
  // point is in range and the action is transitive.
  void validate() const;
};

// The relator [t^conjugator, element]. The element must fix the label
// base_point^conjugator.
struct StabilizerWitness {
  FlatWord conjugator; // over control generators
  FlatWord element;    // over control generators
};

// Generators are the control generators (in order) followed by t.
Presentation build_progenitor_presentation(const ControlAction &action,
                                           std::span<const FlatWord> control_relators,
                                           std::span<const StabilizerWitness> witnesses,
                                           const std::string &symmetric_name = "t");

// Transversal words w_i with base_point^{w_i} = i, chosen by breadth-first
// search over the control generators in declaration order.
class SymmetricGeneratorMap {
public:
  SymmetricGeneratorMap(ControlAction action, std::vector<std::size_t> control_indices,
                        std::size_t symmetric_index);

  const ControlAction &action() const { return action_; }
  std::size_t degree() const { return action_.degree(); }
  std::size_t symmetric_index() const { return symmetric_index_; }
  const std::vector<std::size_t> &control_indices() const { return control_indices_; }

  // Word over presentation generators, for a 0-indexed label.
  const FlatWord &transversal_word(Point label) const;
  // w_i^-1 t w_i over presentation generators, for a 1-indexed label.
  FlatWord symmetric_generator_word(std::size_t label) const;
  std::vector<FlatWord> symmetric_generator_words() const;
  // Control generator k as a presentation word.
  FlatWord control_word(std::size_t k) const;
  std::vector<FlatWord> control_words() const;

private:
  ControlAction action_;
  std::vector<std::size_t> control_indices_;
  std::size_t symmetric_index_;
  std::vector<FlatWord> transversal_;
};

struct ConjugationCheck {
  bool ok = false;
  std::string diagnostic;
  std::vector<Permutation> symmetric_generators; // evaluated t_1..t_n
};

// Evaluates every t_i in the model (indexed by presentation generator) and
// checks they are distinct involutions permuted by the control generators
// exactly as the label action says.
ConjugationCheck verify_conjugation_action(const SymmetricGeneratorMap &map,
                                           std::span<const Permutation> model);

// Label permutation induced on {t_i} by conjugation with g, or nullopt if
// g does not permute them.
std::optional<Permutation> induced_label_action(std::span<const Permutation> symmetric_generators,
                                                const Permutation &g);

// Everything the progenitor directives of a presentation file describe.
struct ProgenitorSpec {
  ControlAction action;
  std::vector<std::size_t> control_indices; // presentation index per control generator
  std::size_t symmetric_index = 0;
  std::vector<FlatWord> control_relators;
  std::vector<StabilizerWitness> witnesses;
  std::vector<FlatWord> additional_relators; // everything else, e.g. the M22 relators

  SymmetricGeneratorMap generator_map() const;
};

// Classifies the file's relators into control relators, the t^2 relator,
// witness commutators [t^c, w] and additional relators.
ProgenitorSpec progenitor_from_file(const PresentationFile &file);

} // namespace symgen
