#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symgen/perm_group.hpp"
#include "symgen/presentation.hpp"
#include "symgen/todd_coxeter.hpp"

namespace symgen {

enum class Verdict { Simple, NotSimple, Inconclusive };
std::string to_string(Verdict v);

struct IwasawaReport {
  std::size_t degree = 0;            // number of cosets acted on
  std::uint64_t image_order = 0;
  std::uint64_t expected_order = 0;
  std::uint64_t stabilizer_order = 0; // stabilizer of coset 0 in the image
  std::uint64_t order_bound = 0;      // degree * stabilizer_order
  bool faithful = false;              // image_order == expected_order == order_bound

  std::uint64_t derived_order = 0;
  bool perfect = false;
  bool primitive = false;

  std::vector<Permutation> k_generators; // images of the K words
  std::uint64_t k_order = 0;
  bool k_abelian = false;
  bool k_in_stabilizer = false;
  bool k_normalized = false; // normalized by the stabilizer of coset 0
  std::uint64_t k_closure_order = 0;
  bool k_closure_is_whole = false;

  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
};

// Works on the permutation image of the group acting on the cosets of the
// table. K_words are over the presentation generators.
IwasawaReport iwasawa_check(const CosetTable &table, const Presentation &presentation,
                            std::span<const FlatWord> k_words, std::uint64_t expected_order);

} // namespace symgen
