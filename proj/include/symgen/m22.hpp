#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symgen/dce.hpp"
#include "symgen/perm_group.hpp"
#include "symgen/presentation.hpp"
#include "symgen/progenitor.hpp"
#include "symgen/simplicity.hpp"
#include "symgen/todd_coxeter.hpp"

namespace symgen::m22 {

class VerificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The shipped presentation (same text as data/m22.pres).
std::string_view presentation_text();
const PresentationFile &presentation_file();
const ProgenitorSpec &progenitor();

struct Claim {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};
using Claims = std::vector<Claim>;

// The 22-point model.
struct ConcreteModel {
  Permutation x, y, t;
  std::vector<Permutation> tgens; // t_1..t_14 at positions 0..13
  std::vector<Permutation> s;     // s_1..s_7 at positions 0..6, s_i = t_i t_{i+7}
  PermutationGroup N, M, G;

  const Permutation &ti(std::size_t label) const { return tgens.at(label - 1); }
  const Permutation &si(std::size_t i) const { return s.at((i - 1) % 7); }
  // Word over x, y, t.
  Permutation evaluate(std::string_view word) const;
  // Product t_{w1} t_{w2} ... for 1-indexed labels.
  Permutation evaluate_labels(const LabelWord &w) const;
  // Label action of an element of N on t_1..t_14.
  Permutation label_action(const Permutation &g) const;
};

inline constexpr std::string_view kModelX = "(1,12,14,10,8,17,15)(2,18,22,13,3,7,9)(5,6,19,21,20,11,16)";
inline constexpr std::string_view kModelY = "(2,9)(3,4)(5,6)(7,13)(10,15)(11,19)(12,14)(18,22)";
inline constexpr std::string_view kModelT = "(2,10)(3,11)(4,19)(5,22)(6,18)(7,14)(9,15)(12,13)";

// Throws VerificationError if an invariant of the model breaks.
ConcreteModel build_model();

inline std::size_t bar(std::size_t i) { return (i + 6) % 14 + 1; }   // i +- 7
inline std::size_t residue(std::size_t i) { return (i - 1) % 7 + 1; } // 1..7

struct FanoStructure {
  std::vector<std::array<std::size_t, 3>> lines; // sorted triples in 1..7, sorted

  // Labels 1..14, read mod 7; false unless the residues are distinct.
  bool collinear(std::size_t i, std::size_t j, std::size_t k) const;
  // Third point (1..7) on the line through residues of i and j.
  std::size_t third(std::size_t i, std::size_t j) const;
};

// Derives the lines from s_i s_j = s_k. Throws VerificationError naming the
// indices when an identity fails; checks are also appended to claims.
FanoStructure verify_s_structure(const ConcreteModel &m, Claims *claims = nullptr);

struct RelationFamilyWitness {
  std::string family; // alpha beta delta gamma sigma epsilon
  std::vector<std::size_t> indices;
  Permutation element;
  std::size_t order = 0;
  bool in_n = false;
};

struct FamilyReport {
  std::vector<RelationFamilyWitness> witnesses;
  Claims claims;
  // t_1 t_6 t_4 t_2 (t_1 t_3 t_5 t_7)^-1 as a label permutation.
  Permutation sigma_label_action;
};

FamilyReport verify_relation_families(const ConcreteModel &m, const FanoStructure &f);

Claims verify_prop21(const ConcreteModel &m);
// Relators hold, label action, M membership, involutions of N conjugate.
Claims verify_model_facts(const ConcreteModel &m);

struct MaximalSubgroupRow {
  std::string name;
  std::vector<std::string> words;
  std::uint64_t expected_order = 0;
  std::uint64_t order = 0;
  std::string kind; // "point" or "set"
  std::vector<std::size_t> claimed_set; // 1-indexed
  bool stabilizes = false;
  // 1-indexed orbits of the subgroup of the same size as the claimed set
  std::vector<std::vector<std::size_t>> orbits_of_claimed_size;
  bool order_ok() const { return order == expected_order; }
  bool passed() const { return order_ok() && stabilizes; }
};

// The 4x6 MOG labels as printed.
const std::array<std::array<int, 6>, 4> &mog();

std::vector<MaximalSubgroupRow> verify_maximal_subgroups(const ConcreteModel &m);

// The 2-cover enumeration needs about ten million live cosets.
inline constexpr std::size_t kCoverMaxCosets = 16'000'000;

struct CoverResult {
  std::size_t index = 0;
  std::size_t expected = 0;
  std::string dropped; // relator left out; empty for the control run
  EnumerationStats stats;
  double seconds = 0;
};

Presentation presentation_without(std::string_view relator_source);
// 2-cover, 3-cover, then the full presentation, all over <x,y>.
std::vector<CoverResult> verify_covers(std::size_t max_cosets = kCoverMaxCosets);

// Coset equivalences and memberships stated for the double coset enumeration.
struct CosetFixture {
  enum class Kind { SameCoset, SameDoubleCoset };
  LabelWord lhs;
  LabelWord rhs;
  Kind kind = Kind::SameCoset;
  std::string note;
};
std::vector<CosetFixture> coset_fixtures();
std::string fixture_text(const CosetFixture &f);

struct StabilizerFixture {
  LabelWord word;
  std::vector<std::string> generators; // asserted members of N^(word)
  std::vector<std::vector<std::size_t>> orbits; // stated orbits, empty if none
};
std::vector<StabilizerFixture> stabilizer_fixtures();

// Expected edges as (named word, named word, multiplicity, orbit sizes).
struct ExpectedEdge {
  LabelWord from;
  LabelWord to;
  std::size_t multiplicity = 0;
  std::vector<std::size_t> loop_orbits; // loops only
};
std::vector<ExpectedEdge> expected_graph();

struct DceRun {
  CosetTable table;
  std::vector<FlatWord> control_words;
  std::vector<FlatWord> tgen_words;
  DoubleCosetDecomposition decomposition;
};
DceRun run_dce(Strategy strategy = Strategy::Felsch);

Claims verify_decomposition(const DceRun &run);
Claims verify_graph(const DceRun &run);
// One claim per fixture.
Claims verify_fixtures(const DceRun &run);
Claims verify_stabilizer_fixtures(const DceRun &run);

IwasawaReport run_iwasawa(const DceRun &run);
Claims iwasawa_claims(const IwasawaReport &r);

struct VerifyOptions {
  bool covers = true;
  std::size_t cover_max_cosets = kCoverMaxCosets;
};
Claims verify_all(const VerifyOptions &options = {});

} // namespace symgen::m22
