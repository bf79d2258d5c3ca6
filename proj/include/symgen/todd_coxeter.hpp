#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "symgen/permutation.hpp"
#include "symgen/presentation.hpp"
#include "symgen/word.hpp"

namespace symgen {

enum class Strategy { Felsch, Hlt };

std::string to_string(Strategy s);
Strategy parse_strategy(std::string_view text); // "felsch" or "hlt"

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

struct EnumerationOptions {
  std::size_t max_cosets = kDefaultMaxCosets; // rows the table may occupy at once
  Strategy strategy = Strategy::Felsch;
};

struct EnumerationStats {
  Strategy strategy = Strategy::Felsch;
  std::uint64_t cosets_defined = 0;
  std::uint64_t max_live = 0;
  std::uint64_t coincidences = 0;
  std::uint64_t deductions = 0;
  std::uint64_t compactions = 0;
  std::uint64_t lookaheads = 0;
};

class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::size_t live, std::uint64_t total)
      : std::runtime_error("coset enumeration exceeded the cap with " + std::to_string(live) +
                           " live cosets (" + std::to_string(total) + " defined in total)"),
        live_(live), total_(total) {}
  std::size_t live() const { return live_; }
  std::uint64_t total() const { return total_; }

private:
  std::size_t live_;
  std::uint64_t total_;
};

// A closed, standardized coset table. Coset 0 is the subgroup; the rest are
// numbered in the order a breadth-first pass meets them, trying columns
// g1, g1^-1, g2, g2^-1, ... in turn.
class CosetTable {
public:
  CosetTable(std::vector<std::string> generators, std::vector<std::int32_t> entries,
             EnumerationStats stats);

  std::size_t index() const { return index_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string> &generators() const { return generators_; }
  const EnumerationStats &stats() const { return stats_; }

  // Image of coset c under generator g (or its inverse).
  std::uint32_t entry(std::uint32_t coset, std::size_t generator, bool inverse = false) const;
  std::uint32_t trace(std::uint32_t coset, const FlatWord &w) const;
  // Permutation of the cosets induced by right multiplication by w.
  Permutation coset_action(const FlatWord &w) const;
  std::vector<Permutation> generator_actions() const;

  // Every relator returns every coset to itself.
  bool satisfies(std::span<const FlatWord> relators) const;

  // One row per coset, forward generator columns, 1-indexed cosets.
  std::string to_tsv() const;

  friend bool operator==(const CosetTable &a, const CosetTable &b) {
    return a.generators_ == b.generators_ && a.entries_ == b.entries_;
  }

private:
  std::vector<std::string> generators_;
  std::vector<std::int32_t> entries_; // index_ rows, 2 * generators columns
  std::size_t index_ = 0;
  EnumerationStats stats_;
};

// Enumerates the cosets of <subgroup> in the group presented by p. Throws
// CapExceeded when the table needs more than max_cosets rows.
CosetTable enumerate(const Presentation &p, std::span<const FlatWord> subgroup,
                     const EnumerationOptions &options = {});

// Cyclically reduced, trivial ones dropped, duplicates (up to rotation and
// inversion) removed; order of first appearance kept.
std::vector<FlatWord> normalize_relators(std::span<const FlatWord> relators);

} // namespace symgen
