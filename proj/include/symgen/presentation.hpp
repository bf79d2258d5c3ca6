#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symgen/word.hpp"

namespace symgen {

class PresentationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<FlatWord> relators;
  std::vector<std::pair<std::string, std::vector<FlatWord>>> subgroups;

  std::size_t generator_index(std::string_view name) const;
  const std::vector<FlatWord> &subgroup(std::string_view name) const;
  bool has_subgroup(std::string_view name) const;

  // Throws PresentationError if a relator or subgroup word uses an
  // undeclared generator.
  void validate() const;
};

// `progenitor <degree> <basepoint> <control generators...>`
struct ProgenitorDirective {
  std::size_t degree = 0;
  std::size_t base_point = 0; // 1-indexed, as written
  std::vector<std::string> control_generators;
};

// A parsed presentation file. Line format (`#` starts a comment):
//   group <name>
//   gens <id> <id> ...
//   rel <word>
//   sub <name> <word> <word> ...
//   progenitor <degree> <basepoint> <control-gen-names...>
//   action <control-gen> <cycles>
struct PresentationFile {
  Presentation presentation;
  std::vector<WordExpr> relator_exprs; // parallel to presentation.relators
  std::vector<std::string> relator_sources;
  std::vector<std::pair<std::string, std::vector<WordExpr>>> subgroup_exprs;
  std::optional<ProgenitorDirective> progenitor;
  std::vector<std::pair<std::string, std::string>> actions; // control generator -> cycles
};

PresentationFile parse_presentation(std::string_view text);
PresentationFile load_presentation(const std::filesystem::path &path);

// Splits on whitespace outside brackets, so "t*t^(x^6 * y)" stays whole.
std::vector<std::string> split_words(std::string_view text);

} // namespace symgen
