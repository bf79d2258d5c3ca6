#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symgen/permutation.hpp"

namespace symgen {

// Signed generator letter: +k is generator k-1, -k its inverse.
using Letter = int;

inline std::size_t letter_generator(Letter l) { return static_cast<std::size_t>(l < 0 ? -l : l) - 1; }
inline bool letter_is_inverse(Letter l) { return l < 0; }
inline Letter make_letter(std::size_t generator, bool inverse = false) {
  Letter l = static_cast<Letter>(generator) + 1;
  return inverse ? -l : l;
}

// A freely reduced word over signed generators.
class FlatWord {
public:
  FlatWord() = default;
  explicit FlatWord(std::span<const Letter> letters);
  FlatWord(std::initializer_list<Letter> letters);

  static FlatWord generator(std::size_t index, bool inverse = false);

  const std::vector<Letter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void append(Letter l);
  FlatWord &operator*=(const FlatWord &rhs);
  FlatWord inverse() const;
  FlatWord pow(long long e) const;
  // by^-1 * this * by
  FlatWord conjugated_by(const FlatWord &by) const;
  FlatWord cyclically_reduced() const;
  std::size_t max_generator() const; // one past the largest generator index used

  // "x*y^-1*t", "1" for the empty word.
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const FlatWord &, const FlatWord &) = default;
  friend auto operator<=>(const FlatWord &, const FlatWord &) = default;

private:
  std::vector<Letter> letters_;
};

inline FlatWord operator*(FlatWord lhs, const FlatWord &rhs) { return lhs *= rhs; }
FlatWord commutator(const FlatWord &a, const FlatWord &b);

class WordParseError : public std::invalid_argument {
public:
  WordParseError(const std::string &what, std::size_t position)
      : std::invalid_argument(what + " at column " + std::to_string(position + 1)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Expression tree for group words. Conjugation a^b means b^-1 a b and the
// commutator [a,b] means a^-1 b^-1 a b.
class WordExpr {
public:
  enum class Kind { Generator, Product, Power, Conjugate, Commutator, Inverse };

  static WordExpr generator(std::size_t index);
  static WordExpr product(std::vector<WordExpr> factors);
  static WordExpr power(WordExpr base, long long exponent);
  static WordExpr conjugate(WordExpr base, WordExpr by);
  static WordExpr commutator(WordExpr a, WordExpr b);
  static WordExpr inverse(WordExpr base);

  Kind kind() const { return kind_; }
  std::size_t generator_index() const { return static_cast<std::size_t>(value_); }
  long long exponent() const { return value_; }
  const std::vector<WordExpr> &children() const { return children_; }

  friend bool operator==(const WordExpr &, const WordExpr &) = default;

private:
  WordExpr(Kind kind, long long value, std::vector<WordExpr> children)
      : kind_(kind), value_(value), children_(std::move(children)) {}

  Kind kind_ = Kind::Product;
  long long value_ = 0;
  std::vector<WordExpr> children_;
};

// Grammar:
//   word     := factor ('*' factor)*
//   factor   := primary ('^' exponent)*
//   exponent := ['-'] integer | identifier | '(' word ')' | '[' word ',' word ']'
//   primary  := identifier | '(' word ')' | '[' word ',' word ']'
// An integer exponent is a power (x^-1 parses as an Inverse node); any
// other exponent is a conjugation.
WordExpr parse_word(std::string_view text, std::span<const std::string> generators);

// Prints in the grammar above; parse_word(to_string(e)) == e.
std::string to_string(const WordExpr &e, std::span<const std::string> generators);

FlatWord flatten(const WordExpr &e);

// Right action: the word g1 g2 acts as g1 first, then g2.
Permutation evaluate(const FlatWord &w, std::span<const Permutation> assignment);

} // namespace symgen
