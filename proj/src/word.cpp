#include "symgen/word.hpp"

#include <algorithm>
#include <cctype>

namespace symgen {

FlatWord::FlatWord(std::span<const Letter> letters) {
  for (Letter l : letters)
    append(l);
}

FlatWord::FlatWord(std::initializer_list<Letter> letters)
    : FlatWord(std::span<const Letter>(letters.begin(), letters.size())) {}

FlatWord FlatWord::generator(std::size_t index, bool inverse) {
  FlatWord w;
  w.letters_.push_back(make_letter(index, inverse));
  return w;
}

void FlatWord::append(Letter l) {
  if (l == 0)
    throw std::invalid_argument("letter 0 is not a generator");
  if (!letters_.empty() && letters_.back() == -l)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FlatWord &FlatWord::operator*=(const FlatWord &rhs) {
  for (Letter l : rhs.letters_)
    append(l);
  return *this;
}

FlatWord FlatWord::inverse() const {
  FlatWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(-*it);
  return w;
}

FlatWord FlatWord::pow(long long e) const {
  FlatWord base = e < 0 ? inverse() : *this;
  FlatWord out;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k)
    out *= base;
  return out;
}

FlatWord FlatWord::conjugated_by(const FlatWord &by) const { return by.inverse() * *this * by; }

FlatWord FlatWord::cyclically_reduced() const {
  std::size_t lo = 0;
  std::size_t hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  FlatWord w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                    letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return w;
}

std::size_t FlatWord::max_generator() const {
  std::size_t m = 0;
  for (Letter l : letters_)
    m = std::max(m, letter_generator(l) + 1);
  return m;
}

std::string FlatWord::to_string(std::span<const std::string> names) const {
  if (letters_.empty())
    return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i])
      ++j;
    if (!out.empty())
      out += '*';
    std::size_t g = letter_generator(letters_[i]);
    out += g < names.size() ? names[g] : "g" + std::to_string(g + 1);
    long long run = static_cast<long long>(j - i) * (letter_is_inverse(letters_[i]) ? -1 : 1);
    if (run != 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

FlatWord commutator(const FlatWord &a, const FlatWord &b) {
  return a.inverse() * b.inverse() * a * b;
}

WordExpr WordExpr::generator(std::size_t index) {
  return WordExpr(Kind::Generator, static_cast<long long>(index), {});
}

WordExpr WordExpr::product(std::vector<WordExpr> factors) {
  if (factors.size() == 1)
    return std::move(factors.front());
  return WordExpr(Kind::Product, 0, std::move(factors));
}

WordExpr WordExpr::power(WordExpr base, long long exponent) {
  if (exponent == 0)
    throw std::invalid_argument("zero exponent");
  return WordExpr(Kind::Power, exponent, {std::move(base)});
}

WordExpr WordExpr::conjugate(WordExpr base, WordExpr by) {
  return WordExpr(Kind::Conjugate, 0, {std::move(base), std::move(by)});
}

WordExpr WordExpr::commutator(WordExpr a, WordExpr b) {
  return WordExpr(Kind::Commutator, 0, {std::move(a), std::move(b)});
}

WordExpr WordExpr::inverse(WordExpr base) { return WordExpr(Kind::Inverse, 0, {std::move(base)}); }

namespace {

class Parser {
public:
  Parser(std::string_view text, std::span<const std::string> generators)
      : text_(text), generators_(generators) {}

  WordExpr parse() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("empty word");
    WordExpr e = word();
    skip_ws();
    if (pos_ < text_.size())
      fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string &what) const { throw WordParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  WordExpr word() {
    std::vector<WordExpr> factors;
    factors.push_back(factor());
    while (peek('*')) {
      ++pos_;
      factors.push_back(factor());
    }
    return WordExpr::product(std::move(factors));
  }

  WordExpr factor() {
    WordExpr base = primary();
    while (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() &&
          (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        std::size_t at = pos_;
        long long e = integer();
        if (e == 0) {
          pos_ = at;
          fail("zero exponent");
        }
        base = e == -1 ? WordExpr::inverse(std::move(base)) : WordExpr::power(std::move(base), e);
      } else {
        base = WordExpr::conjugate(std::move(base), primary());
      }
    }
    return base;
  }

  long long integer() {
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000)
        fail("exponent too large");
      ++pos_;
    }
    if (start == pos_)
      fail("expected an integer exponent");
    return negative ? -value : value;
  }

  WordExpr primary() {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of word");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      WordExpr inner = word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      WordExpr a = word();
      expect(',');
      WordExpr b = word();
      expect(']');
      return WordExpr::commutator(std::move(a), std::move(b));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = std::find(generators_.begin(), generators_.end(), name);
      if (it == generators_.end()) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      return WordExpr::generator(static_cast<std::size_t>(it - generators_.begin()));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::span<const std::string> generators_;
  std::size_t pos_ = 0;
};

std::string name_of(std::size_t g, std::span<const std::string> names) {
  return g < names.size() ? names[g] : "g" + std::to_string(g + 1);
}

std::string as_base(const WordExpr &e, std::span<const std::string> names) {
  if (e.kind() == WordExpr::Kind::Product)
    return "(" + to_string(e, names) + ")";
  return to_string(e, names);
}

} // namespace

WordExpr parse_word(std::string_view text, std::span<const std::string> generators) {
  return Parser(text, generators).parse();
}

std::string to_string(const WordExpr &e, std::span<const std::string> names) {
  using Kind = WordExpr::Kind;
  const auto &c = e.children();
  switch (e.kind()) {
  case Kind::Generator:
    return name_of(e.generator_index(), names);
  case Kind::Product: {
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        out += '*';
      out += as_base(c[k], names);
    }
    return out;
  }
  case Kind::Power:
    return as_base(c[0], names) + "^" + std::to_string(e.exponent());
  case Kind::Inverse:
    return as_base(c[0], names) + "^-1";
  case Kind::Conjugate: {
    const WordExpr &by = c[1];
    bool bare = by.kind() == Kind::Generator || by.kind() == Kind::Commutator;
    return as_base(c[0], names) + "^" +
           (bare ? to_string(by, names) : "(" + to_string(by, names) + ")");
  }
  case Kind::Commutator:
    return "[" + to_string(c[0], names) + "," + to_string(c[1], names) + "]";
  }
  return {};
}

FlatWord flatten(const WordExpr &e) {
  using Kind = WordExpr::Kind;
  const auto &c = e.children();
  switch (e.kind()) {
  case Kind::Generator:
    return FlatWord::generator(e.generator_index());
  case Kind::Product: {
    FlatWord out;
    for (const auto &f : c)
      out *= flatten(f);
    return out;
  }
  case Kind::Power:
    return flatten(c[0]).pow(e.exponent());
  case Kind::Inverse:
    return flatten(c[0]).inverse();
  case Kind::Conjugate:
    return flatten(c[0]).conjugated_by(flatten(c[1]));
  case Kind::Commutator:
    return commutator(flatten(c[0]), flatten(c[1]));
  }
  return {};
}

Permutation evaluate(const FlatWord &w, std::span<const Permutation> assignment) {
  if (assignment.empty()) {
    if (!w.empty())
      throw std::invalid_argument("unassigned generator 1");
    throw std::invalid_argument("evaluation needs at least one generator to fix the degree");
  }
  std::size_t degree = assignment.front().degree();
  for (const auto &p : assignment)
    if (p.degree() != degree)
      throw PermutationError("generator images have different degrees");
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Point>(i);
  std::vector<Permutation> inverses(assignment.size());
  for (Letter l : w) {
    std::size_t g = letter_generator(l);
    if (g >= assignment.size())
      throw std::invalid_argument("unassigned generator " + std::to_string(g + 1));
    const Permutation *p = &assignment[g];
    if (letter_is_inverse(l)) {
      if (inverses[g].degree() != degree)
        inverses[g] = assignment[g].inverse();
      p = &inverses[g];
    }
    for (auto &v : images)
      v = (*p)[v];
  }
  return Permutation(std::move(images));
}

} // namespace symgen
