#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symgen {

using Point = std::uint32_t;

class PermutationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A bijection of {0, ..., degree-1}. Points act on the right: the image of
// i under p is p[i], and p * q applies p first, then q.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Parses 1-indexed cycle notation such as "(1,2,3)(4,5)". Whitespace is
  // ignored and "()" is the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);
  static Permutation from_cycles(const std::vector<std::vector<Point>> &cycles,
                                 std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  Point image(Point i) const { return images_.at(i); }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  std::uint64_t order() const;

  // Smallest point moved, or degree() if the permutation is the identity.
  Point smallest_moved_point() const;
  std::vector<Point> fixed_points() const;

  // 1-indexed cycle notation, fixed points omitted.
  std::string to_cycles() const;
  // Cycles as 1-indexed point lists, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation &p, const Permutation &q);

  std::vector<Point> images_;
};

Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) { return compose(p, q); }

// p^q = q^-1 p q
Permutation conjugate(const Permutation &p, const Permutation &q);
// [p, q] = p^-1 q^-1 p q
Permutation commutator(const Permutation &p, const Permutation &q);

bool commute(const Permutation &p, const Permutation &q);

// Applies every permutation in order; all must share one degree.
Permutation product(std::span<const Permutation> perms, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace symgen
