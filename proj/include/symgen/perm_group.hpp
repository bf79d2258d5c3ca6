#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "symgen/permutation.hpp"

namespace symgen {

class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A permutation group stored as a stabilizer chain (base and strong
// generating set) built by deterministic Schreier-Sims. Immutable once built.
class PermutationGroup {
public:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;   // strong generators fixing earlier base points
    std::vector<Point> orbit;              // basic orbit, discovery order
    std::vector<std::int32_t> orbit_index; // point -> position in orbit, -1 if absent
    std::vector<Permutation> transversal;  // transversal[k] maps base_point to orbit[k]
    std::vector<Permutation> transversal_inverse;
  };

  PermutationGroup() = default;

  // Base points are the entries of base_prefix followed by smallest moved
  // points as needed. An empty generator list gives the trivial group.
  PermutationGroup(std::vector<Permutation> generators, std::size_t degree,
                   std::span<const Point> base_prefix = {});

  static PermutationGroup trivial(std::size_t degree) { return PermutationGroup({}, degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  const std::vector<Level> &levels() const { return levels_; }
  std::vector<std::size_t> basic_orbit_sizes() const;

  // Throws std::overflow_error past 2^64.
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation &p) const;
  bool contains(const PermutationGroup &h) const;

  // Calls visit on every element; stops early when visit returns false.
  void for_each_element(const std::function<bool(const Permutation &)> &visit) const;

  // New group with one extra generator (returns *this if already inside).
  PermutationGroup with_generator(const Permutation &g) const;

  Permutation identity() const { return Permutation::identity(degree_); }

private:
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from_level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

// Orbit of point under the group generated by gens, in BFS discovery order.
std::vector<Point> orbit(std::span<const Permutation> gens, Point point, std::size_t degree);
std::vector<Point> orbit(const PermutationGroup &g, Point point);
std::vector<std::vector<Point>> orbits(const PermutationGroup &g);
bool is_transitive(const PermutationGroup &g);

PermutationGroup point_stabilizer(const PermutationGroup &g, Point point);
// Pointwise stabilizer of the points, in order.
PermutationGroup pointwise_stabilizer(const PermutationGroup &g, std::span<const Point> points);
bool stabilizes_set(std::span<const Permutation> gens, std::span<const Point> set);

// Finest block system in which a and b share a block (Atkinson's algorithm).
// Blocks are sorted and listed by smallest point.
std::vector<std::vector<Point>> minimal_blocks(const PermutationGroup &g, Point a, Point b);
// Throws GroupError for intransitive groups.
bool is_primitive(const PermutationGroup &g);
// Some nontrivial block system, or nullopt when primitive.
std::optional<std::vector<std::vector<Point>>> nontrivial_block_system(const PermutationGroup &g);

PermutationGroup normal_closure(const PermutationGroup &g, std::span<const Permutation> seeds);
PermutationGroup derived_subgroup(const PermutationGroup &g);
bool is_abelian(std::span<const Permutation> gens);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 21;

// Enumerates all of g; throws GroupError when |g| > cap.
PermutationGroup centralizer_bruteforce(const PermutationGroup &g,
                                        std::span<const Permutation> targets,
                                        std::uint64_t cap = kDefaultEnumerationCap);

// Conjugacy classes by brute force enumeration, each as a list of elements.
std::vector<std::vector<Permutation>> conjugacy_classes_bruteforce(
    const PermutationGroup &g, std::uint64_t cap = kDefaultEnumerationCap);

} // namespace symgen
