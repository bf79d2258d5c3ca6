#include "symgen/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "symgen/union_find.hpp"

namespace symgen {

namespace {

using Level = PermutationGroup::Level;

void check_degree(const Permutation &p, std::size_t degree) {
  if (p.degree() != degree)
    throw PermutationError("degree mismatch: expected " + std::to_string(degree) + ", got " +
                           std::to_string(p.degree()));
}

void try_extend(Level &level, std::size_t from, const Permutation &gen) {
  Point image = gen[level.orbit[from]];
  if (level.orbit_index[image] >= 0)
    return;
  level.orbit_index[image] = static_cast<std::int32_t>(level.orbit.size());
  level.orbit.push_back(image);
  Permutation u = level.transversal[from] * gen;
  level.transversal_inverse.push_back(u.inverse());
  level.transversal.push_back(std::move(u));
}

Level make_level(Point base_point, std::size_t degree) {
  Level level;
  level.base_point = base_point;
  level.orbit = {base_point};
  level.orbit_index.assign(degree, -1);
  level.orbit_index[base_point] = 0;
  level.transversal = {Permutation::identity(degree)};
  level.transversal_inverse = {Permutation::identity(degree)};
  return level;
}

void add_generator(Level &level, const Permutation &gen) {
  level.generators.push_back(gen);
  std::size_t old_size = level.orbit.size();
  for (std::size_t k = 0; k < old_size; ++k)
    try_extend(level, k, gen);
  for (std::size_t k = old_size; k < level.orbit.size(); ++k)
    for (const auto &s : level.generators)
      try_extend(level, k, s);
}

bool fixes_all(const Permutation &p, const std::vector<Level> &levels, std::size_t count) {
  for (std::size_t l = 0; l < count; ++l)
    if (p[levels[l].base_point] != levels[l].base_point)
      return false;
  return true;
}

} // namespace

PermutationGroup::PermutationGroup(std::vector<Permutation> generators, std::size_t degree,
                                   std::span<const Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto &g : generators_)
    check_degree(g, degree_);

  std::vector<bool> in_base(degree_, false);
  for (Point b : base_prefix) {
    if (b >= degree_)
      throw GroupError("base point " + std::to_string(b) + " out of range");
    if (in_base[b])
      continue;
    in_base[b] = true;
    levels_.push_back(make_level(b, degree_));
  }

  std::vector<Permutation> seeds;
  for (const auto &g : generators_) {
    if (g.is_identity())
      continue;
    seeds.push_back(g);
    if (fixes_all(g, levels_, levels_.size())) {
      Point b = g.smallest_moved_point();
      in_base[b] = true;
      levels_.push_back(make_level(b, degree_));
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l)
    for (const auto &g : seeds)
      if (fixes_all(g, levels_, l))
        add_generator(levels_[l], g);

  // Deterministic Schreier-Sims: test every Schreier generator at each level
  // from the bottom up, dropping back down whenever a new strong generator
  // is found.
  std::vector<std::unordered_set<std::uint64_t>> tested(levels_.size());
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool changed = false;
    for (std::size_t k = 0; !changed && k < levels_[i].orbit.size(); ++k) {
      for (std::size_t s = 0; !changed && s < levels_[i].generators.size(); ++s) {
        std::uint64_t key = (static_cast<std::uint64_t>(k) << 32) | s;
        if (!tested[i].insert(key).second)
          continue;
        const Level &level = levels_[i];
        const Permutation &gen = level.generators[s];
        Point image = gen[level.orbit[k]];
        Permutation h = level.transversal[k] * gen *
                        level.transversal_inverse[level.orbit_index[image]];
        if (h.is_identity())
          continue;
        auto [residue, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && residue.is_identity())
          continue;
        if (j == levels_.size()) {
          levels_.push_back(make_level(residue.smallest_moved_point(), degree_));
          tested.emplace_back();
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l)
          add_generator(levels_[l], residue);
        i = static_cast<std::ptrdiff_t>(j);
        changed = true;
      }
    }
    if (!changed)
      --i;
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::strip(Permutation g,
                                                            std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level &level = levels_[l];
    std::int32_t idx = level.orbit_index[g[level.base_point]];
    if (idx < 0)
      return {std::move(g), l};
    g = g * level.transversal_inverse[idx];
  }
  return {std::move(g), levels_.size()};
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> out;
  for (const auto &l : levels_)
    out.push_back(l.base_point);
  return out;
}

std::vector<Permutation> PermutationGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto &l : levels_)
    for (const auto &g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

std::vector<std::size_t> PermutationGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto &l : levels_)
    out.push_back(l.orbit.size());
  return out;
}

std::uint64_t PermutationGroup::order() const {
  std::uint64_t result = 1;
  for (const auto &l : levels_)
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(l.orbit.size()), &result))
      throw std::overflow_error("group order exceeds 64 bits");
  return result;
}

bool PermutationGroup::contains(const Permutation &p) const {
  check_degree(p, degree_);
  auto [residue, level] = strip(p, 0);
  return level == levels_.size() && residue.is_identity();
}

bool PermutationGroup::contains(const PermutationGroup &h) const {
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation &g) { return contains(g); });
}

void PermutationGroup::for_each_element(
    const std::function<bool(const Permutation &)> &visit) const {
  bool stop = false;
  std::function<void(std::ptrdiff_t, const Permutation &)> rec =
      [&](std::ptrdiff_t l, const Permutation &acc) {
        if (stop)
          return;
        if (l < 0) {
          stop = !visit(acc);
          return;
        }
        for (const auto &u : levels_[l].transversal) {
          rec(l - 1, acc * u);
          if (stop)
            return;
        }
      };
  rec(static_cast<std::ptrdiff_t>(levels_.size()) - 1, identity());
}

PermutationGroup PermutationGroup::with_generator(const Permutation &g) const {
  if (contains(g))
    return *this;
  std::vector<Permutation> seeds = strong_generators();
  seeds.push_back(g);
  PermutationGroup out(std::move(seeds), degree_, base());
  out.generators_ = generators_;
  out.generators_.push_back(g);
  return out;
}

std::vector<Point> orbit(std::span<const Permutation> gens, Point point, std::size_t degree) {
  if (point >= degree)
    throw GroupError("point " + std::to_string(point) + " out of range");
  std::vector<Point> out{point};
  std::vector<bool> seen(degree, false);
  seen[point] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto &g : gens) {
      Point image = g[out[k]];
      if (!seen[image]) {
        seen[image] = true;
        out.push_back(image);
      }
    }
  return out;
}

std::vector<Point> orbit(const PermutationGroup &g, Point point) {
  return orbit(g.generators(), point, g.degree());
}

std::vector<std::vector<Point>> orbits(const PermutationGroup &g) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(g.degree(), false);
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p])
      continue;
    auto o = orbit(g, p);
    for (Point q : o)
      seen[q] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

bool is_transitive(const PermutationGroup &g) {
  return g.degree() == 0 || orbit(g, 0).size() == g.degree();
}

PermutationGroup pointwise_stabilizer(const PermutationGroup &g, std::span<const Point> points) {
  for (Point p : points)
    if (p >= g.degree())
      throw GroupError("point " + std::to_string(p) + " out of range");
  PermutationGroup chain(g.strong_generators(), g.degree(), points);
  std::size_t distinct = 0;
  std::vector<Point> seen;
  for (Point p : points)
    if (std::find(seen.begin(), seen.end(), p) == seen.end()) {
      seen.push_back(p);
      ++distinct;
    }
  if (chain.levels().size() <= distinct)
    return PermutationGroup::trivial(g.degree());
  return PermutationGroup(chain.levels()[distinct].generators, g.degree());
}

PermutationGroup point_stabilizer(const PermutationGroup &g, Point point) {
  const Point pts[] = {point};
  return pointwise_stabilizer(g, pts);
}

bool stabilizes_set(std::span<const Permutation> gens, std::span<const Point> set) {
  for (const auto &g : gens)
    for (Point p : set)
      if (std::find(set.begin(), set.end(), g[p]) == set.end())
        return false;
  return true;
}

std::vector<std::vector<Point>> minimal_blocks(const PermutationGroup &g, Point a, Point b) {
  const std::size_t n = g.degree();
  if (a >= n || b >= n)
    throw GroupError("block seed point out of range");
  UnionFind classes(n);
  std::deque<std::pair<Point, Point>> queue;
  if (a != b) {
    classes.unite(a, b);
    queue.emplace_back(a, b);
  }
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (const auto &gen : g.generators()) {
      auto u = classes.find(gen[p]);
      auto v = classes.find(gen[q]);
      if (u != v) {
        classes.unite(u, v);
        queue.emplace_back(u, v);
      }
    }
  }
  std::map<std::uint32_t, std::vector<Point>> by_root;
  for (Point p = 0; p < n; ++p)
    by_root[classes.find(p)].push_back(p);
  std::vector<std::vector<Point>> blocks;
  for (auto &[root, block] : by_root)
    blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::optional<std::vector<std::vector<Point>>> nontrivial_block_system(const PermutationGroup &g) {
  if (!is_transitive(g))
    throw GroupError("block systems require a transitive group");
  if (g.degree() <= 2)
    return std::nullopt;
  // One candidate per orbit of the stabilizer of point 0 suffices.
  auto stab = point_stabilizer(g, 0);
  for (const auto &o : orbits(stab)) {
    if (o.front() == 0 && o.size() == 1)
      continue;
    Point beta = o.front() == 0 ? o[1] : o.front();
    auto blocks = minimal_blocks(g, 0, beta);
    if (blocks.size() > 1)
      return blocks;
  }
  return std::nullopt;
}

bool is_primitive(const PermutationGroup &g) { return !nontrivial_block_system(g).has_value(); }

PermutationGroup normal_closure(const PermutationGroup &g, std::span<const Permutation> seeds) {
  for (const auto &s : seeds)
    check_degree(s, g.degree());
  PermutationGroup closure = PermutationGroup::trivial(g.degree());
  std::vector<Permutation> pending;
  for (const auto &s : seeds)
    if (!closure.contains(s)) {
      closure = closure.with_generator(s);
      pending.push_back(s);
    }
  for (std::size_t k = 0; k < pending.size(); ++k) {
    for (const auto &gen : g.generators()) {
      Permutation c = conjugate(pending[k], gen);
      if (!closure.contains(c)) {
        closure = closure.with_generator(c);
        pending.push_back(std::move(c));
      }
    }
  }
  return closure;
}

PermutationGroup derived_subgroup(const PermutationGroup &g) {
  std::vector<Permutation> commutators;
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        commutators.push_back(std::move(c));
    }
  return normal_closure(g, commutators);
}

bool is_abelian(std::span<const Permutation> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j]))
        return false;
  return true;
}

PermutationGroup centralizer_bruteforce(const PermutationGroup &g,
                                        std::span<const Permutation> targets,
                                        std::uint64_t cap) {
  for (const auto &t : targets)
    check_degree(t, g.degree());
  if (g.order() > cap)
    throw GroupError("centralizer enumeration cap exceeded: |G| = " + std::to_string(g.order()) +
                     " > " + std::to_string(cap));
  PermutationGroup result = PermutationGroup::trivial(g.degree());
  g.for_each_element([&](const Permutation &e) {
    for (const auto &t : targets)
      if (!commute(e, t))
        return true;
    if (!result.contains(e))
      result = result.with_generator(e);
    return true;
  });
  return result;
}

std::vector<std::vector<Permutation>> conjugacy_classes_bruteforce(const PermutationGroup &g,
                                                                   std::uint64_t cap) {
  if (g.order() > cap)
    throw GroupError("conjugacy class enumeration cap exceeded");
  std::vector<Permutation> elements;
  g.for_each_element([&](const Permutation &e) {
    elements.push_back(e);
    return true;
  });
  std::sort(elements.begin(), elements.end());
  std::unordered_set<Permutation, PermutationHash> assigned;
  std::vector<std::vector<Permutation>> classes;
  for (const auto &e : elements) {
    if (assigned.count(e))
      continue;
    std::vector<Permutation> cls{e};
    assigned.insert(e);
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (const auto &gen : g.generators()) {
        Permutation c = conjugate(cls[k], gen);
        if (assigned.insert(c).second)
          cls.push_back(std::move(c));
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace symgen
