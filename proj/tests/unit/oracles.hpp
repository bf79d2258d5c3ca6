#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "symgen/permutation.hpp"
#include "symgen/word.hpp"

namespace oracle {

// Size of the closure of gens under right multiplication, by BFS.
inline std::size_t closure_size(const std::vector<symgen::Permutation> &gens, std::size_t degree,
                                std::size_t cap = 200000) {
  using symgen::Permutation;
  std::unordered_set<Permutation, symgen::PermutationHash> seen{Permutation::identity(degree)};
  std::vector<Permutation> queue{Permutation::identity(degree)};
  for (std::size_t k = 0; k < queue.size() && seen.size() <= cap; ++k)
    for (const auto &g : gens) {
      Permutation h = queue[k] * g;
      if (seen.insert(h).second)
        queue.push_back(h);
    }
  return seen.size();
}

inline symgen::Permutation random_permutation(std::size_t degree, std::mt19937_64 &rng) {
  std::vector<symgen::Point> v(degree);
  for (std::size_t i = 0; i < degree; ++i)
    v[i] = static_cast<symgen::Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return symgen::Permutation(v);
}

// Random expression in the shape parse_word produces.
inline symgen::WordExpr random_expr(std::mt19937_64 &rng, int depth, std::size_t generators) {
  using symgen::WordExpr;
  int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 6);
  switch (pick) {
  case 0:
    return WordExpr::generator(rng() % generators);
  case 1: {
    std::vector<WordExpr> f;
    std::size_t n = 2 + rng() % 2;
    for (std::size_t k = 0; k < n; ++k)
      f.push_back(random_expr(rng, depth - 1, generators));
    return WordExpr::product(std::move(f));
  }
  case 2: {
    long long e = static_cast<long long>(rng() % 9) - 4;
    if (e == 0 || e == -1)
      e = 3;
    return WordExpr::power(random_expr(rng, depth - 1, generators), e);
  }
  case 3:
    return WordExpr::inverse(random_expr(rng, depth - 1, generators));
  case 4:
    return WordExpr::conjugate(random_expr(rng, depth - 1, generators), random_expr(rng, depth - 1, generators));
  default:
    return WordExpr::commutator(random_expr(rng, depth - 1, generators), random_expr(rng, depth - 1, generators));
  }
}

inline symgen::FlatWord random_flat(std::mt19937_64 &rng, std::size_t max_len, std::size_t generators) {
  symgen::FlatWord out;
  std::size_t n = rng() % (max_len + 1);
  for (std::size_t k = 0; k < n; ++k)
    out.append(symgen::make_letter(rng() % generators, rng() % 2));
  return out;
}

} // namespace oracle
