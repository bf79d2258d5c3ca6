#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace symgen {

// Disjoint sets over {0, ..., n-1} with path compression. unite() always
// keeps the smaller representative, which the coset enumerator relies on.
class UnionFind {
public:
  UnionFind() = default;
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::size_t size() const { return parent_.size(); }

  std::uint32_t add() {
    auto id = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(id);
    return id;
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root)
      root = parent_[root];
    while (parent_[x] != root)
      x = std::exchange(parent_[x], root);
    return root;
  }

  bool is_root(std::uint32_t x) const { return parent_[x] == x; }

  // Returns {kept, absorbed}; absorbed == kept when already joined.
  std::pair<std::uint32_t, std::uint32_t> unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return {a, a};
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return {a, b};
  }

private:
  std::vector<std::uint32_t> parent_;
};

} // namespace symgen
