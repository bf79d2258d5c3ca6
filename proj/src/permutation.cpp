#include "symgen/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace symgen {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw PermutationError("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>> &cycles,
                                     std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point a = cycle[k];
      Point b = cycle[(k + 1) % cycle.size()];
      if (a == 0 || a > degree || b == 0 || b > degree)
        throw PermutationError("cycle point " + std::to_string(a == 0 || a > degree ? a : b) +
                               " outside 1.." + std::to_string(degree));
      if (used[a - 1])
        throw PermutationError("point " + std::to_string(a) + " repeated in cycles");
      used[a - 1] = true;
      images[a - 1] = b - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string &what) {
    throw PermutationError("cycle notation: " + what + " at offset " + std::to_string(i) +
                           " in \"" + std::string(text) + "\"");
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      unsigned long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<unsigned long>(text[i++] - '0');
      if (i == start)
        fail("expected a point");
      cycle.push_back(static_cast<Point>(value));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(cycles, degree);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (n) {
    if (n & 1)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto &c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

Point Permutation::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i)
      out.push_back(static_cast<Point>(i));
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> cycle;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_cycles() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw PermutationError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                           std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q[p[static_cast<Point>(i)]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation &p, const Permutation &q) { return q.inverse() * p * q; }

Permutation commutator(const Permutation &p, const Permutation &q) {
  return p.inverse() * q.inverse() * p * q;
}

bool commute(const Permutation &p, const Permutation &q) { return p * q == q * p; }

Permutation product(std::span<const Permutation> perms, std::size_t degree) {
  Permutation r = Permutation::identity(degree);
  for (const auto &p : perms)
    r = r * p;
  return r;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace symgen
