#include "symgen/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace symgen {

std::string to_string(Strategy s) { return s == Strategy::Felsch ? "felsch" : "hlt"; }

Strategy parse_strategy(std::string_view text) {
  if (text == "felsch")
    return Strategy::Felsch;
  if (text == "hlt")
    return Strategy::Hlt;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "' (felsch or hlt)");
}

std::vector<FlatWord> normalize_relators(std::span<const FlatWord> relators) {
  std::vector<FlatWord> out;
  std::set<std::vector<Letter>> seen;
  for (const auto &r : relators) {
    FlatWord w = r.cyclically_reduced();
    if (w.empty())
      continue;
    std::vector<Letter> best;
    for (const FlatWord &v : {w, w.inverse()}) {
      std::vector<Letter> rot = v.letters();
      for (std::size_t k = 0; k < rot.size(); ++k) {
        if (best.empty() || rot < best)
          best = rot;
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      }
    }
    if (seen.insert(best).second)
      out.push_back(std::move(w));
  }
  return out;
}

namespace {

using Col = std::uint32_t;
using Row = std::vector<Col>;

inline Col column_of(Letter l) {
  return static_cast<Col>(2 * letter_generator(l) + (letter_is_inverse(l) ? 1 : 0));
}

Row to_columns(const FlatWord &w) {
  Row r;
  r.reserve(w.size());
  for (Letter l : w)
    r.push_back(column_of(l));
  return r;
}

constexpr std::int32_t kUndefined = -1;

class Enumerator {
public:
  Enumerator(const Presentation &p, std::span<const FlatWord> subgroup,
             const EnumerationOptions &opt)
      : ncols_(2 * p.generators.size()), cap_(opt.max_cosets), strategy_(opt.strategy) {
    if (p.generators.empty())
      throw std::invalid_argument("presentation has no generators");
    if (cap_ < 1)
      throw std::invalid_argument("max_cosets must be at least 1");
    for (const auto &w : normalize_relators(p.relators)) {
      if (w.max_generator() > p.generators.size())
        throw std::invalid_argument("relator uses an undeclared generator");
      relators_.push_back(to_columns(w));
    }
    for (const auto &w : subgroup) {
      if (w.max_generator() > p.generators.size())
        throw std::invalid_argument("subgroup word uses an undeclared generator");
      if (!w.empty())
        subgroup_.push_back(to_columns(w));
    }
    stats_.strategy = strategy_;
    if (strategy_ == Strategy::Felsch) {
      // Every rotation of every relator and its inverse, keyed by first column.
      std::set<Row> rotations;
      for (const auto &r : relators_) {
        Row inv(r.rbegin(), r.rend());
        for (auto &c : inv)
          c ^= 1u;
        for (Row v : {r, inv})
          for (std::size_t k = 0; k < v.size(); ++k) {
            rotations.insert(v);
            std::rotate(v.begin(), v.begin() + 1, v.end());
          }
      }
      by_first_.assign(ncols_, {});
      for (const auto &v : rotations)
        by_first_[v.front()].push_back(v);
    }
  }

  std::vector<std::int32_t> run() {
    new_coset();
    track_ = strategy_ == Strategy::Felsch;
    std::uint32_t cursor = 0;
    for (const auto &w : subgroup_) {
      ensure_room(w.size(), cursor);
      scan_and_fill(0, w);
      process_deductions();
    }
    cursor = 0;
    while (cursor < rows_) {
      bool moved = false;
      if (strategy_ == Strategy::Hlt)
        for (const auto &r : relators_) {
          if (!live(cursor))
            break;
          if ((moved = ensure_room(r.size(), cursor)))
            break;
          scan_and_fill(cursor, r);
        }
      for (Col c = 0; c < ncols_ && !moved && live(cursor); ++c) {
        if (at(cursor, c) != kUndefined)
          continue;
        if ((moved = ensure_room(1, cursor)))
          break;
        define(cursor, c);
        process_deductions();
      }
      if (!moved)
        ++cursor;
    }
    std::uint32_t dummy = 0;
    compact(dummy);
    return standardized();
  }

  const EnumerationStats &stats() const { return stats_; }

private:
  std::int32_t &at(std::uint32_t c, Col col) { return table_[std::size_t{c} * ncols_ + col]; }
  bool live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t new_coset() {
    if (rows_ >= cap_)
      throw CapExceeded(live_, stats_.cosets_defined);
    auto c = static_cast<std::uint32_t>(rows_++);
    table_.resize(rows_ * ncols_, kUndefined);
    parent_.push_back(c);
    ++live_;
    ++stats_.cosets_defined;
    stats_.max_live = std::max<std::uint64_t>(stats_.max_live, live_);
    return c;
  }

  void set_edge(std::uint32_t a, Col col, std::uint32_t b) {
    at(a, col) = static_cast<std::int32_t>(b);
    at(b, col ^ 1u) = static_cast<std::int32_t>(a);
    if (track_)
      deductions_.emplace_back(a, col);
  }

  void define(std::uint32_t c, Col col) { set_edge(c, col, new_coset()); }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r)
      r = parent_[r];
    while (parent_[c] != r)
      c = std::exchange(parent_[c], r);
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b)
      return;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    --live_;
    ++stats_.coincidences;
    queue_.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      std::uint32_t g = queue_[i];
      for (Col col = 0; col < ncols_; ++col) {
        std::int32_t d0 = at(g, col);
        if (d0 == kUndefined)
          continue;
        auto d = static_cast<std::uint32_t>(d0);
        if (at(d, col ^ 1u) == static_cast<std::int32_t>(g))
          at(d, col ^ 1u) = kUndefined;
        std::uint32_t mu = rep(g);
        std::uint32_t nu = rep(d);
        if (at(mu, col) != kUndefined)
          merge(nu, static_cast<std::uint32_t>(at(mu, col)));
        else if (at(nu, col ^ 1u) != kUndefined)
          merge(mu, static_cast<std::uint32_t>(at(nu, col ^ 1u)));
        else
          set_edge(mu, col, nu);
      }
    }
    queue_.clear();
  }

  // Scans w at c; with fill, defines cosets until the scan completes.
  template <bool Fill> void scan(std::uint32_t c, const Row &w) {
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    for (;;) {
      while (i < j && at(f, w[i]) != kUndefined)
        f = static_cast<std::uint32_t>(at(f, w[i++]));
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) != kUndefined)
        b = static_cast<std::uint32_t>(at(b, w[--j] ^ 1u));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        ++stats_.deductions;
        set_edge(f, w[i], b);
        return;
      }
      if constexpr (!Fill)
        return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(std::uint32_t c, const Row &w) { scan<true>(c, w); }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, col] = deductions_.back();
      deductions_.pop_back();
      if (!live(c))
        continue;
      for (const auto &r : by_first_[col]) {
        scan<false>(c, r);
        if (!live(c))
          break;
      }
    }
  }

  void lookahead() {
    ++stats_.lookaheads;
    for (std::uint32_t c = 0; c < rows_; ++c)
      for (const auto &r : relators_) {
        if (!live(c))
          break;
        scan<false>(c, r);
      }
  }

  // Makes room for k new rows. Returns true when the cursor row died in a
  // lookahead, so the caller must restart at the (renumbered) cursor.
  bool ensure_room(std::size_t k, std::uint32_t &cursor) {
    if (rows_ + k <= cap_)
      return false;
    if (live_ < rows_)
      compact(cursor);
    if (rows_ + k <= cap_)
      return false;
    if (strategy_ == Strategy::Hlt) {
      lookahead();
      bool moved = !live(cursor);
      compact(cursor);
      if (moved || rows_ + k <= cap_)
        return moved;
    }
    throw CapExceeded(live_, stats_.cosets_defined);
  }

  // Drops dead rows; cursor moves to the first live row at or after it.
  void compact(std::uint32_t &cursor) {
    if (live_ == rows_)
      return;
    ++stats_.compactions;
    std::vector<std::int32_t> renumber(rows_, kUndefined);
    std::uint32_t n = 0;
    std::uint32_t new_cursor = 0;
    for (std::uint32_t c = 0; c < rows_; ++c) {
      if (c == cursor)
        new_cursor = n;
      if (live(c))
        renumber[c] = static_cast<std::int32_t>(n++);
    }
    if (cursor >= rows_)
      new_cursor = n;
    for (std::uint32_t c = 0; c < rows_; ++c) {
      if (!live(c))
        continue;
      auto to = static_cast<std::size_t>(renumber[c]);
      for (Col col = 0; col < ncols_; ++col) {
        std::int32_t v = at(c, col);
        table_[to * ncols_ + col] =
            v == kUndefined ? kUndefined : renumber[rep(static_cast<std::uint32_t>(v))];
      }
    }
    rows_ = n;
    table_.resize(rows_ * ncols_);
    parent_.resize(rows_);
    for (std::uint32_t c = 0; c < rows_; ++c)
      parent_[c] = c;
    live_ = rows_;
    cursor = new_cursor;
  }

  std::vector<std::int32_t> standardized() {
    std::vector<std::int32_t> order(rows_, kUndefined);
    std::vector<std::uint32_t> seq{0};
    order[0] = 0;
    for (std::size_t k = 0; k < seq.size(); ++k)
      for (Col col = 0; col < ncols_; ++col) {
        std::int32_t d = at(seq[k], col);
        if (d == kUndefined)
          throw std::logic_error("coset table is not closed");
        if (order[static_cast<std::size_t>(d)] == kUndefined) {
          order[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(seq.size());
          seq.push_back(static_cast<std::uint32_t>(d));
        }
      }
    if (seq.size() != rows_)
      throw std::logic_error("coset table is not connected");
    std::vector<std::int32_t> out(rows_ * ncols_);
    for (std::size_t k = 0; k < seq.size(); ++k)
      for (Col col = 0; col < ncols_; ++col)
        out[k * ncols_ + col] = order[static_cast<std::size_t>(at(seq[k], col))];
    return out;
  }

  std::size_t ncols_;
  std::size_t cap_;
  Strategy strategy_;
  std::vector<Row> relators_;
  std::vector<Row> subgroup_;
  std::vector<std::vector<Row>> by_first_;

  std::vector<std::int32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::size_t rows_ = 0;
  std::size_t live_ = 0;
  std::vector<std::uint32_t> queue_;
  std::vector<std::pair<std::uint32_t, Col>> deductions_;
  bool track_ = false;
  EnumerationStats stats_;
};

} // namespace

CosetTable::CosetTable(std::vector<std::string> generators, std::vector<std::int32_t> entries,
                       EnumerationStats stats)
    : generators_(std::move(generators)), entries_(std::move(entries)), stats_(stats) {
  std::size_t ncols = 2 * generators_.size();
  if (ncols == 0 || entries_.size() % ncols != 0)
    throw std::invalid_argument("coset table entries do not match the generator count");
  index_ = entries_.size() / ncols;
  for (auto v : entries_)
    if (v < 0 || static_cast<std::size_t>(v) >= index_)
      throw std::invalid_argument("coset table is not closed");
}

std::uint32_t CosetTable::entry(std::uint32_t coset, std::size_t generator, bool inverse) const {
  if (coset >= index_ || generator >= generators_.size())
    throw std::out_of_range("coset table lookup out of range");
  return static_cast<std::uint32_t>(
      entries_[std::size_t{coset} * 2 * generators_.size() + 2 * generator + (inverse ? 1 : 0)]);
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const FlatWord &w) const {
  if (coset >= index_)
    throw std::out_of_range("coset " + std::to_string(coset) + " out of range");
  if (w.max_generator() > generators_.size())
    throw std::out_of_range("word uses a generator the table does not have");
  const std::size_t ncols = 2 * generators_.size();
  for (Letter l : w)
    coset = static_cast<std::uint32_t>(entries_[std::size_t{coset} * ncols + column_of(l)]);
  return coset;
}

Permutation CosetTable::coset_action(const FlatWord &w) const {
  std::vector<Point> images(index_);
  for (std::uint32_t c = 0; c < index_; ++c)
    images[c] = trace(c, w);
  return Permutation(std::move(images));
}

std::vector<Permutation> CosetTable::generator_actions() const {
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < generators_.size(); ++g)
    out.push_back(coset_action(FlatWord::generator(g)));
  return out;
}

bool CosetTable::satisfies(std::span<const FlatWord> relators) const {
  for (const auto &r : relators)
    for (std::uint32_t c = 0; c < index_; ++c)
      if (trace(c, r) != c)
        return false;
  return true;
}

std::string CosetTable::to_tsv() const {
  std::ostringstream out;
  out << "coset";
  for (const auto &g : generators_)
    out << '\t' << g;
  out << '\n';
  for (std::uint32_t c = 0; c < index_; ++c) {
    out << c + 1;
    for (std::size_t g = 0; g < generators_.size(); ++g)
      out << '\t' << entry(c, g) + 1;
    out << '\n';
  }
  return out.str();
}

CosetTable enumerate(const Presentation &p, std::span<const FlatWord> subgroup,
                     const EnumerationOptions &options) {
  Enumerator e(p, subgroup, options);
  auto entries = e.run();
  CosetTable table(p.generators, std::move(entries), e.stats());
  if (!table.satisfies(p.relators))
    throw std::logic_error("enumeration finished with a table that violates a relator");
  for (const auto &w : subgroup)
    if (table.trace(0, w) != 0)
      throw std::logic_error("enumeration finished with a table that misses a subgroup generator");
  return table;
}

} // namespace symgen
