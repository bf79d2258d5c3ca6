#include "symgen/simplicity.hpp"

namespace symgen {

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Simple:
    return "simple";
  case Verdict::NotSimple:
    return "not-simple";
  case Verdict::Inconclusive:
    return "inconclusive";
  }
  return "inconclusive";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace

IwasawaReport iwasawa_check(const CosetTable &table, const Presentation &presentation,
                            std::span<const FlatWord> k_words, std::uint64_t expected_order) {
  if (table.generator_count() != presentation.generators.size())
    throw std::invalid_argument("table and presentation have different generators");

  IwasawaReport r;
  r.degree = table.index();
  r.expected_order = expected_order;
  const auto acts = table.generator_actions();
  PermutationGroup image(acts, r.degree);
  r.image_order = image.order();
  PermutationGroup stab = point_stabilizer(image, 0);
  r.stabilizer_order = stab.order();
  r.order_bound = static_cast<std::uint64_t>(r.degree) * r.stabilizer_order;
  r.faithful = r.image_order == expected_order && r.order_bound == expected_order;

  PermutationGroup derived = derived_subgroup(image);
  r.derived_order = derived.order();
  r.perfect = r.derived_order == r.image_order;
  r.primitive = r.degree <= 1 || is_primitive(image);

  for (const auto &w : k_words)
    r.k_generators.push_back(evaluate(w, acts));
  PermutationGroup k(r.k_generators, r.degree);
  r.k_order = k.order();
  r.k_abelian = is_abelian(r.k_generators);
  r.k_in_stabilizer = stab.contains(k);
  r.k_normalized = true;
  for (const auto &s : stab.generators())
    for (const auto &g : r.k_generators)
      if (!k.contains(conjugate(g, s)))
        r.k_normalized = false;
  PermutationGroup closure = normal_closure(image, r.k_generators);
  r.k_closure_order = closure.order();
  r.k_closure_is_whole = r.k_closure_order == r.image_order;

  if (!r.k_abelian)
    r.notes.push_back("K is not abelian");
  if (r.image_order > 1 && r.image_order < expected_order) {
    // proper nontrivial kernel
    r.verdict = Verdict::NotSimple;
    r.notes.push_back("the coset action has a nontrivial kernel");
  } else if (!r.perfect && !is_prime(r.image_order) && r.image_order > 1) {
    r.verdict = Verdict::NotSimple;
    r.notes.push_back("the image is not perfect");
  } else if (r.faithful && r.perfect && r.primitive && r.k_abelian && r.k_in_stabilizer &&
             r.k_normalized && r.k_closure_is_whole && r.image_order > 1) {
    r.verdict = Verdict::Simple;
  } else {
    r.verdict = Verdict::Inconclusive;
  }
  return r;
}

} // namespace symgen
