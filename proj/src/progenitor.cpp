#include "symgen/progenitor.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace symgen {

namespace {

// Presentation indices -> control indices; nullopt if w uses a non-control
// generator.
std::optional<FlatWord> to_control(const FlatWord &w, const std::vector<std::size_t> &control) {
  FlatWord out;
  for (Letter l : w) {
    auto it = std::find(control.begin(), control.end(), letter_generator(l));
    if (it == control.end())
      return std::nullopt;
    out.append(make_letter(static_cast<std::size_t>(it - control.begin()), letter_is_inverse(l)));
  }
  return out;
}

Permutation label_image(const ControlAction &action, const FlatWord &w) {
  if (w.empty())
    return Permutation::identity(action.degree());
  return evaluate(w, action.permutations);
}

} // namespace

std::size_t ControlAction::degree() const {
  return permutations.empty() ? 0 : permutations.front().degree();
}

PermutationGroup ControlAction::group() const { return PermutationGroup(permutations, degree()); }

void ControlAction::validate() const {
  if (permutations.empty())
    throw ProgenitorError("control group needs at least one generator");
  if (names.size() != permutations.size())
    throw ProgenitorError("control generator names and permutations differ in number");
  std::size_t n = degree();
  for (const auto &p : permutations)
    if (p.degree() != n)
      throw ProgenitorError("control permutations have different degrees");
  if (base_point >= n)
    throw ProgenitorError("base point " + std::to_string(base_point + 1) + " out of range");
  if (orbit(permutations, base_point, n).size() != n)
    throw ProgenitorError("control action is not transitive");
}

Presentation build_progenitor_presentation(const ControlAction &action,
                                           std::span<const FlatWord> control_relators,
                                           std::span<const StabilizerWitness> witnesses,
                                           const std::string &symmetric_name) {
  action.validate();
  const std::size_t k = action.permutations.size();
  Presentation pres;
  pres.generators = action.names;
  pres.generators.push_back(symmetric_name);
  FlatWord t = FlatWord::generator(k);

  for (const auto &r : control_relators) {
    if (r.max_generator() > k)
      throw ProgenitorError("control relator uses a non-control generator");
    if (!label_image(action, r).is_identity())
      throw ProgenitorError("control relator " + r.to_string(action.names) +
                            " does not hold in the control action");
    pres.relators.push_back(r);
  }
  pres.relators.push_back(t * t);

  std::vector<Permutation> stabilizer_gens;
  for (const auto &w : witnesses) {
    if (w.conjugator.max_generator() > k || w.element.max_generator() > k)
      throw ProgenitorError("stabilizer witness uses a non-control generator");
    Permutation c = label_image(action, w.conjugator);
    Permutation e = label_image(action, w.element);
    Point p = c[action.base_point];
    if (e[p] != p)
      throw ProgenitorError("witness " + w.element.to_string(action.names) + " does not fix point " +
                            std::to_string(p + 1));
    stabilizer_gens.push_back(c * e * c.inverse());
    pres.relators.push_back(commutator(t.conjugated_by(w.conjugator), w.element));
  }

  std::uint64_t want = action.group().order() / action.degree();
  std::uint64_t got = PermutationGroup(stabilizer_gens, action.degree()).order();
  if (got != want)
    throw ProgenitorError("stabilizer witnesses generate a subgroup of order " + std::to_string(got) +
                          ", the point stabilizer has order " + std::to_string(want));
  return pres;
}

SymmetricGeneratorMap::SymmetricGeneratorMap(ControlAction action,
                                             std::vector<std::size_t> control_indices,
                                             std::size_t symmetric_index)
    : action_(std::move(action)), control_indices_(std::move(control_indices)),
      symmetric_index_(symmetric_index) {
  action_.validate();
  if (control_indices_.size() != action_.permutations.size())
    throw ProgenitorError("one presentation index is needed per control generator");
  const std::size_t n = action_.degree();
  transversal_.assign(n, FlatWord{});
  std::vector<bool> seen(n, false);
  seen[action_.base_point] = true;
  std::deque<Point> queue{action_.base_point};
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < action_.permutations.size(); ++g) {
      Point q = action_.permutations[g][p];
      if (seen[q])
        continue;
      seen[q] = true;
      transversal_[q] = transversal_[p] * FlatWord::generator(control_indices_[g]);
      queue.push_back(q);
    }
  }
}

const FlatWord &SymmetricGeneratorMap::transversal_word(Point label) const {
  if (label >= transversal_.size())
    throw ProgenitorError("label " + std::to_string(label + 1) + " out of range");
  return transversal_[label];
}

FlatWord SymmetricGeneratorMap::symmetric_generator_word(std::size_t label) const {
  if (label == 0 || label > degree())
    throw ProgenitorError("symmetric generator label " + std::to_string(label) + " out of range 1.." +
                          std::to_string(degree()));
  return FlatWord::generator(symmetric_index_).conjugated_by(transversal_[label - 1]);
}

std::vector<FlatWord> SymmetricGeneratorMap::symmetric_generator_words() const {
  std::vector<FlatWord> out;
  for (std::size_t i = 1; i <= degree(); ++i)
    out.push_back(symmetric_generator_word(i));
  return out;
}

FlatWord SymmetricGeneratorMap::control_word(std::size_t k) const {
  return FlatWord::generator(control_indices_.at(k));
}

std::vector<FlatWord> SymmetricGeneratorMap::control_words() const {
  std::vector<FlatWord> out;
  for (std::size_t k = 0; k < control_indices_.size(); ++k)
    out.push_back(control_word(k));
  return out;
}

std::optional<Permutation> induced_label_action(std::span<const Permutation> symmetric_generators,
                                                const Permutation &g) {
  std::unordered_map<Permutation, Point, PermutationHash> where;
  for (std::size_t i = 0; i < symmetric_generators.size(); ++i)
    where.emplace(symmetric_generators[i], static_cast<Point>(i));
  if (where.size() != symmetric_generators.size())
    return std::nullopt;
  std::vector<Point> images(symmetric_generators.size());
  for (std::size_t i = 0; i < symmetric_generators.size(); ++i) {
    auto it = where.find(conjugate(symmetric_generators[i], g));
    if (it == where.end())
      return std::nullopt;
    images[i] = it->second;
  }
  return Permutation(std::move(images));
}

ConjugationCheck verify_conjugation_action(const SymmetricGeneratorMap &map,
                                           std::span<const Permutation> model) {
  ConjugationCheck out;
  const std::size_t n = map.degree();
  for (std::size_t i = 1; i <= n; ++i)
    out.symmetric_generators.push_back(evaluate(map.symmetric_generator_word(i), model));
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
  for (std::size_t i = 0; i < n; ++i) {
    const Permutation &ti = out.symmetric_generators[i];
    if (ti.is_identity() || !ti.pow(2).is_identity()) {
      out.diagnostic = "t" + std::to_string(i + 1) + " is not an involution";
      return out;
    }
    auto [it, fresh] = seen.emplace(ti, i);
    if (!fresh) {
      out.diagnostic = "t" + std::to_string(it->second + 1) + " = t" + std::to_string(i + 1);
      return out;
    }
  }
  const auto &action = map.action();
  for (std::size_t k = 0; k < action.permutations.size(); ++k) {
    const Permutation &g = model[map.control_indices()[k]];
    for (std::size_t i = 0; i < n; ++i) {
      Point j = action.permutations[k][static_cast<Point>(i)];
      if (conjugate(out.symmetric_generators[i], g) != out.symmetric_generators[j]) {
        out.diagnostic = "t" + std::to_string(i + 1) + "^" + action.names[k] + " != t" +
                         std::to_string(j + 1);
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

SymmetricGeneratorMap ProgenitorSpec::generator_map() const {
  return SymmetricGeneratorMap(action, control_indices, symmetric_index);
}

ProgenitorSpec progenitor_from_file(const PresentationFile &file) {
  if (!file.progenitor)
    throw ProgenitorError("presentation has no progenitor directive");
  const Presentation &pres = file.presentation;
  const ProgenitorDirective &d = *file.progenitor;
  ProgenitorSpec spec;
  spec.action.base_point = static_cast<Point>(d.base_point - 1);
  for (const auto &name : d.control_generators) {
    auto it = std::find_if(file.actions.begin(), file.actions.end(),
                           [&](const auto &a) { return a.first == name; });
    if (it == file.actions.end())
      throw ProgenitorError("no action line for control generator '" + name + "'");
    spec.action.names.push_back(name);
    try {
      spec.action.permutations.push_back(Permutation::from_cycles(it->second, d.degree));
    } catch (const PermutationError &e) {
      throw ProgenitorError("action of " + name + ": " + e.what());
    }
    spec.control_indices.push_back(pres.generator_index(name));
  }
  std::vector<std::size_t> others;
  for (std::size_t g = 0; g < pres.generators.size(); ++g)
    if (std::find(spec.control_indices.begin(), spec.control_indices.end(), g) ==
        spec.control_indices.end())
      others.push_back(g);
  if (others.size() != 1)
    throw ProgenitorError("expected exactly one symmetric generator besides the control generators");
  spec.symmetric_index = others.front();
  spec.action.validate();

  const FlatWord t = FlatWord::generator(spec.symmetric_index);
  bool have_t2 = false;
  using Kind = WordExpr::Kind;
  auto is_t = [&](const WordExpr &e) {
    return e.kind() == Kind::Generator && e.generator_index() == spec.symmetric_index;
  };
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    const FlatWord &w = pres.relators[r];
    const WordExpr &e = file.relator_exprs[r];
    if (auto c = to_control(w, spec.control_indices)) {
      spec.control_relators.push_back(*c);
      continue;
    }
    if (w == t * t || w == (t * t).inverse()) {
      have_t2 = true;
      continue;
    }
    if (e.kind() == Kind::Commutator) {
      const WordExpr &a = e.children()[0];
      std::optional<FlatWord> conj;
      if (is_t(a))
        conj = FlatWord{};
      else if (a.kind() == Kind::Conjugate && is_t(a.children()[0]))
        conj = to_control(flatten(a.children()[1]), spec.control_indices);
      auto elem = to_control(flatten(e.children()[1]), spec.control_indices);
      if (conj && elem) {
        spec.witnesses.push_back({*conj, *elem});
        continue;
      }
    }
    spec.additional_relators.push_back(w);
  }
  if (!have_t2)
    throw ProgenitorError("presentation lacks the relator " + pres.generators[spec.symmetric_index] +
                          "^2");
  // Validates the witnesses.
  build_progenitor_presentation(spec.action, spec.control_relators, spec.witnesses,
                                pres.generators[spec.symmetric_index]);
  return spec;
}

} // namespace symgen
