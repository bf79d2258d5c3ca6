#include "symgen/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace symgen {

std::size_t Presentation::generator_index(std::string_view gen) const {
  auto it = std::find(generators.begin(), generators.end(), gen);
  if (it == generators.end())
    throw PresentationError("unknown generator '" + std::string(gen) + "'");
  return static_cast<std::size_t>(it - generators.begin());
}

const std::vector<FlatWord> &Presentation::subgroup(std::string_view sub) const {
  for (const auto &[n, words] : subgroups)
    if (n == sub)
      return words;
  throw PresentationError("no subgroup named '" + std::string(sub) + "'");
}

bool Presentation::has_subgroup(std::string_view sub) const {
  return std::any_of(subgroups.begin(), subgroups.end(),
                     [&](const auto &entry) { return entry.first == sub; });
}

void Presentation::validate() const {
  for (const auto &r : relators)
    if (r.max_generator() > generators.size())
      throw PresentationError("relator uses an undeclared generator");
  for (const auto &[n, words] : subgroups)
    for (const auto &w : words)
      if (w.max_generator() > generators.size())
        throw PresentationError("subgroup " + n + " uses an undeclared generator");
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[')
      ++depth;
    else if (c == ')' || c == ']')
      --depth;
    if (depth <= 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty())
        out.push_back(std::move(current));
      current.clear();
      continue;
    }
    current += c;
  }
  if (!current.empty())
    out.push_back(std::move(current));
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::size_t parse_count(const std::string &token, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(token, &used);
    if (used != token.size())
      throw std::invalid_argument(token);
    return v;
  } catch (const std::exception &) {
    throw PresentationError("line " + std::to_string(line) + ": expected a number, got '" +
                            token + "'");
  }
}

} // namespace

PresentationFile parse_presentation(std::string_view text) {
  PresentationFile file;
  Presentation &pres = file.presentation;
  bool have_gens = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  auto fail = [&](const std::string &what) -> void {
    throw PresentationError("line " + std::to_string(line_no) + ": " + what);
  };
  auto parse_expr = [&](std::string_view src) {
    try {
      return parse_word(src, pres.generators);
    } catch (const WordParseError &e) {
      fail(std::string(e.what()) + " in '" + std::string(src) + "'");
    }
    return WordExpr::generator(0);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    auto space = line.find_first_of(" \t");
    std::string keyword(line.substr(0, space));
    std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));

    if (keyword == "group") {
      pres.name = std::string(rest);
    } else if (keyword == "gens") {
      if (have_gens)
        fail("duplicate gens line");
      auto names = split_words(rest);
      if (names.empty())
        fail("gens needs at least one generator");
      for (const auto &n : names) {
        if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') ||
            !std::all_of(n.begin(), n.end(), [](char c) {
              return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
            }))
          fail("bad generator name '" + n + "'");
        if (std::find(pres.generators.begin(), pres.generators.end(), n) != pres.generators.end())
          fail("duplicate generator '" + n + "'");
        pres.generators.push_back(n);
      }
      have_gens = true;
    } else if (keyword == "rel") {
      if (!have_gens)
        fail("rel before gens");
      if (rest.empty())
        fail("empty relator");
      WordExpr e = parse_expr(rest);
      pres.relators.push_back(flatten(e));
      file.relator_exprs.push_back(std::move(e));
      file.relator_sources.emplace_back(rest);
    } else if (keyword == "sub") {
      if (!have_gens)
        fail("sub before gens");
      auto parts = split_words(rest);
      if (parts.empty())
        fail("sub needs a name");
      std::string sub = parts.front();
      if (pres.has_subgroup(sub))
        fail("duplicate subgroup '" + sub + "'");
      std::vector<FlatWord> words;
      std::vector<WordExpr> exprs;
      for (std::size_t k = 1; k < parts.size(); ++k) {
        exprs.push_back(parse_expr(parts[k]));
        words.push_back(flatten(exprs.back()));
      }
      pres.subgroups.emplace_back(sub, std::move(words));
      file.subgroup_exprs.emplace_back(sub, std::move(exprs));
    } else if (keyword == "progenitor") {
      auto parts = split_words(rest);
      if (parts.size() < 3)
        fail("progenitor needs <degree> <basepoint> <control generators...>");
      ProgenitorDirective d;
      d.degree = parse_count(parts[0], line_no);
      d.base_point = parse_count(parts[1], line_no);
      if (d.base_point == 0 || d.base_point > d.degree)
        fail("progenitor base point out of range");
      d.control_generators.assign(parts.begin() + 2, parts.end());
      file.progenitor = std::move(d);
    } else if (keyword == "action") {
      auto space2 = rest.find_first_of(" \t");
      if (space2 == std::string_view::npos)
        fail("action needs <generator> <cycles>");
      file.actions.emplace_back(std::string(rest.substr(0, space2)),
                                std::string(trim(rest.substr(space2))));
    } else {
      fail("unknown directive '" + keyword + "'");
    }
  }
  if (!have_gens)
    throw PresentationError("presentation has no gens line");
  if (file.progenitor) {
    for (const auto &g : file.progenitor->control_generators)
      if (std::find(pres.generators.begin(), pres.generators.end(), g) == pres.generators.end())
        throw PresentationError("progenitor control generator '" + g + "' is not declared");
  }
  pres.validate();
  return file;
}

PresentationFile load_presentation(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw PresentationError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

} // namespace symgen
