#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symgen/m22.hpp"

namespace py = pybind11;
using namespace symgen;

namespace {

Permutation perm_from(const py::object &o, std::size_t degree) {
  if (py::isinstance<py::str>(o)) {
    if (degree == 0)
      throw py::value_error("degree is required with cycle notation");
    return Permutation::from_cycles(o.cast<std::string>(), degree);
  }
  // 1-indexed images, as everywhere else on the Python side
  auto images = o.cast<std::vector<Point>>();
  for (auto &v : images) {
    if (v == 0)
      throw py::value_error("images are 1-indexed");
    --v;
  }
  return Permutation(std::move(images));
}

PresentationFile load_pres(const std::optional<std::string> &path) {
  return path ? load_presentation(*path) : m22::presentation_file();
}

} // namespace

PYBIND11_MODULE(_symgen, m) {
  m.doc() = "permutation groups, coset enumeration and double coset enumeration";

  py::register_exception<PermutationError>(m, "PermutationError", PyExc_ValueError);
  py::register_exception<WordParseError>(m, "WordParseError", PyExc_ValueError);
  py::register_exception<PresentationError>(m, "PresentationError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const py::object &o, std::size_t degree) { return perm_from(o, degree); }),
           py::arg("cycles_or_images"), py::arg("degree") = 0)
      .def_static("identity", &Permutation::identity)
      .def_property_readonly("degree", &Permutation::degree)
      .def("images", [](const Permutation &p) {
        std::vector<Point> out;
        for (Point q : p.images())
          out.push_back(q + 1);
        return out;
      })
      .def("inverse", &Permutation::inverse)
      .def("order", &Permutation::order)
      .def("is_identity", &Permutation::is_identity)
      .def("__call__", [](const Permutation &p, Point i) {
        if (i < 1 || i > p.degree())
          throw py::index_error("point out of range");
        return p[i - 1] + 1;
      })
      .def("__mul__", [](const Permutation &a, const Permutation &b) { return a * b; })
      .def("__pow__", [](const Permutation &a, long long e) { return a.pow(e); })
      .def("__eq__", [](const Permutation &a, const Permutation &b) { return a == b; })
      .def("__hash__", [](const Permutation &p) { return PermutationHash{}(p); })
      .def("__str__", &Permutation::to_cycles)
      .def("__repr__", [](const Permutation &p) { return "Permutation('" + p.to_cycles() + "')"; });

  py::class_<PermutationGroup>(m, "PermutationGroup")
      .def(py::init([](std::vector<Permutation> gens, std::size_t degree) {
             return PermutationGroup(std::move(gens), degree);
           }),
           py::arg("generators"), py::arg("degree"))
      .def_property_readonly("degree", &PermutationGroup::degree)
      .def_property_readonly("generators", &PermutationGroup::generators)
      .def("order", &PermutationGroup::order)
      .def("__contains__", py::overload_cast<const Permutation &>(&PermutationGroup::contains, py::const_))
      .def("is_subgroup_of", [](const PermutationGroup &h, const PermutationGroup &g) { return g.contains(h); })
      .def("orbit", [](const PermutationGroup &g, Point p) {
        if (p < 1 || p > g.degree())
          throw py::index_error("point out of range");
        std::vector<Point> out;
        for (Point q : orbit(g, p - 1))
          out.push_back(q + 1);
        return out;
      })
      .def("stabilizer", [](const PermutationGroup &g, Point p) {
        if (p < 1 || p > g.degree())
          throw py::index_error("point out of range");
        return point_stabilizer(g, p - 1);
      })
      .def("is_transitive", [](const PermutationGroup &g) { return is_transitive(g); })
      .def("is_primitive", [](const PermutationGroup &g) { return is_primitive(g); })
      .def("derived_subgroup", [](const PermutationGroup &g) { return derived_subgroup(g); });

  py::class_<CosetTable>(m, "CosetTable")
      .def_property_readonly("index", &CosetTable::index)
      .def_property_readonly("generators", &CosetTable::generators)
      .def("to_tsv", &CosetTable::to_tsv)
      .def("generator_actions", &CosetTable::generator_actions)
      .def("__eq__", [](const CosetTable &a, const CosetTable &b) { return a == b; })
      .def_property_readonly("cosets_defined", [](const CosetTable &t) { return t.stats().cosets_defined; })
      .def_property_readonly("max_live", [](const CosetTable &t) { return t.stats().max_live; });

  m.def("m22_presentation", [] { return std::string(m22::presentation_text()); });

  m.def(
      "enumerate",
      [](const std::string &subgroup, const std::optional<std::string> &pres, const std::string &strategy,
         std::size_t max_cosets) {
        auto file = load_pres(pres);
        const auto &p = file.presentation;
        if (!p.has_subgroup(subgroup))
          throw py::key_error("no subgroup named " + subgroup);
        py::gil_scoped_release release;
        return enumerate(p, p.subgroup(subgroup), {max_cosets, parse_strategy(strategy)});
      },
      py::arg("subgroup"), py::arg("pres") = py::none(), py::arg("strategy") = "felsch",
      py::arg("max_cosets") = kDefaultMaxCosets);

  m.def(
      "double_cosets",
      [](const std::string &strategy) {
        auto run = m22::run_dce(parse_strategy(strategy));
        py::list out;
        for (const auto &dc : run.decomposition.double_cosets()) {
          py::dict d;
          d["name"] = double_coset_name(dc.representative);
          d["representative"] = dc.representative;
          d["count"] = dc.count();
          d["stabilizer_order"] = dc.stabilizer.order();
          out.append(d);
        }
        return out;
      },
      py::arg("strategy") = "felsch");

  m.def("cayley_graph_dot", [] { return collapsed_graph(m22::run_dce().decomposition).to_dot(); });

  m.def(
      "verify_m22",
      [](bool covers) {
        m22::VerifyOptions o;
        o.covers = covers;
        m22::Claims claims;
        {
          py::gil_scoped_release release;
          claims = m22::verify_all(o);
        }
        py::list out;
        for (const auto &c : claims) {
          py::dict d;
          d["id"] = c.id;
          d["statement"] = c.statement;
          d["passed"] = c.passed;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("covers") = false);
}
