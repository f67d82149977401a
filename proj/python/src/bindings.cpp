#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdlab/homology.hpp"
#include "sdlab/io.hpp"
#include "sdlab/polarization.hpp"
#include "sdlab/stanley.hpp"
#include "sdlab/verify.hpp"

namespace py = pybind11;
using namespace sdlab;

namespace {

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<int>> rows(const std::vector<ExponentVector>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& a : v) out.push_back(a.entries());
  return out;
}

ModuleSpec make_spec(std::vector<std::string> names, const std::vector<std::vector<int>>& i,
                     const std::vector<std::vector<int>>& j, unsigned characteristic) {
  const std::size_t n = names.size();
  auto ideal = [n](const std::vector<std::vector<int>>& gens) {
    std::vector<ExponentVector> v;
    for (const auto& g : gens) v.emplace_back(g);
    return v.empty() ? MonomialIdeal::zero(n) : MonomialIdeal(n, v);
  };
  return ModuleSpec(RingContext(std::move(names), characteristic), ideal(i), ideal(j));
}

}  // namespace

PYBIND11_MODULE(_sdlab, m) {
  m.doc() = "Exact Stanley depth, depth, Hilbert series and polarization of I/J";

  py::register_exception<Error>(m, "SdlabError", PyExc_ValueError);

  py::class_<ModuleSpec>(m, "ModuleSpec")
      .def(py::init([](const std::string& text) { return parse_module_spec(text); }), py::arg("text"))
      .def(py::init(&make_spec), py::arg("names"), py::arg("I"), py::arg("J") = std::vector<std::vector<int>>{},
           py::arg("characteristic") = 0u)
      .def_property_readonly("names", [](const ModuleSpec& s) { return s.ring().names(); })
      .def_property_readonly("characteristic", [](const ModuleSpec& s) { return s.ring().characteristic(); })
      .def_property_readonly("I", [](const ModuleSpec& s) { return rows(s.I().generators()); })
      .def_property_readonly("J", [](const ModuleSpec& s) { return rows(s.J().generators()); })
      .def_property_readonly("nvars", &ModuleSpec::nvars)
      .def("canonical_bound", [](const ModuleSpec& s) { return canonical_bound(s).entries(); })
      .def("is_squarefree", [](const ModuleSpec& s) { return s.I().is_squarefree() && s.J().is_squarefree(); })
      .def("__str__", &format_module_spec)
      .def("__repr__", [](const ModuleSpec& s) { return "ModuleSpec(" + py::repr(py::str(format_module_spec(s))).cast<std::string>() + ")"; })
      .def(py::self == py::self);

  m.def(
      "sdepth",
      [](const ModuleSpec& s) {
        SdepthResult r;
        {
          py::gil_scoped_release release;
          r = sdepth(s);
        }
        return py::make_tuple(r.sdepth, from_json(partition_to_json(r.witness)));
      },
      py::arg("spec"), "Stanley depth and a witness interval partition of the characteristic poset.");
  m.def(
      "decompose",
      [](const ModuleSpec& s) {
        return from_json(decomposition_to_json(partition_to_decomposition(sdepth(s).witness), s.ring()));
      },
      py::arg("spec"), "An optimal Stanley decomposition as a list of {a, monomial, Z}.");
  m.def(
      "depth",
      [](const ModuleSpec& s, std::optional<unsigned> characteristic) {
        py::gil_scoped_release release;
        return characteristic ? depth(s, *characteristic) : depth(s);
      },
      py::arg("spec"), py::arg("characteristic") = std::nullopt);
  m.def(
      "hilbert_series",
      [](const ModuleSpec& s) {
        const HilbertSeries h = hilbert_series(s);
        py::list num;
        for (const auto& c : h.numerator()) num.append(py::int_(py::module_::import("builtins").attr("int")(c.str())));
        return py::make_tuple(num, h.denominator_exponent());
      },
      py::arg("spec"), "(numerator coefficients, d) with H = numerator / (1 - t)^d.");
  m.def(
      "polarize", [](const ModuleSpec& s) { return full_polarize(s).spec; }, py::arg("spec"));
  m.def(
      "polarize_step",
      [](const ModuleSpec& s, const std::string& variable, std::optional<std::string> fresh) {
        const std::size_t v = s.ring().index_of(variable);
        if (v == s.nvars()) throw Error("unknown variable '" + variable + "'");
        return one_step_polarize(s, v, std::move(fresh)).target;
      },
      py::arg("spec"), py::arg("variable"), py::arg("fresh") = std::nullopt);
  m.def(
      "random_spec",
      [](std::uint64_t seed, int max_n, int max_deg, int max_gens) {
        return random_spec(seed, SpecBounds{max_n, max_deg, max_gens});
      },
      py::arg("seed"), py::arg("max_n") = 3, py::arg("max_deg") = 3, py::arg("max_gens") = 4);
  m.def("theorem_tags", &theorem_tags);
  m.def(
      "verify",
      [](const std::string& tag, int trials, std::uint64_t seed, int max_n, int max_deg, int max_gens,
         unsigned threads) {
        HarnessOptions o{trials, seed, {max_n, max_deg, max_gens}, threads};
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_verification(tag, o);
        }
        return from_json(r.to_json());
      },
      py::arg("tag"), py::arg("trials") = 20, py::arg("seed") = 0, py::arg("max_n") = 3, py::arg("max_deg") = 3,
      py::arg("max_gens") = 4, py::arg("threads") = 0);
}
