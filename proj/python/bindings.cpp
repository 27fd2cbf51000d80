// Python bindings: thin wrappers, objects stay opaque and round-trip through the text formats.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "artri/acceptance.hpp"
#include "artri/artheory.hpp"
#include "artri/forms.hpp"
#include "artri/io.hpp"

namespace py = pybind11;
using namespace artri;

namespace {

// pybind11 cannot hold shared_ptr<const T> directly.
struct AlgebraHandle {
  AlgebraPtr ptr;
  const Algebra* operator->() const { return ptr.get(); }
};

std::vector<std::size_t> homology_dims(const PerfectComplex& c) {
  std::vector<std::size_t> out;
  for (int n = c.lo(); n <= c.hi(); ++n) out.push_back(homology(c, n).dim());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Raised for every library Error; .code carries the error name.
  static py::handle exc = PyErr_NewException("artri._core.ArtriError", PyExc_RuntimeError, nullptr);
  m.attr("ArtriError") = exc;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = exc(e.what());
      inst.attr("code") = std::string(error_name(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  py::class_<AlgebraHandle>(m, "Algebra")
      .def_property_readonly("name", [](const AlgebraHandle& a) { return a->name(); })
      .def_property_readonly("dim", [](const AlgebraHandle& a) { return a->dim(); })
      .def_property_readonly("rank", [](const AlgebraHandle& a) { return a->rank(); })
      .def_property_readonly("p", [](const AlgebraHandle& a) { return a->field().p(); })
      .def_property_readonly("loewy_length", [](const AlgebraHandle& a) { return a->loewy_length(); })
      .def_property_readonly("is_self_injective", [](const AlgebraHandle& a) { return a->is_self_injective(); })
      .def_property_readonly("is_symmetric", [](const AlgebraHandle& a) { return a->is_symmetric(); })
      .def("cartan", [](const AlgebraHandle& a) { return a->cartan(); })
      .def("dump", [](const AlgebraHandle& a) { return dump_algebra(*a.ptr); });

  py::class_<ModuleRep>(m, "Module")
      .def_property_readonly("dim", &ModuleRep::dim)
      .def("composition_factors", [](const ModuleRep& x) { return composition_factors(x); })
      .def("is_projective", [](const ModuleRep& x) { return is_projective(x); })
      .def("is_indecomposable", [](const ModuleRep& x, std::uint64_t s) { return is_indecomposable(x, s); },
           py::arg("seed") = 0)
      .def("summand_dims",
           [](const ModuleRep& x, std::uint64_t s) {
             std::vector<std::size_t> d;
             for (const auto& sm : decompose(x, s).summands)
               for (std::size_t k = 0; k < sm.multiplicity; ++k) d.push_back(sm.module.dim());
             std::sort(d.begin(), d.end());
             return d;
           },
           py::arg("seed") = 0)
      .def("dump", [](const ModuleRep& x) { return dump_module(x); });

  py::class_<PerfectComplex>(m, "Complex")
      .def_property_readonly("lo", &PerfectComplex::lo)
      .def_property_readonly("hi", &PerfectComplex::hi)
      .def_property_readonly("is_zero", &PerfectComplex::is_zero)
      .def("length", [](const PerfectComplex& c) { return length(c); })
      .def("homology", [](const PerfectComplex& c, int n) { return homology(c, n); })
      .def("homology_dims", &homology_dims)
      .def("minimize", [](const PerfectComplex& c) { return minimize(c); })
      .def("shift", [](const PerfectComplex& c, int j) { return shift(c, j); })
      .def("nu_power", [](const PerfectComplex& c, int j) { return nu_power(c, j); })
      .def("dump", [](const PerfectComplex& c) { return dump_complex(c); });

  py::class_<ARSequence>(m, "ARSequence")
      .def_readonly("tau_m", &ARSequence::tau_m)
      .def_readonly("middle", &ARSequence::middle)
      .def_readonly("m", &ARSequence::m)
      .def_readonly("exact", &ARSequence::exact)
      .def_readonly("split", &ARSequence::split);

  py::class_<ARTriangle>(m, "ARTriangle")
      .def_readonly("x", &ARTriangle::x)
      .def_readonly("y", &ARTriangle::y)
      .def_readonly("z", &ARTriangle::z);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("title", &CriterionResult::title)
      .def_readonly("passed", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail);

  m.def("load_algebra", [](const std::string& path) { return AlgebraHandle{load_algebra(path)}; });
  m.def("parse_algebra",
        [](const std::string& text) { return AlgebraHandle{Algebra::validate(parse_algebra_spec(text))}; });
  m.def("load_module", [](const std::string& path, const AlgebraHandle& a) { return load_module(path, a.ptr); });
  m.def("parse_module", [](const std::string& text, const AlgebraHandle& a) { return parse_module(text, a.ptr); });
  m.def("load_complex", [](const std::string& path, const AlgebraHandle& a) { return load_complex(path, a.ptr); });
  m.def("parse_complex", [](const std::string& text, const AlgebraHandle& a) { return parse_complex(text, a.ptr); });

  m.def("simple_module", [](const AlgebraHandle& a, std::size_t i) { return simple_module(a.ptr, i); });
  m.def("projective_module", [](const AlgebraHandle& a, std::size_t i) { return projective_module(a.ptr, i); });
  m.def("is_isomorphic", py::overload_cast<const ModuleRep&, const ModuleRep&, std::uint64_t>(&is_isomorphic),
        py::arg("a"), py::arg("b"), py::arg("seed") = 0);
  m.def("is_isomorphic", py::overload_cast<const PerfectComplex&, const PerfectComplex&, std::uint64_t>(&is_isomorphic),
        py::arg("a"), py::arg("b"), py::arg("seed") = 0);
  m.def("from_resolution", &from_resolution);
  m.def("hom_dim", py::overload_cast<const PerfectComplex&, const PerfectComplex&>(&hom_dim));

  m.def("ar_sequence", &ar_sequence, py::arg("m"), py::arg("seed") = 0);
  m.def("ar_triangle_ending_at", &ar_triangle_ending_at, py::arg("z"), py::arg("seed") = 0);
  m.def("e_complex", &e_complex, py::arg("m"), py::arg("seed") = 0);
  m.def("is_on_rim", &is_on_rim, py::arg("c"), py::arg("seed") = 0);
  m.def("distance_from_rim", &distance_from_rim, py::arg("c"), py::arg("seed") = 0);
  m.def("projective_chain_complex",
        [](const AlgebraHandle& a, std::size_t s, std::size_t n) { return projective_chain_complex(a.ptr, s, n); });
  m.def("big_homology_complex",
        [](const AlgebraHandle& a, std::size_t s, std::size_t r) { return big_homology_complex(a.ptr, s, r); });
  m.def("stabilization_module", &stabilization_module, py::arg("c"), py::arg("seed") = 0);
  m.def("is_rigid", &is_rigid, py::arg("c"), py::arg("seed") = 0);

  m.def("pairing", [](const PerfectComplex& c, const PerfectComplex& d) { return pairing(FormalSum(c), FormalSum(d)); });
  m.def("pairing_t", [](const PerfectComplex& c, const PerfectComplex& d) { return pairing_t(c, d).to_string(); });

  m.def("default_fixture_dir", &default_fixture_dir);
  m.def("run_acceptance", [](const std::string& dir) { return run_acceptance(dir); },
        py::arg("fixture_dir") = default_fixture_dir());
}
