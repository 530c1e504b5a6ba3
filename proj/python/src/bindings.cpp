#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>

#include "skewmorph/census.hpp"
#include "skewmorph/census_checks.hpp"
#include "skewmorph/census_io.hpp"
#include "skewmorph/construct.hpp"
#include "skewmorph/error.hpp"
#include "skewmorph/numth.hpp"
#include "skewmorph/oracle.hpp"
#include "skewmorph/reduce.hpp"

namespace py = pybind11;
using namespace skewmorph;

namespace {

std::vector<int> to_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

std::string parity_name(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew morphisms of cyclic groups";

  static py::exception<Error> error_type(m, "SkewmorphError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<SkewMorphism>(m, "SkewMorphism")
      .def_static("validate",
                  [](int n, const std::vector<int>& images) { return SkewMorphism::validate(n, images); },
                  py::arg("n"), py::arg("images"))
      .def_static("identity", &SkewMorphism::identity, py::arg("n"))
      .def_static("from_automorphism", &SkewMorphism::from_automorphism, py::arg("n"), py::arg("u"))
      .def_property_readonly("n", &SkewMorphism::modulus)
      .def_property_readonly("order", &SkewMorphism::order)
      .def_property_readonly("images", [](const SkewMorphism& s) { return to_vector(s.images()); })
      .def_property_readonly("powers", [](const SkewMorphism& s) { return to_vector(s.powers()); })
      .def_property_readonly("kernel", [](const SkewMorphism& s) {
        const auto k = s.kernel();
        return py::make_tuple(k.generator, k.size);
      })
      .def("is_automorphism", &SkewMorphism::is_automorphism)
      .def("apply_power", &SkewMorphism::apply_power, py::arg("e"), py::arg("a"))
      .def("sigma", &SkewMorphism::sigma, py::arg("x"), py::arg("y"))
      .def("__call__", [](const SkewMorphism& s, int a) { return s(a); })
      .def("__eq__", [](const SkewMorphism& a, const SkewMorphism& b) { return a == b; })
      .def("__lt__", [](const SkewMorphism& a, const SkewMorphism& b) { return a < b; })
      .def("__hash__", [](const SkewMorphism& s) { return py::hash(py::tuple(py::cast(to_vector(s.images())))); })
      .def("__repr__", [](const SkewMorphism& s) {
        return "SkewMorphism(" + std::to_string(s.modulus()) + ", [" + s.to_string() + "])";
      });

  py::class_<ComplexityProfile>(m, "ComplexityProfile")
      .def_readonly("complexity", &ComplexityProfile::complexity)
      .def_readonly("auto_order", &ComplexityProfile::auto_order)
      .def_readonly("chain", &ComplexityProfile::chain);

  py::class_<ReductionTriple>(m, "ReductionTriple")
      .def(py::init([](const std::string& parity, int n, int order, int auto_order, int h,
                       const SkewMorphism& alpha, const SkewMorphism& beta) {
             if (parity != "even" && parity != "odd")
               throw Error(ErrorCode::kBadParameters, "parity must be 'even' or 'odd'");
             return ReductionTriple{parity == "even" ? Parity::kEven : Parity::kOdd, n, order,
                                    auto_order, h, alpha, beta};
           }),
           py::arg("parity"), py::arg("n"), py::arg("order"), py::arg("auto_order"), py::arg("h"),
           py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("parity", [](const ReductionTriple& t) { return parity_name(t.parity); })
      .def_readonly("n", &ReductionTriple::n)
      .def_readonly("order", &ReductionTriple::order)
      .def_readonly("auto_order", &ReductionTriple::auto_order)
      .def_readonly("h", &ReductionTriple::h)
      .def_readonly("alpha", &ReductionTriple::alpha)
      .def_readonly("beta", &ReductionTriple::beta)
      .def("__eq__", [](const ReductionTriple& a, const ReductionTriple& b) { return a == b; });

  py::class_<CandidateReport>(m, "CandidateReport")
      .def_readonly("triple", &CandidateReport::triple)
      .def_readonly("result", &CandidateReport::result)
      .def_property_readonly("accepted", &CandidateReport::accepted)
      .def_property_readonly("failed_condition",
                             [](const CandidateReport& r) -> std::optional<std::string> {
                               if (!r.failed_condition) return std::nullopt;
                               return std::string(to_string(*r.failed_condition));
                             })
      .def_readonly("group_ops", &CandidateReport::group_ops);

  m.def("derived", &derived, py::arg("phi"));
  m.def("star", &star, py::arg("phi"));
  m.def("modulo", &modulo, py::arg("phi"), py::arg("m"));
  m.def("restrict", &restrict_to_subgroup, py::arg("phi"), py::arg("m"));
  m.def("power_skew", &power_skew, py::arg("phi"), py::arg("e"));
  m.def("complexity", &complexity, py::arg("phi"));
  m.def("reduction", &reduction, py::arg("phi"));
  m.def("build", [](const ReductionTriple& t) { return build(t); }, py::arg("triple"));
  m.def("automorphisms", &automorphisms, py::arg("n"));
  m.def("prime_order_skew", &prime_order_skew, py::arg("p"), py::arg("n"), py::arg("u"), py::arg("v"));
  m.def("pgroup_skew", &pgroup_skew, py::arg("p"), py::arg("e"), py::arg("i"), py::arg("j"),
        py::arg("k"), py::arg("l"));

  m.def("enumerate_all", [](int n) { return oracle::enumerate_all(n); }, py::arg("n"));
  m.def("is_skew", [](int n, const std::vector<int>& images) { return oracle::is_skew(n, images); },
        py::arg("n"), py::arg("images"));

  py::class_<Census>(m, "Census")
      .def_static("generate", [](int max_n) { return Census::generate(max_n); }, py::arg("max_n"))
      .def_static("load", &load_census, py::arg("directory"))
      .def("save", [](const Census& c, const std::filesystem::path& dir) { save_census(c, dir); },
           py::arg("directory"))
      .def_property_readonly("max_n", &Census::max_n)
      .def("morphisms", &Census::morphisms, py::arg("n"))
      .def("__len__", &Census::size)
      .def("__eq__", [](const Census& a, const Census& b) { return a == b; })
      .def("comp_set", [](const Census& c, int n) { return comp_set(c, n); }, py::arg("n"))
      .def("prime_order_count",
           [](const Census& c, int p, int n) {
             const CountCheck r = check_prime_order_count(c, p, n);
             return py::make_tuple(r.observed, r.predicted);
           },
           py::arg("p"), py::arg("n"))
      .def("order4_count",
           [](const Census& c, const std::vector<int>& primes) {
             const CountCheck r = check_order4_count(c, primes);
             return py::make_tuple(r.observed, r.predicted);
           },
           py::arg("primes"))
      .def("stats_csv", [](const Census& c) { return stats_csv(stats(c)); });

  m.def("totient", &numth::totient, py::arg("n"));
  m.def("multiplicative_order", &numth::multiplicative_order, py::arg("u"), py::arg("n"));
}
