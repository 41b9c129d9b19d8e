#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "freedecomp/errors.hpp"
#include "freedecomp/incidence.hpp"
#include "freedecomp/presheaf.hpp"
#include "freedecomp/serialize.hpp"
#include "freedecomp/zoo.hpp"

namespace py = pybind11;
using namespace freedecomp;

namespace {

py::dict report(const CheckReport& r) {
  py::dict d;
  d["check"] = r.check;
  d["passed"] = r.passed;
  d["witnesses"] = r.witnesses;
  return d;
}

using SSet = TruncatedSimplicialSet;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free decomposition spaces over the inert simplex category";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<TruncationTooSmall>(m, "TruncationTooSmall", base.ptr());
  py::register_exception<BudgetOverflow>(m, "BudgetOverflow", base.ptr());
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());

  py::class_<InertPresheaf, std::shared_ptr<InertPresheaf>>(m, "Presheaf")
      .def_property_readonly("budget", &InertPresheaf::budget)
      .def("level", &InertPresheaf::level)
      .def("size", &InertPresheaf::size)
      .def("d_bot", [](const InertPresheaf& a, int n, const std::string& e) { return a.element(n - 1, a.bot(n, a.index(n, e))); })
      .def("d_top", [](const InertPresheaf& a, int n, const std::string& e) { return a.element(n - 1, a.top(n, a.index(n, e))); })
      .def("to_json", [](const InertPresheaf& a) { return to_json(a).dump(); });

  py::class_<SSet, std::shared_ptr<SSet>>(m, "SimplicialSet")
      .def_property_readonly("truncation", &SSet::truncation)
      .def("level", &SSet::level)
      .def("size", &SSet::size)
      .def("face", [](const SSet& x, int k, int i, const std::string& e) { return x.element(k - 1, x.face(k, i, x.index(k, e))); })
      .def("degeneracy",
           [](const SSet& x, int k, int i, const std::string& e) { return x.element(k + 1, x.degeneracy(k, i, x.index(k, e))); })
      .def("to_json", [](const SSet& x) { return to_json(x).dump(); });

  m.def("examples", [] {
    std::vector<std::string> names;
    for (const auto& e : example_registry()) names.push_back(e.name);
    return names;
  });
  m.def("example", [](const std::string& name, std::optional<int> bound) {
    const auto& ex = find_example(name);
    return std::make_shared<InertPresheaf>(ex.build(bound.value_or(ex.default_budget)));
  }, py::arg("name"), py::arg("bound") = py::none());
  m.def("words", [](const std::vector<std::string>& alphabet, int max_len) {
    return std::make_shared<InertPresheaf>(words(alphabet, max_len));
  });
  m.def("b_nat", [](int n, int w) { return std::make_shared<SSet>(b_nat(n, w)); });
  m.def("free_space", [](const InertPresheaf& a, int n) { return std::make_shared<SSet>(free_space(a, n)); });

  m.def("validate_presheaf", [](const InertPresheaf& a) { return report(validate_presheaf(a)); });
  m.def("check_sheaf", [](const InertPresheaf& a) { return report(check_sheaf(a)); });
  m.def("check_simplicial_identities", [](const SSet& x) { return report(check_simplicial_identities(x)); });
  m.def("check_decomposition", [](const SSet& x) { return report(check_decomposition(x)); });
  m.def("check_segal", [](const SSet& x) { return report(check_segal(x)); });
  m.def("check_culf_projection", [](std::shared_ptr<SSet> x, int max_weight) {
    return report(check_culf(culf_projection(std::const_pointer_cast<const SSet>(x), max_weight)));
  });
  m.def("roundtrip", [](const InertPresheaf& a, int n) {
    auto x = std::make_shared<const SSet>(free_space(a, n));
    return std::vector<py::dict>{report(roundtrip_recover_free(a, n)),
                                 report(roundtrip_free_recover(x, culf_projection(x, a.budget())))};
  });

  // {(factor, ...): "p/q"}
  m.def("comult", [](const SSet& x, const std::string& f, int iterate) {
    py::dict out;
    for (const auto& [key, c] : iterated_comult(x, f, iterate).terms()) out[py::tuple(py::cast(key))] = format_rational(c);
    return out;
  }, py::arg("x"), py::arg("element"), py::arg("iterate") = 1);
  m.def("mobius", [](const SSet& x, int up_to_length) {
    const auto r = mobius(x, up_to_length);
    py::dict mu, alt;
    for (std::size_t f = 0; f < x.size(1); ++f)
      if (r.certified[f]) {
        mu[py::str(x.element(1, f))] = format_rational(r.mu(f));
        alt[py::str(x.element(1, f))] = format_rational(r.alternating(f));
      }
    return py::make_tuple(mu, alt);
  });
  m.def("lengths", [](const SSet& x) {
    py::dict out;
    const auto ls = lengths(x);
    for (std::size_t f = 0; f < x.size(1); ++f) out[py::str(x.element(1, f))] = py::make_tuple(ls[f].value, ls[f].saturated);
    return out;
  });
  m.def("compare_tw", [](int n, int w) { return report(compare_tw_bn_with_delta_inert(n, w)); });
}
