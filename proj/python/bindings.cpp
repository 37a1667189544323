#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mbonacci/error.hpp"
#include "mbonacci/expr.hpp"
#include "mbonacci/quotient_ring.hpp"
#include "mbonacci/recurrences.hpp"
#include "mbonacci/report.hpp"
#include "mbonacci/rootfind.hpp"
#include "mbonacci/symmetric_core.hpp"
#include "mbonacci/sympoly.hpp"

namespace py = pybind11;
using namespace mbonacci;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

Family family_of(const std::string& name) {
  const auto f = parse_family(name);
  if (!f || *f == Family::custom) throw InvalidSpec("unknown family '" + name + "'");
  return *f;
}

ConjectureVariant variant_of(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v) throw InvalidSpec("unknown variant '" + name + "'");
  return *v;
}

VerifyOptions options(std::uint64_t cap) {
  VerifyOptions o;
  o.cap = cap;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact nested power sums over m-bonacci characteristic roots";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<NotConverged>(m, "NotConverged", base.ptr());
  py::register_exception<ExprError>(m, "ExprError", base.ptr());

  m.def(
      "term",
      [](const std::string& family, std::size_t order, std::uint64_t n) {
        return to_py(term(make_family(family_of(family), order), n));
      },
      py::arg("family"), py::arg("m"), py::arg("n"));
  m.def(
      "term_fast",
      [](const std::string& family, std::size_t order, std::uint64_t n) {
        return to_py(term_fast(make_family(family_of(family), order), n));
      },
      py::arg("family"), py::arg("m"), py::arg("n"));
  m.def(
      "window",
      [](const std::string& family, std::size_t order, std::uint64_t lo, std::uint64_t hi) {
        return to_py(window(make_family(family_of(family), order), lo, hi));
      },
      py::arg("family"), py::arg("m"), py::arg("lo"), py::arg("hi"));

  m.def(
      "vieta", [](std::size_t order) { return to_py(vieta(order).e); }, py::arg("m"));
  m.def(
      "h_sequence",
      [](std::size_t order, std::uint64_t n_max) { return to_py(h_sequence(order, n_max).values); },
      py::arg("m"), py::arg("n_max"));
  m.def(
      "power_sums",
      [](std::size_t order, std::uint64_t n_max) { return to_py(power_sums(order, n_max).values); },
      py::arg("m"), py::arg("n_max"));
  m.def(
      "nested_sum_exact",
      [](std::uint64_t n, std::size_t order, std::uint64_t cap) {
        return to_py(nested_sum_exact(n, order, cap));
      },
      py::arg("n"), py::arg("m"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "reduce_nested_sum",
      [](std::uint64_t n, std::size_t order, std::uint64_t cap) {
        return reduce_to_e_basis(nested_sum_poly(n, order, cap)).to_string();
      },
      py::arg("n"), py::arg("m"), py::arg("cap") = kDefaultEnumerationCap,
      "Nested sum of degree n in m variables, written in the elementary basis.");

  m.def(
      "find_roots",
      [](std::size_t order, double tol, std::size_t max_iter) {
        const RootSet rs = find_roots(order, tol, max_iter);
        py::dict d;
        d["roots"] = rs.roots;
        d["residuals"] = rs.residuals;
        d["iterations"] = rs.iterations;
        d["converged"] = rs.converged;
        return d;
      },
      py::arg("m"), py::arg("tol") = 1e-12, py::arg("max_iter") = 500);
  m.def(
      "numeric_nested_sum",
      [](std::size_t order, std::uint64_t n, std::uint64_t cap) {
        const NumericSum s = numeric_nested_sum(find_roots(order), n, cap);
        return py::make_tuple(s.value, s.error_estimate);
      },
      py::arg("m"), py::arg("n"), py::arg("cap") = kDefaultEnumerationCap,
      "Returns (value, error_estimate).");

  m.def("verify_layer_identity", &verify_layer_identity, py::arg("n"), py::arg("m"));
  m.def("verify_u_step", &verify_u_step, py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);

  m.def(
      "evaluate", [](const std::string& src, std::size_t order) {
        return to_py(expr::evaluate(src, order));
      },
      py::arg("expression"), py::arg("m"));
  m.def(
      "pretty", [](const std::string& src) { return expr::to_string(expr::parse(src)); },
      py::arg("expression"));

  m.def(
      "_verify_identity_json",
      [](std::size_t order, std::uint64_t n_max, std::uint64_t cap) {
        return report_json(verify_identity(order, n_max, options(cap)), true).dump();
      },
      py::arg("m"), py::arg("n_max"), py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "_verify_conjecture_json",
      [](std::size_t max_m, std::uint64_t n_max, const std::string& variant, std::uint64_t cap) {
        return report_json(verify_conjecture(max_m, n_max, variant_of(variant), options(cap)), true)
            .dump();
      },
      py::arg("max_m"), py::arg("n_max"), py::arg("variant") = "as-stated",
      py::arg("cap") = kDefaultEnumerationCap);
  m.def(
      "_verify_proof_steps_json",
      [](std::size_t order, std::uint64_t n_max, std::uint64_t cap) {
        return report_json(verify_proof_steps(order, n_max, options(cap)), true).dump();
      },
      py::arg("m"), py::arg("n_max"), py::arg("cap") = kDefaultEnumerationCap);
}
