#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "recurring/intcore.hpp"
#include "recurring/period.hpp"
#include "recurring/recurrence.hpp"
#include "recurring/report.hpp"
#include "recurring/semilocal.hpp"

namespace py = pybind11;
using namespace recurring;

namespace {

// Python ints cross the boundary as decimal strings so any size survives.
BigInt to_big(const py::int_& x) { return BigInt(py::str(py::handle(x.ptr())).cast<std::string>()); }

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

CorePoly core_of(const std::vector<py::int_>& t) {
  std::vector<BigInt> v;
  for (const auto& x : t) v.push_back(to_big(x));
  return new_core(std::move(v));
}

std::optional<Prime> modulus(std::optional<std::uint64_t> p) {
  return p ? std::optional<Prime>(Prime(*p)) : std::nullopt;
}

PeriodResult run_period(const CorePoly& core, Prime p, const std::string& method, std::uint64_t max_states) {
  if (method == "consistent") return period_consistent(core, p, {max_states});
  if (method == "orbit") return period_orbit(core, p);
  if (method == "matrix-order") return period_matrix_order(core, p);
  if (method == "factor-lcm") return period_factor_lcm(core, p);
  throw py::value_error("unknown method " + method);
}

}  // namespace

PYBIND11_MODULE(_recurring, m) {
  m.doc() = "Linear recurrences modulo primes";

  static py::exception<Error> exc(m, "RecurringError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const Error& err) {
      py::set_error(exc, err.what());
    }
  });

  m.def(
      "analyze_json",
      [](const std::vector<py::int_>& t, std::uint64_t p, std::uint64_t max_states) {
        const CorePoly core = core_of(t);
        return to_json(analyze_prime(core, Prime(p), CoreFacts::of(core), {max_states})).dump();
      },
      py::arg("t"), py::arg("p"), py::arg("max_state_space") = 100'000);

  m.def(
      "period",
      [](const std::vector<py::int_>& t, std::uint64_t p, const std::string& method, std::uint64_t max_states) {
        const PeriodResult r = run_period(core_of(t), Prime(p), method, max_states);
        return py::make_tuple(to_py(r.period), r.preperiod);
      },
      py::arg("t"), py::arg("p"), py::arg("method") = "consistent", py::arg("max_state_space") = 100'000);

  m.def(
      "factor",
      [](const std::vector<py::int_>& t, std::uint64_t p) {
        const Prime pp(p);
        py::list out;
        for (const auto& [f, e] : factorize(FpPoly::from_int(core_of(t).as_poly(), pp)).factors)
          out.append(py::make_tuple(f.coeffs(), e));
        return out;
      },
      py::arg("t"), py::arg("p"));

  m.def("discriminant", [](const std::vector<py::int_>& t) { return to_py(discriminant(core_of(t))); }, py::arg("t"));

  m.def(
      "gfp",
      [](const std::vector<py::int_>& t, std::int64_t from, std::int64_t to, std::optional<std::uint64_t> mod) {
        return to_py(gfp_range(core_of(t), from, to, modulus(mod)));
      },
      py::arg("t"), py::arg("start"), py::arg("stop"), py::arg("mod") = py::none());

  m.def(
      "glp",
      [](const std::vector<py::int_>& t, std::int64_t from, std::int64_t to, std::optional<std::uint64_t> mod) {
        return to_py(glp_range(core_of(t), from, to, modulus(mod)));
      },
      py::arg("t"), py::arg("start"), py::arg("stop"), py::arg("mod") = py::none());

  m.def(
      "companion_power",
      [](const std::vector<py::int_>& t, std::int64_t n) {
        const IntMatrix a = companion_power(core_of(t), n);
        py::list rows;
        for (std::size_t i = 0; i < a.size(); ++i) rows.append(to_py(a.row(i)));
        return rows;
      },
      py::arg("t"), py::arg("n"));

  m.def(
      "orbit",
      [](const std::vector<py::int_>& t, std::uint64_t p, const std::vector<long>& start) {
        const auto ctx = make_context(core_of(t), Prime(p));
        if (start.size() != ctx->degree()) throw py::value_error("start vector has the wrong length");
        FpVector v;
        for (long x : start) v.push_back(reduce(BigInt(x), p));
        const OrbitRecord r = vector_orbit(v, ctx->companion());
        py::dict out;
        out["states"] = r.states;
        out["preperiod"] = r.preperiod;
        out["period"] = r.period;
        return out;
      },
      py::arg("t"), py::arg("p"), py::arg("start"));

  m.def(
      "exact_period", [](const std::vector<py::int_>& t) { return exact_period(core_of(t)); }, py::arg("t"));

  m.def(
      "cyclotomic_core",
      [](unsigned long n) { return to_py(core_from_poly(cyclotomic(n)).t()); }, py::arg("n"));

  m.def(
      "unit_group_order",
      [](const std::vector<py::int_>& t, std::uint64_t p) {
        return to_py(unit_group_order(*make_context(core_of(t), Prime(p))));
      },
      py::arg("t"), py::arg("p"));

  m.def(
      "idempotents",
      [](const std::vector<py::int_>& t, std::uint64_t p) {
        py::list out;
        for (const Idempotent& e : primitive_idempotents(*make_context(core_of(t), Prime(p))).items)
          out.append(py::make_tuple(e.element.coords(), e.rank));
        return out;
      },
      py::arg("t"), py::arg("p"));
}
