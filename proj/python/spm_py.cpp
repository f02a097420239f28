#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spm/combinum.hpp"
#include "spm/oracle.hpp"
#include "spm/spcounts.hpp"
#include "spm/table_io.hpp"
#include "spm/verify.hpp"

namespace py = pybind11;
using namespace spm;

namespace {

py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const BigRat& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::list rows_to_py(const std::vector<std::vector<BigInt>>& rows) {
  py::list out;
  for (const auto& row : rows) {
    py::list r;
    for (const auto& v : row) r.append(to_py(v));
    out.append(r);
  }
  return out;
}

counts::TriangularCountTable table_for(const std::string& family, int max_n, std::optional<int> order) {
  return counts::build_table(counts::parse_family(family), max_n, order.value_or(max_n));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact counts of series-parallel matroids by size and rank";

  m.def("factorial", [](long n) { return to_py(combinum::factorial(n)); }, py::arg("n"));
  m.def("double_factorial", [](long n) { return to_py(combinum::double_factorial(n)); }, py::arg("n"));
  m.def("binomial", [](long n, long k) { return to_py(combinum::binomial(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("stirling2", [](long n, long k) { return to_py(combinum::stirling2(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("assoc_stirling1", [](long n, long k) { return to_py(combinum::assoc_stirling1(n, k)); }, py::arg("n"),
        py::arg("k"), "Derangements of [n] with k cycles.");
  m.def("h_value", [](long mm, long k) { return to_py(combinum::h_value(mm, k)); }, py::arg("m"), py::arg("k"),
        "Sum over compositions of m into k parts of prod 1/(j_i + 1), as a Fraction.");

  m.def("e_closed", [](int n, int k) { return to_py(counts::e_closed(n, k)); }, py::arg("n"), py::arg("k"));
  m.def("c_closed", [](int n, int l) { return to_py(counts::c_closed(n, l)); }, py::arg("n"), py::arg("l"));
  m.def("g_closed", [](int n, int l) { return to_py(counts::g_closed(n, l)); }, py::arg("n"), py::arg("l"));
  m.def("e_special", [](int n, int k, int r) { return to_py(counts::e_special(n, k, r)); }, py::arg("n"),
        py::arg("k"), py::arg("r"));
  m.def("e_from_c", [](int max_n) { return rows_to_py(counts::e_from_c(max_n).rows); }, py::arg("max_n"),
        "E rows 1..max_n computed from the C table.");

  m.def("first_row", [](const std::string& family) { return counts::first_row(counts::parse_family(family)); },
        py::arg("family"));
  m.def(
      "table",
      [](const std::string& family, int max_n, std::optional<int> order) {
        return rows_to_py(table_for(family, max_n, order).rows);
      },
      py::arg("family"), py::arg("max_n"), py::arg("order") = py::none(),
      "Rows first_row(family)..max_n of the count triangle; row n has n + 1 entries.");
  m.def(
      "render_table",
      [](const std::string& family, int max_n, const std::string& format) {
        const auto t = table_for(family, max_n, std::nullopt);
        return io::render(t, io::parse_format(format), io::default_flattening(t.family));
      },
      py::arg("family"), py::arg("max_n"), py::arg("format") = "csv");
  m.def(
      "parse_bfile",
      [](const std::string& text) {
        py::list out;
        for (const auto& e : io::parse_bfile(text)) out.append(py::make_tuple(e.index, to_py(e.value)));
        return out;
      },
      py::arg("text"));

  m.def(
      "oracle_counts",
      [](int max_n) {
        const auto catalog = oracle::build_catalog(max_n, {oracle::kHardMaxN, true});
        std::vector<std::vector<BigInt>> c, e, a, s;
        for (int n = 1; n <= max_n; ++n) {
          c.push_back(oracle::connected_counts(catalog, n, false));
          e.push_back(oracle::connected_counts(catalog, n, true));
          const auto q = oracle::quasi_counts(catalog, n);
          a.push_back(q.all);
          s.push_back(q.simple);
        }
        py::dict out;
        out["C"] = rows_to_py(c);
        out["E"] = rows_to_py(e);
        out["A"] = rows_to_py(a);
        out["S"] = rows_to_py(s);
        return out;
      },
      py::arg("max_n"), "Brute-force rows n = 1..max_n for C, E, A and S.");

  m.def(
      "verify",
      [](int order) {
        verify::Config config;
        config.order = order;
        const auto report = verify::run_verify(config);
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["identity"] = c.identity;
          d["range"] = c.range;
          d["status"] = std::string(verify::status_name(c.status));
          d["detail"] = c.detail;
          checks.append(d);
        }
        return checks;
      },
      py::arg("order") = 12, "Run every identity suite; returns one dict per check.");
}
