#include "flowpoly/bounds.hpp"
#include "flowpoly/canonical.hpp"
#include "flowpoly/enumerate.hpp"
#include "flowpoly/errors.hpp"
#include "flowpoly/families.hpp"
#include "flowpoly/flow.hpp"
#include "flowpoly/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace flowpoly;

namespace {

py::object to_pyint(const BigInt& x) {
  const std::string s = x.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_pyints(std::span<const BigInt> xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_pyint(x));
  return out;
}

IntPoly from_pyints(const std::vector<py::int_>& coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (const auto& x : coeffs) c.emplace_back(std::string(py::str(static_cast<py::handle>(x))));
  return IntPoly(std::move(c));
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Multigraph make_graph(std::size_t n, const std::vector<py::tuple>& edges) {
  std::vector<Multigraph::Triple> ts;
  for (const auto& e : edges) {
    if (e.size() != 2 && e.size() != 3) throw py::value_error("edges are (u, v) or (u, v, count) tuples");
    const auto count = e.size() == 3 ? e[2].cast<std::uint32_t>() : 1u;
    ts.push_back({e[0].cast<Vertex>(), e[1].cast<Vertex>(), count});
  }
  return Multigraph(n, ts);
}

py::list triples_of(const Multigraph& g) {
  py::list out;
  for (const auto& t : g.triples()) out.append(py::make_tuple(t.u, t.v, t.count));
  return out;
}

FlowOptions options(std::size_t oracle_limit, bool cache) {
  FlowOptions o;
  o.oracle_limit = oracle_limit;
  if (!cache) o.cache = nullptr;
  return o;
}

}  // namespace

PYBIND11_MODULE(_flowpoly, m) {
  m.doc() = "Exact flow polynomials of multigraphs";

  py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
  py::register_exception<InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvalidEdge>(m, "InvalidEdge", PyExc_ValueError);
  py::register_exception<InvalidOperation>(m, "InvalidOperation", PyExc_ValueError);

  py::class_<Multigraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<py::tuple>{},
           "Multigraph on n vertices from (u, v) or (u, v, count) tuples; u == v adds loops.")
      .def_property_readonly("order", &Multigraph::order)
      .def_property_readonly("size", &Multigraph::size)
      .def("edges", &triples_of, "Parallel classes and loops as (u, v, count) tuples.")
      .def("degree", &Multigraph::degree)
      .def("loops", &Multigraph::loops)
      .def("multiplicity", &Multigraph::multiplicity)
      .def("is_connected", [](const Multigraph& g) { return is_connected(g); })
      .def("is_bridgeless", [](const Multigraph& g) { return is_bridgeless(g); })
      .def("is_cubic", [](const Multigraph& g) { return is_cubic(g); })
      .def("is_simple", [](const Multigraph& g) { return is_simple(g); })
      .def("blocks", [](const Multigraph& g) { return blocks(g); })
      .def("near_cubic_center", [](const Multigraph& g) { return near_cubic_center(g); })
      .def("canonical_key", [](const Multigraph& g) { return canonical_key(g).hex(); })
      .def("canonical_form", [](const Multigraph& g) { return canonical_form(g); })
      .def("is_isomorphic", [](const Multigraph& a, const Multigraph& b) { return is_isomorphic(a, b); })
      .def("to_text", [](const Multigraph& g) { return to_text(g); })
      .def("to_graph6", [](const Multigraph& g) { return to_graph6(g); })
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "Graph(" + std::to_string(g.order()) + ", " + py::repr(triples_of(g)).cast<std::string>() + ")";
      });

  m.def("read_graphs", [](const std::string& text) {
    std::istringstream in(text);
    return read_graphs(in);
  }, py::arg("text"), "Graphs from text-format or graph6 input.");
  m.def("from_graph6", [](const std::string& s) { return read_graph6(s); });

  m.def(
      "flow",
      [](const Multigraph& g, const std::string& method, std::size_t oracle_limit, bool cache) {
        const Method mth = parse_method(method);
        IntPoly p;
        {
          py::gil_scoped_release release;
          p = flow(g, mth, options(oracle_limit, cache)).poly;
        }
        return to_pyints(p.coeffs());
      },
      py::arg("graph"), py::arg("method") = "auto", py::arg("oracle_limit") = 20, py::arg("cache") = true,
      "Flow polynomial coefficients, constant term first (empty for the zero polynomial).");
  m.def(
      "tau",
      [](const Multigraph& g) {
        IntPoly p;
        {
          py::gil_scoped_release release;
          p = tau(g);
        }
        return to_pyints(p.coeffs());
      },
      py::arg("graph"), "(-1)^(m-n+1) F(G, -t), constant term first.");
  m.def(
      "decompose",
      [](const Multigraph& g) {
        const auto d = two_edge_cut_decomposition(g);
        return py::make_tuple(d.pieces, d.k);
      },
      py::arg("graph"), "Pieces and split count of the 2-edge-cut decomposition of a bridgeless cubic graph.");

  m.def(
      "rational_roots",
      [](const std::vector<py::int_>& coeffs) {
        const auto fraction = py::module_::import("fractions").attr("Fraction");
        py::list out;
        for (const auto& r : rational_roots(from_pyints(coeffs))) {
          const auto value = fraction(to_pyint(boost::multiprecision::numerator(r.value)),
                                      to_pyint(boost::multiprecision::denominator(r.value)));
          out.append(py::make_tuple(value, r.multiplicity));
        }
        return out;
      },
      py::arg("coefficients"), "Rational roots with multiplicities of an integer polynomial.");
  m.def(
      "real_root_count",
      [](const std::vector<py::int_>& coeffs, bool multiplicity) {
        const auto p = from_pyints(coeffs);
        return multiplicity ? real_root_count_with_multiplicity(p) : sturm_real_root_count(p);
      },
      py::arg("coefficients"), py::arg("multiplicity") = false);

  m.def(
      "enumerate_cubic",
      [](std::size_t n, bool simple, bool bridgeless, unsigned min_connectivity, std::size_t jobs) {
        EnumSpec s;
        s.n = n;
        s.allow_multiedges = !simple;
        s.require_bridgeless = bridgeless;
        s.min_edge_connectivity = min_connectivity;
        s.jobs = jobs;
        py::gil_scoped_release release;
        return enumerate_cubic(s);
      },
      py::arg("n"), py::arg("simple") = false, py::arg("bridgeless") = false, py::arg("min_connectivity") = 1,
      py::arg("jobs") = 1, "Connected cubic multigraphs on n vertices up to isomorphism, sorted by canonical key.");

  m.def("family_names", &family_names);
  m.def("family", &make_family, py::arg("name"), py::arg("n") = 0);

  m.def(
      "check",
      [](int id, const Multigraph& g, bool original) {
        const auto near = original ? NearCubicVersion::original : NearCubicVersion::improved;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = run_check(check_from_id(id), g, near);
        }
        return json_to_py(to_json(r));
      },
      py::arg("check"), py::arg("graph"), py::arg("original") = false,
      "Runs bound check 1-7 on one graph and returns the report as a dict.");
  m.def(
      "sweep",
      [](int id, const std::vector<Multigraph>& graphs, std::size_t jobs, bool original) {
        SweepOptions opts;
        opts.jobs = jobs;
        opts.near = original ? NearCubicVersion::original : NearCubicVersion::improved;
        SweepReport report;
        {
          py::gil_scoped_release release;
          report = sweep(check_from_id(id), graphs, opts);
        }
        py::list records;
        for (const auto& r : report.records) records.append(json_to_py(to_json(r)));
        return py::make_tuple(records, json_to_py(to_json(report.summary, report.check)));
      },
      py::arg("check"), py::arg("graphs"), py::arg("jobs") = 1, py::arg("original") = false,
      "Runs a check over many graphs; returns (records sorted by key, summary).");
  m.def(
      "audit",
      [](const Multigraph& g) {
        RootAudit a;
        {
          py::gil_scoped_release release;
          a = root_location_audit(g);
        }
        return json_to_py(to_json(a));
      },
      py::arg("graph"), "Root-location clauses as a list of dicts.");
}
