#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kdiv/divider.hpp"
#include "kdiv/errors.hpp"
#include "kdiv/evenhole.hpp"
#include "kdiv/formats.hpp"
#include "kdiv/generators.hpp"
#include "kdiv/oracles.hpp"
#include "kdiv/ramsey.hpp"
#include "kdiv/simplicial.hpp"

namespace py = pybind11;
using namespace kdiv;

namespace {

py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<Vertex> as_list(const VertexSet& s) { return s.to_vector(); }

std::vector<std::vector<Vertex>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.to_vector());
  return out;
}

py::dict order_dict(const EliminationResult& r, const Graph& g) {
  py::dict d;
  d["found"] = r.order.has_value();
  if (r.order) {
    py::list steps;
    for (const auto& s : r.order->steps) steps.append(py::make_tuple(s.vertex, as_lists(s.cover)));
    d["steps"] = steps;
  } else {
    d["residual"] = as_list(r.residual);
    d["residual_graph6"] = encode_graph6(induced_subgraph(g, r.residual).graph);
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_kdiv, m) {
  m.doc() = "k-simplicial elimination orders, divisions and exact small-graph oracles";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<CapExceeded>(m, "CapExceeded", base);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", base);
  py::register_exception<OrderNotFound>(m, "OrderNotFound", base);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n") = 0)
      .def_static(
          "from_edges",
          [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edge_list(n, edges); },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, Vertex v) { return as_list(neighborhood(g, v)); })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("encode_graph6", &encode_graph6);

  auto gen = m.def_submodule("gen", "Fixture graphs");
  gen.def("complete", &gen::complete);
  gen.def("empty", &gen::empty);
  gen.def("path", &gen::path);
  gen.def("cycle", &gen::cycle);
  gen.def("petersen", &gen::petersen);
  gen.def("paley", &gen::paley);
  gen.def("rook", &gen::rook);

  m.def("clique_number", [](const Graph& g) { return max_clique(g).size; });
  m.def("max_clique", [](const Graph& g) { return as_list(max_clique(g).witness); });
  m.def("independence_number", [](const Graph& g) { return max_independent_set(g).size; });
  m.def(
      "chromatic_number",
      [](const Graph& g, std::size_t cap) {
        const auto r = chromatic_number(g, cap);
        return py::make_tuple(r.chi, r.colors);
      },
      py::arg("g"), py::arg("cap") = OracleCaps{}.chromatic, "(chi, colouring)");
  m.def(
      "is_perfect", [](const Graph& g, std::size_t cap) { return is_perfect(g, cap).perfect; }, py::arg("g"),
      py::arg("cap") = OracleCaps{}.perfect);
  m.def(
      "is_perfectly_divisible",
      [](const Graph& g, std::size_t cap) {
        const auto r = is_perfectly_divisible(g, cap);
        py::dict d;
        d["divisible"] = r.divisible;
        d["A"] = r.a ? py::cast(as_list(*r.a)) : py::none();
        d["B"] = r.b ? py::cast(as_list(*r.b)) : py::none();
        d["failing"] = r.failing ? py::cast(as_list(*r.failing)) : py::none();
        return d;
      },
      py::arg("g"), py::arg("cap") = OracleCaps{}.perfectly_divisible);
  m.def(
      "is_k_divisible",
      [](const Graph& g, std::size_t k, std::size_t cap) {
        const auto r = is_k_divisible(g, k, cap);
        py::dict d;
        d["divisible"] = r.divisible;
        d["partition"] = r.partition;
        d["failing"] = r.failing ? py::cast(as_list(*r.failing)) : py::none();
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("cap") = OracleCaps{}.k_divisible);

  m.def(
      "shortest_even_hole",
      [](const Graph& g, std::size_t cap) -> py::object {
        const auto hole = shortest_even_hole(g, cap);
        return hole ? py::cast(hole->cycle) : py::none();
      },
      py::arg("g"), py::arg("cap") = default_even_hole_cap);
  m.def(
      "is_even_hole_free", [](const Graph& g, std::size_t cap) { return is_even_hole_free(g, cap); }, py::arg("g"),
      py::arg("cap") = default_even_hole_cap);

  m.def(
      "find_k_simplicial",
      [](const Graph& g, std::size_t k) -> py::object {
        const auto w = find_k_simplicial(g, k);
        if (!w) return py::none();
        return py::make_tuple(w->vertex, as_lists(w->cover));
      },
      py::arg("g"), py::arg("k"));
  m.def(
      "elimination_order", [](const Graph& g, std::size_t k) { return order_dict(elimination_order(g, k), g); },
      py::arg("g"), py::arg("k"));

  m.def(
      "divide",
      [](const Graph& g, std::size_t k) {
        auto r = elimination_order(g, k);
        if (!r) {
          throw OrderNotFound("no k-simplicial elimination order", r.residual,
                              encode_graph6(induced_subgraph(g, r.residual).graph));
        }
        const auto outcome = divide(g, k, *r.order);
        if (const auto check = verify_division(g, outcome.division); !check)
          throw TheoremViolation(check.diagnostic, outcome.trace);
        return from_json(division_certificate(g, outcome));
      },
      py::arg("g"), py::arg("k"), "Verified division certificate as a dict.");
  m.def(
      "color_by_division",
      [](const Graph& g, std::size_t k) {
        const auto c = color_by_division(g, k);
        py::dict d;
        d["colors_used"] = c.colors_used;
        d["colors"] = c.colors;
        d["omega"] = c.omega;
        d["bound"] = c.bound;
        return d;
      },
      py::arg("g"), py::arg("k"));

  m.def(
      "verify_counterexample",
      [](const Graph& h, std::size_t t, std::size_t cap) { return from_json(to_json(verify_counterexample(h, t, cap))); },
      py::arg("h"), py::arg("t"), py::arg("cap") = default_ramsey_cap);
  m.def(
      "search_k4_free",
      [](std::size_t n, std::size_t alpha_target, std::uint64_t budget, std::uint64_t seed) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = search_k4_free(n, alpha_target, budget, seed);
        }
        py::dict d;
        d["graph"] = r.graph;
        d["violations"] = r.violations;
        d["steps"] = r.steps;
        d["report"] = from_json(to_json(r.report));
        return d;
      },
      py::arg("n"), py::arg("alpha_target"), py::arg("budget"), py::arg("seed"));
  m.def(
      "required_t_scan",
      [](double c, std::size_t t_max) {
        py::list rows;
        for (const auto& row : required_t_scan(c, t_max))
          rows.append(py::make_tuple(row.t, row.lhs, row.rhs, row.satisfied));
        return rows;
      },
      py::arg("c"), py::arg("t_max"), "(t, lhs, rhs, satisfied) rows, natural log.");
}
