#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkless/constructions.hpp"
#include "linkless/embedding.hpp"
#include "linkless/minor.hpp"
#include "linkless/text_format.hpp"
#include "linkless/verify.hpp"

namespace py = pybind11;
using namespace linkless;

namespace {

std::vector<std::string> names(const Graph& g, VertexSet s) {
  std::vector<std::string> out;
  for (int v : s.members()) out.push_back(g.label(v));
  return out;
}

std::pair<std::string, std::string> edge_labels(const Graph& g, Edge e) { return {g.label(e.first), g.label(e.second)}; }

py::object model_or_none(const Graph& host, const std::optional<MinorModel>& model) {
  if (!model) return py::none();
  py::list out;
  for (const auto& s : model->branch_sets) out.append(names(host, s));
  return out;
}

py::dict count_dict(const CountReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["m"] = r.m;
  d["at_least_2n"] = r.at_least_2n;
  d["within_14_5"] = r.within_14_5;
  d["within_mader"] = r.within_mader;
  d["versus_3n_minus_3"] = r.versus_3n_minus_3;
  return d;
}

ForbiddenPattern pattern_of(const std::string& name) {
  if (name == "k6") return ForbiddenPattern::k6;
  if (name == "petersen") return ForbiddenPattern::petersen_family;
  throw py::value_error("pattern must be 'k6' or 'petersen'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph minors, certificates and linking numbers for small graphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", m.attr("GraphError"));

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::vector<std::string> labels, const std::vector<LabelEdge>& edges) {
             return Graph::from_edges(std::move(labels), edges);
           }),
           py::arg("labels"), py::arg("edges") = std::vector<LabelEdge>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (Edge e : g.edges()) out.push_back(edge_labels(g, e));
        return out;
      })
      .def("non_edges", [](const Graph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        for (Edge e : g.non_edges()) out.push_back(edge_labels(g, e));
        return out;
      })
      .def("degree", [](const Graph& g, const std::string& v) { return degree(g, g.index(v)); })
      .def("neighbors", [](const Graph& g, const std::string& v) { return names(g, VertexSet(g.neighbors(g.index(v)))); })
      .def("add_edge", [](const Graph& g, const std::string& u, const std::string& v) { return add_edge(g, u, v); })
      .def("to_text", &write_graph)
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("complete_graph", [](int n) { return complete_graph(n); });
  m.def("petersen_graph", &petersen_graph);
  m.def("build_g", &build_g);
  m.def("build_family", [](int k) { return build_family(k).graph; }, py::arg("k"));
  m.def("apex_stacked", [](int n) { return apex(stacked_triangulation(n)); }, py::arg("n"));
  m.def("petersen_family", &petersen_family);
  m.def("isomorphic", &isomorphic);
  m.def("count_report", [](const Graph& g) { return count_dict(count_report(g)); });

  m.def(
      "find_minor",
      [](const Graph& pattern, const Graph& host) {
        std::optional<MinorModel> model;
        {
          py::gil_scoped_release release;
          model = find_minor(pattern, host);
        }
        return model_or_none(host, model);
      },
      py::arg("pattern"), py::arg("host"), "Branch sets as label lists, or None when no minor exists");
  m.def("has_k6_minor", [](const Graph& g) {
    std::optional<MinorModel> model;
    {
      py::gil_scoped_release release;
      model = has_k6_minor(g);
    }
    return model_or_none(g, model);
  });
  m.def("is_intrinsically_linked", [](const Graph& g) -> py::object {
    std::optional<LinkedWitness> w;
    {
      py::gil_scoped_release release;
      w = is_intrinsically_linked(g);
    }
    if (!w) return py::none();
    py::dict d;
    d["family_index"] = w->family_index;
    d["branch_sets"] = model_or_none(g, w->model);
    return d;
  });

  m.def(
      "verify_maximal",
      [](const Graph& g, const std::string& pattern, int jobs) {
        const auto kind = pattern_of(pattern);
        MaximalityResult r;
        {
          py::gil_scoped_release release;
          r = verify_maximal(g, kind, jobs);
        }
        py::dict d;
        d["passed"] = r.passed();
        d["base_free"] = r.base_free;
        d["found"] = r.found_count();
        d["edges"] = r.edges.size();
        py::list missing;
        for (const auto& e : r.edges)
          if (!e.found || !e.model_valid) missing.append(edge_labels(g, e.edge));
        d["missing"] = missing;
        return d;
      },
      py::arg("graph"), py::arg("pattern") = "k6", py::arg("jobs") = 1);

  m.def("verify_certificates", [](const Graph& g, const std::string& text) {
    const auto certs = parse_certificates(text, g);
    const Permutation p = g.labels() == g_labels() ? sigma() : Permutation::identity(g.order());
    const auto table = non_edge_orbits(g, p);
    const auto r = coverage_check(g, certs, table);
    py::dict d;
    py::list verified;
    for (const auto& c : r.certificates) verified.append(c.verified);
    d["verified"] = verified;
    py::dict coverage;
    for (const auto& [rep, cases] : r.coverage) coverage[py::str(edge_name(g, rep))] = std::vector<int>(cases.begin(), cases.end());
    d["coverage"] = coverage;
    d["complete"] = r.complete();
    return d;
  });
  m.def("reference_certificates_text", [] { return write_certificates(build_g(), reference_certificates()); });

  m.def("canonical_embedding_g", [] {
    std::vector<std::array<std::int64_t, 3>> out;
    for (const auto& p : canonical_embedding_g().coords) out.push_back({p.x, p.y, p.z});
    return out;
  });
  m.def(
      "linkless_report",
      [](const Graph& g, const std::vector<std::array<std::int64_t, 3>>& coords, int jobs) {
        Embedding3 e;
        for (const auto& c : coords) e.coords.push_back({c[0], c[1], c[2]});
        LinklessReport r;
        {
          py::gil_scoped_release release;
          r = linkless_report(g, e, jobs);
        }
        py::dict d;
        d["cycles"] = r.cycle_count;
        d["pairs"] = r.pair_count;
        d["max_abs_lk"] = r.max_abs_lk;
        d["histogram"] = r.histogram;
        return d;
      },
      py::arg("graph"), py::arg("coords"), py::arg("jobs") = 1);
  m.def("validate_embedding", [](const Graph& g, const std::vector<std::array<std::int64_t, 3>>& coords) {
    Embedding3 e;
    for (const auto& c : coords) e.coords.push_back({c[0], c[1], c[2]});
    return validate_embedding(g, e);
  });
}
