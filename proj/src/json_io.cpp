#include "tropmod/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropmod {

using nlohmann::json;

json weight_vector_to_json(const WeightVector& w) {
  json out = json::array();
  for (const Rational& r : w.weights())
    out.push_back(json{{"num", r.numerator()}, {"den", r.denominator()}});
  return out;
}

WeightVector weight_vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("weight vector json must be an array");
  std::vector<Rational> out;
  for (const json& entry : j)
    out.emplace_back(entry.at("num").get<std::int64_t>(), entry.at("den").get<std::int64_t>());
  return WeightVector(std::move(out));
}

json graph_to_json(const MarkedGraph& g, int genus, bool with_labels) {
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
  json out{{"genus", genus},
           {"vertex_genera", g.genus},
           {"edges", edges},
           {"markings", g.markings}};
  if (with_labels) {
    std::vector<int> labels(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) labels[e] = e;
    out["labels"] = labels;
  }
  return out;
}

MarkedGraph graph_from_json(const json& j) {
  MarkedGraph g;
  g.genus = j.at("vertex_genera").get<std::vector<int>>();
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: each edge needs two endpoints");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  g.markings = j.at("markings").get<std::vector<int>>();
  int nv = g.num_vertices();
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= nv || v >= nv)
      throw std::invalid_argument("graph json: edge endpoint out of range");
  for (int m : g.markings)
    if (m < 0 || m >= nv) throw std::invalid_argument("graph json: marking out of range");
  for (int h : g.genus)
    if (h < 0) throw std::invalid_argument("graph json: negative vertex genus");
  if (j.contains("labels")) {
    auto labels = j.at("labels").get<std::vector<int>>();
    if (labels.size() != g.edges.size())
      throw std::invalid_argument("graph json: label count differs from edge count");
    std::vector<std::pair<int, int>> by_label(g.edges.size(), {-1, -1});
    std::vector<bool> used(g.edges.size(), false);
    for (std::size_t e = 0; e < labels.size(); ++e) {
      int l = labels[e];
      if (l < 0 || l >= static_cast<int>(labels.size()) || used[l])
        throw std::invalid_argument("graph json: labels must be a bijection onto 0..p");
      used[l] = true;
      by_label[l] = g.edges[e];
    }
    g.edges = std::move(by_label);
  }
  if (j.contains("genus")) {
    int declared = j.at("genus").get<int>();
    if (g.is_connected() && total_genus(g) != declared)
      throw std::invalid_argument("graph json: declared genus does not match the graph");
  }
  return g;
}

json complex_to_json(const DeltaComplex& X) {
  json dims = json::array();
  for (int p = 0; p <= X.dimension(); ++p) {
    json classes = json::array();
    for (const SimplexClass& cls : X.classes[p])
      classes.push_back(graph_to_json(cls.rep.graph, X.g, true));
    json dim{{"p", p}, {"classes", classes}};
    if (p >= 1) {
      dim["faces"] = X.faces[p];
      dim["generators"] = X.gens[p];
    }
    dims.push_back(std::move(dim));
  }
  return json{{"g", X.g}, {"weights", weight_vector_to_json(X.w)}, {"dimensions", dims}};
}

std::string graph_to_dot(const MarkedGraph& g, bool labelled) {
  std::string out = "graph {\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::string marks;
    for (int m : g.markings_at(v)) {
      if (!marks.empty()) marks += ",";
      marks += std::to_string(m + 1);
    }
    out += "  v" + std::to_string(v) + " [label=\"h=" + std::to_string(g.genus[v]) + "; {" +
           marks + "}\"];\n";
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edges[e];
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v);
    if (labelled) out += " [label=\"" + std::to_string(e) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string skeleton_to_dot(const SkeletonGraph& skel) {
  std::string out = "graph {\n";
  for (std::size_t v = 0; v < skel.vertex_labels.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + skel.vertex_labels[v] + "\"];\n";
  for (auto [u, v] : skel.edges)
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace tropmod
