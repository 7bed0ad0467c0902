#include "ffr/export.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ffr {

namespace {

std::vector<Word> sorted_vertices(Graph const& g) {
  std::vector<Word> vs(g.vertices().begin(), g.vertices().end());
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<Edge> sorted_edges(Graph const& g) {
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  std::sort(es.begin(), es.end(), [](Edge const& a, Edge const& b) {
    if (a.src != b.src) return a.src < b.src;
    if (a.dst != b.dst) return a.dst < b.dst;
    return a.kind < b.kind;
  });
  return es;
}

}  // namespace

std::string to_json(Element const& e) {
  nlohmann::ordered_json j;
  j["format"] = 1;
  j["variety"] = variety_name(e.variety);
  j["point"] = e.point.str();
  auto vertices = nlohmann::ordered_json::array();
  for (Word v : sorted_vertices(e.graph)) {
    vertices.push_back(v.str());
  }
  j["vertices"] = std::move(vertices);
  auto edges = nlohmann::ordered_json::array();
  for (Edge const& edge : sorted_edges(e.graph)) {
    edges.push_back({{"src", edge.src.str()},
                     {"label", edge.label().str()},
                     {"dst", edge.dst.str()}});
  }
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

namespace {

std::string dot_name(Word w) { return w.empty() ? "λ" : w.str(); }

std::string quoted(std::string const& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_dot(Element const& e) {
  std::ostringstream out;
  out << "digraph element {\n";
  out << "  rankdir=LR;\n";
  for (Word v : sorted_vertices(e.graph)) {
    out << "  " << quoted(dot_name(v)) << " [shape="
        << (v == e.point ? "doublecircle" : "circle") << "];\n";
  }
  for (Edge const& edge : sorted_edges(e.graph)) {
    out << "  " << quoted(dot_name(edge.src)) << " -> "
        << quoted(dot_name(edge.dst)) << " [label="
        << quoted(edge.label().str());
    if (edge.kind == LabelKind::bar) {
      out << ", style=dashed";
    }
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ffr
