#include "ffr/cayley.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace ffr {

std::string EdgeLabel::str() const {
  if (kind == LabelKind::plain) {
    return word.str();
  }
  return "~" + word.str();
}

Edge::Edge(Word src, Word dst, LabelKind kind) : src(src), dst(dst), kind(kind) {
  auto r = src.residual_in(dst);
  if (!r) {
    throw GraphError("edge source '" + src.str() + "' is not a prefix of target '" +
                     dst.str() + "'");
  }
  if (kind == LabelKind::plain && r->length() != 1) {
    throw GraphError("plain edge from '" + src.str() + "' to '" + dst.str() +
                     "' must advance by one generator");
  }
}

Edge::Edge(Word src, EdgeLabel const& label)
    : Edge(src, src.concat(label.word), label.kind) {}

EdgeLabel Edge::label() const {
  Word w = residual(src, dst);
  if (kind == LabelKind::plain) {
    return EdgeLabel::plain(w.last());
  }
  return EdgeLabel::bar(w);
}

void Graph::add_edge(Edge const& e) {
  vertices_.insert(e.src);
  vertices_.insert(e.dst);
  edges_.insert(e);
}

bool Graph::contains(Graph const& other) const {
  for (Word v : other.vertices_) {
    if (!has_vertex(v)) {
      return false;
    }
  }
  for (Edge const& e : other.edges_) {
    if (!has_edge(e)) {
      return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> Graph::canonical_key() const {
  std::vector<std::uint64_t> key;
  key.reserve(vertices_.size() + edges_.size() + 1);
  for (Word v : vertices_) {
    key.push_back(static_cast<std::uint64_t>(v.node()));
  }
  std::sort(key.begin(), key.end());
  key.push_back(~std::uint64_t{0});  // separator
  std::vector<std::uint64_t> es;
  es.reserve(edges_.size());
  for (Edge const& e : edges_) {
    es.push_back((static_cast<std::uint64_t>(e.src.node()) << 33) |
                 (static_cast<std::uint64_t>(e.dst.node()) << 1) |
                 static_cast<std::uint64_t>(e.kind));
  }
  std::sort(es.begin(), es.end());
  key.insert(key.end(), es.begin(), es.end());
  return key;
}

bool operator==(PointedGraph const& a, PointedGraph const& b) {
  return a.point == b.point && a.graph == b.graph;
}

Graph graph_union(Graph const& g, Graph const& h) {
  Graph out = g;
  for (Word v : h.vertices()) {
    out.add_vertex(v);
  }
  for (Edge const& e : h.edges()) {
    out.add_edge(e);
  }
  return out;
}

Graph translate(Word s, Graph const& g) {
  if (s.empty()) {
    return g;
  }
  Graph out;
  std::unordered_map<Word, Word> shifted;
  shifted.reserve(g.vertex_count());
  for (Word v : g.vertices()) {
    shifted.emplace(v, s.concat(v));
  }
  for (auto const& [v, sv] : shifted) {
    out.add_vertex(sv);
  }
  for (Edge const& e : g.edges()) {
    out.add_edge(Edge(shifted.at(e.src), shifted.at(e.dst), e.kind));
  }
  return out;
}

bool is_accessible(Graph const& g) {
  if (!g.has_vertex(Word())) {
    return false;
  }
  std::unordered_map<Word, std::vector<Word>> out;
  for (Edge const& e : g.edges()) {
    out[e.src].push_back(e.dst);
  }
  std::unordered_set<Word> seen{Word()};
  std::deque<Word> queue{Word()};
  while (!queue.empty()) {
    Word v = queue.front();
    queue.pop_front();
    auto it = out.find(v);
    if (it == out.end()) {
      continue;
    }
    for (Word w : it->second) {
      if (seen.insert(w).second) {
        queue.push_back(w);
      }
    }
  }
  return seen.size() == g.vertex_count();
}

PointedGraph gamma_plain(Generator x) {
  Graph g;
  Word w = Word::of(x);
  g.add_edge(Edge(Word(), w, LabelKind::plain));
  return {g, w};
}

PointedGraph gamma_bar(Word w) {
  Graph g;
  g.add_edge(Edge(Word(), w, LabelKind::bar));
  return {g, w};
}

PointedGraph gould_multiply(PointedGraph const& a, PointedGraph const& b) {
  return {graph_union(a.graph, translate(a.point, b.graph)),
          a.point.concat(b.point)};
}

PointedGraph gould_plus(PointedGraph const& a) { return {a.graph, Word()}; }

}  // namespace ffr
