// Finite labeled subgraphs of Cay(X*, X u barred-X*) and the expansion
// operations on pointed graphs: union, translation, and the product
// (A,s)(B,t) = (A u sB, st) with (A,s)^+ = (A,lambda).
//
// An edge is stored as (source, target, kind); its label is determined:
// a plain edge from u to ux is labeled by the generator x, a barred edge
// from u to uw by the word w (the loop case w = lambda included).

#ifndef FFR_CAYLEY_HPP_
#define FFR_CAYLEY_HPP_

#include <cstdint>
#include <functional>
#include <unordered_set>
#include <vector>

#include "ffr/word.hpp"

namespace ffr {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LabelKind : std::uint8_t { plain, bar };

struct EdgeLabel {
  LabelKind kind;
  Word word;  // one letter for plain labels; any word (incl. empty) for bar

  static EdgeLabel plain(Generator g) {
    return {LabelKind::plain, Word::of(g)};
  }
  static EdgeLabel bar(Word w) { return {LabelKind::bar, w}; }

  // "x" for a plain label, "~w" for a bar label ("~" alone is bar-lambda).
  std::string str() const;

  friend bool operator==(EdgeLabel const& a, EdgeLabel const& b) {
    return a.kind == b.kind && a.word == b.word;
  }
};

struct Edge {
  Word src;
  Word dst;
  LabelKind kind;

  // Validates the Cayley-graph shape: dst = src . (label word), and a plain
  // edge advances by exactly one letter.
  Edge(Word src, Word dst, LabelKind kind);
  Edge(Word src, EdgeLabel const& label);

  EdgeLabel label() const;
  bool is_loop() const { return src == dst; }

  friend bool operator==(Edge const& a, Edge const& b) {
    return a.src == b.src && a.dst == b.dst && a.kind == b.kind;
  }
};

}  // namespace ffr

template <>
struct std::hash<ffr::Edge> {
  std::size_t operator()(ffr::Edge const& e) const noexcept {
    std::uint64_t k = (static_cast<std::uint64_t>(e.src.node()) << 33) ^
                      (static_cast<std::uint64_t>(e.dst.node()) << 1) ^
                      static_cast<std::uint64_t>(e.kind);
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

namespace ffr {

class Graph {
 public:
  Graph() = default;

  void add_vertex(Word v) { vertices_.insert(v); }
  // Inserts the edge together with its endpoints.
  void add_edge(Edge const& e);
  void remove_edge(Edge const& e) { edges_.erase(e); }
  void remove_vertex(Word v) { vertices_.erase(v); }

  bool has_vertex(Word v) const { return vertices_.count(v) != 0; }
  bool has_edge(Edge const& e) const { return edges_.count(e) != 0; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertices_.empty() && edges_.empty(); }

  std::unordered_set<Word> const& vertices() const { return vertices_; }
  std::unordered_set<Edge> const& edges() const { return edges_; }

  // Set inclusion on both vertices and edges.
  bool contains(Graph const& other) const;

  // Deterministic within one process; used for hashing visited states.
  std::vector<std::uint64_t> canonical_key() const;

  friend bool operator==(Graph const& a, Graph const& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::unordered_set<Word> vertices_;
  std::unordered_set<Edge> edges_;
};

struct PointedGraph {
  Graph graph;
  Word point;
};

bool operator==(PointedGraph const& a, PointedGraph const& b);

Graph graph_union(Graph const& g, Graph const& h);
// Prefixes every vertex and edge by s.
Graph translate(Word s, Graph const& g);

// True iff the empty word is a vertex and every vertex is reachable from it
// along directed edges.
bool is_accessible(Graph const& g);

// ({lambda, x}, {(lambda, x, x)}) pointed at x.
PointedGraph gamma_plain(Generator x);
// ({lambda, w}, {(lambda, bar-w, w)}) pointed at w; the loop graph for the
// empty word.
PointedGraph gamma_bar(Word w);

// (A,s)(B,t) = (A u sB, st).
PointedGraph gould_multiply(PointedGraph const& a, PointedGraph const& b);
// (A,s)^+ = (A, lambda).
PointedGraph gould_plus(PointedGraph const& a);

}  // namespace ffr

#endif  // FFR_CAYLEY_HPP_
