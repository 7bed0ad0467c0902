#include "ffr/semigroup.hpp"

#include <stdexcept>

namespace ffr {

namespace {
EdgeLabel no_label() { return EdgeLabel::bar(Word()); }
}  // namespace

ExtTermPtr ExtTerm::letter(EdgeLabel label) {
  return ExtTermPtr(new ExtTerm(ExtKind::letter, label, nullptr, nullptr));
}

ExtTermPtr ExtTerm::identity() {
  return ExtTermPtr(new ExtTerm(ExtKind::identity, no_label(), nullptr, nullptr));
}

ExtTermPtr ExtTerm::prod(ExtTermPtr left, ExtTermPtr right) {
  return ExtTermPtr(
      new ExtTerm(ExtKind::prod, no_label(), std::move(left), std::move(right)));
}

ExtTermPtr ExtTerm::plus(ExtTermPtr arg) {
  return ExtTermPtr(new ExtTerm(ExtKind::plus, no_label(), std::move(arg), nullptr));
}

ExtTermPtr to_extended(TermPtr const& t, Variety variety) {
  switch (t->kind()) {
    case TermKind::gen:
      return ExtTerm::letter(EdgeLabel::plain(t->generator()));
    case TermKind::lambda:
      if (variety == Variety::ffr_p) {
        return ExtTerm::identity();
      }
      return ExtTerm::letter(EdgeLabel::bar(Word()));
    case TermKind::prod:
      return ExtTerm::prod(to_extended(t->left(), variety),
                           to_extended(t->right(), variety));
    case TermKind::plus:
      return ExtTerm::plus(to_extended(t->arg(), variety));
    case TermKind::max: {
      Word w = sigma_value(t->arg());
      if (variety != Variety::ffr_p) {
        return ExtTerm::letter(EdgeLabel::bar(w));
      }
      // Perfect case: bar letters exist only for single generators.
      auto letters = w.letters();
      if (letters.empty()) {
        return ExtTerm::identity();
      }
      ExtTermPtr e = ExtTerm::letter(EdgeLabel::bar(Word::of(letters[0])));
      for (std::size_t i = 1; i < letters.size(); ++i) {
        e = ExtTerm::prod(e, ExtTerm::letter(EdgeLabel::bar(Word::of(letters[i]))));
      }
      return e;
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// Evaluates e left to right with the accumulated prefix, so no graph ever
// needs translating afterwards.  Returns the end point of the walk.
Word eval_into(ExtTermPtr const& e, Word prefix, Graph& g, Variety variety) {
  switch (e->kind()) {
    case ExtKind::letter: {
      Word end = prefix.concat(e->label().word);
      g.add_edge(Edge(prefix, end, e->label().kind));
      return end;
    }
    case ExtKind::identity:
      if (variety != Variety::ffr_p) {
        throw std::invalid_argument(
            "the identity term has no value outside the perfect variety");
      }
      return prefix;
    case ExtKind::prod: {
      Word mid = eval_into(e->left(), prefix, g, variety);
      return eval_into(e->right(), mid, g, variety);
    }
    case ExtKind::plus:
      eval_into(e->arg(), prefix, g, variety);
      return prefix;
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PointedGraph eval_raw(ExtTermPtr const& e, Variety variety) {
  Graph g;
  g.add_vertex(Word());
  Word point = eval_into(e, Word(), g, variety);
  return {g, point};
}

bool operator==(Element const& a, Element const& b) {
  return a.variety == b.variety && a.point == b.point && a.graph == b.graph;
}

bool operator!=(Element const& a, Element const& b) { return !(a == b); }

namespace {

Element canonicalize(PointedGraph const& raw, Variety variety) {
  if (variety == Variety::ffr_p) {
    return {variety, x_reduct(raw.graph), raw.point};
  }
  return {variety, close(raw.graph, variety), raw.point};
}

void require_same_variety(Element const& a, Element const& b) {
  if (a.variety != b.variety) {
    throw std::invalid_argument("elements of different varieties");
  }
}

}  // namespace

Element eval(TermPtr const& t, Variety variety) {
  return canonicalize(eval_raw(to_extended(t, variety), variety), variety);
}

Element multiply(Element const& a, Element const& b) {
  require_same_variety(a, b);
  Graph g = graph_union(a.graph, translate(a.point, b.graph));
  Word point = a.point.concat(b.point);
  if (a.variety == Variety::ffr_p) {
    return {a.variety, g, point};  // a union of reducts is a reduct
  }
  return {a.variety, close(g, a.variety), point};
}

Element plus(Element const& a) { return {a.variety, a.graph, Word()}; }

Element mx(Element const& a) {
  if (a.variety == Variety::ffr_p) {
    return {a.variety, Graph(), a.point};
  }
  return {a.variety, close(gamma_bar(a.point).graph, a.variety), a.point};
}

Element lambda_element(Variety variety) {
  if (variety == Variety::ffr_p) {
    return {variety, Graph(), Word()};
  }
  return {variety, gamma_bar(Word()).graph, Word()};
}

bool natural_leq(Element const& a, Element const& b) {
  require_same_variety(a, b);
  return a.point == b.point && a.graph.contains(b.graph);
}

bool sigma_related(Element const& a, Element const& b) {
  require_same_variety(a, b);
  return a.point == b.point;
}

bool is_projection(Element const& a) { return a.point.empty(); }

bool decide(TermPtr const& u, TermPtr const& v, Variety variety) {
  return eval(u, variety) == eval(v, variety);
}

bool decide_strong_fast(TermPtr const& u, TermPtr const& v) {
  Element a = eval(u, Variety::ffr_s);
  Element b = eval(v, Variety::ffr_s);
  if (a.point != b.point || a.graph.vertices() != b.graph.vertices()) {
    return false;
  }
  auto reduced = [](Graph const& g) {
    std::unordered_set<Edge> keep;
    for (Edge const& e : g.edges()) {
      if (e.kind == LabelKind::plain || e.is_loop()) {
        keep.insert(e);
      }
    }
    return keep;
  };
  return reduced(a.graph) == reduced(b.graph);
}

}  // namespace ffr
