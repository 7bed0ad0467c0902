#include "ffr/closure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace ffr {

std::vector<Rule> rules_for(Variety v) {
  switch (v) {
    case Variety::ffr:
      return {Rule::T1, Rule::T2, Rule::T3};
    case Variety::ffr_s:
      return {Rule::T1, Rule::T2, Rule::T3, Rule::T4};
    case Variety::ffr_p:
      throw std::invalid_argument("the perfect variety has no closure rules");
  }
  return {};
}

std::string variety_name(Variety v) {
  switch (v) {
    case Variety::ffr:
      return "ffr";
    case Variety::ffr_s:
      return "ffrs";
    case Variety::ffr_p:
      return "ffrp";
  }
  return "?";
}

namespace {

bool enabled(std::vector<Rule> const& rules, Rule r) {
  return std::find(rules.begin(), rules.end(), r) != rules.end();
}

struct BarIndex {
  std::unordered_map<Word, std::vector<Word>> out;  // bar edges by source
  std::unordered_set<Word> looped;                  // bar-lambda loops

  explicit BarIndex(Graph const& g) {
    for (Edge const& e : g.edges()) {
      if (e.kind == LabelKind::bar) {
        out[e.src].push_back(e.dst);
        if (e.is_loop()) {
          looped.insert(e.src);
        }
      }
    }
  }
};

void require_closable(Graph const& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument("closure is undefined on edgeless graphs");
  }
  if (!is_accessible(g)) {
    throw std::invalid_argument("closure requires an accessible graph");
  }
}

}  // namespace

std::unordered_set<Edge> applicable_edges(Graph const& g,
                                          std::vector<Rule> const& rules) {
  std::unordered_set<Edge> result;
  BarIndex bars(g);
  auto propose = [&](Word src, Word dst) {
    Edge e(src, dst, LabelKind::bar);
    if (!g.has_edge(e)) {
      result.insert(e);
    }
  };

  if (enabled(rules, Rule::T1)) {
    for (auto const& [v, _] : bars.out) {
      if (!bars.looped.count(v)) {
        propose(v, v);
      }
    }
  }
  if (enabled(rules, Rule::T2)) {
    for (Edge const& e : g.edges()) {
      if (e.kind == LabelKind::plain) {
        propose(e.src, e.dst);
      }
    }
  }
  if (enabled(rules, Rule::T3)) {
    for (auto const& [w, mids] : bars.out) {
      for (Word mid : mids) {
        auto it = bars.out.find(mid);
        if (it == bars.out.end()) {
          continue;
        }
        for (Word end : it->second) {
          propose(w, end);
        }
      }
    }
  }
  if (enabled(rules, Rule::T4)) {
    for (auto const& [w, dsts] : bars.out) {
      for (Word a : dsts) {
        // The two premise edges may coincide (v = lambda), yielding a loop
        // at the target.
        if (a != w) {
          propose(a, a);
        }
        for (Word b : dsts) {
          if (a != b && a.is_prefix_of(b)) {
            propose(a, b);
          }
        }
      }
    }
  }
  return result;
}

Graph close(Graph const& g, Variety variety) {
  require_closable(g);
  Graph out = g;

  if (variety == Variety::ffr) {
    // Seed: existing bar edges plus one bar edge per plain edge (T2), then
    // transitive closure (T3) and loops at bar-sources (T1).
    std::unordered_map<Word, std::vector<Word>> adj;
    for (Edge const& e : g.edges()) {
      adj[e.src].push_back(e.dst);  // T2 makes the plain/bar split irrelevant
    }
    for (auto const& [u, _] : adj) {
      // DFS over the seeded relation.
      std::unordered_set<Word> seen;
      std::vector<Word> stack{u};
      while (!stack.empty()) {
        Word v = stack.back();
        stack.pop_back();
        auto it = adj.find(v);
        if (it == adj.end()) {
          continue;
        }
        for (Word w : it->second) {
          if (seen.insert(w).second) {
            stack.push_back(w);
          }
        }
      }
      for (Word w : seen) {
        out.add_edge(Edge(u, w, LabelKind::bar));
      }
      out.add_edge(Edge(u, u, LabelKind::bar));
    }
    return out;
  }

  if (variety == Variety::ffr_s) {
    // All (proper prefix, extension) vertex pairs carry a bar edge, and a
    // bar-lambda loop sits at every vertex (T4 applied with coinciding
    // premise edges puts a loop at every bar-edge target; T1 at every
    // source; accessibility leaves no vertex untouched).
    for (Word v : g.vertices()) {
      std::vector<Generator> letters = v.letters();
      Word u;  // runs over the proper prefixes of v
      for (Generator letter : letters) {
        if (g.has_vertex(u)) {
          out.add_edge(Edge(u, v, LabelKind::bar));
        }
        u = u.append(letter);
      }
      out.add_edge(Edge(v, v, LabelKind::bar));
    }
    return out;
  }

  throw std::invalid_argument("close: variety must be ffr or ffr_s");
}

Graph close_worklist(Graph const& g, Variety variety, std::uint64_t seed) {
  require_closable(g);
  std::vector<Rule> rules = rules_for(variety);
  std::mt19937_64 rng(seed);
  Graph out = g;
  while (true) {
    auto apps = applicable_edges(out, rules);
    if (apps.empty()) {
      return out;
    }
    std::vector<Edge> choices(apps.begin(), apps.end());
    std::sort(choices.begin(), choices.end(), [](Edge const& a, Edge const& b) {
      if (a.src != b.src) return a.src < b.src;
      if (a.dst != b.dst) return a.dst < b.dst;
      return a.kind < b.kind;
    });
    out.add_edge(choices[rng() % choices.size()]);
  }
}

bool is_closed(Graph const& g, Variety variety) {
  return applicable_edges(g, rules_for(variety)).empty();
}

Graph x_reduct(Graph const& g) {
  Graph out;
  for (Edge const& e : g.edges()) {
    if (e.kind == LabelKind::plain) {
      out.add_edge(e);
    }
  }
  return out;
}

}  // namespace ffr
