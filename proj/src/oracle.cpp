#include "ffr/oracle.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace ffr {

namespace {

struct KeyHash {
  std::size_t operator()(std::vector<std::uint64_t> const& key) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint64_t k : key) {
      h ^= k;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

using KeyMap = std::unordered_map<std::vector<std::uint64_t>, std::size_t, KeyHash>;

std::vector<PointedGraph> perfect_neighbors(PointedGraph const& p,
                                            std::vector<Generator> const& alphabet) {
  std::vector<PointedGraph> out;
  // Additions: a bar edge (v, ~x, vx) at any vertex.
  for (Word v : p.graph.vertices()) {
    for (Generator x : alphabet) {
      Edge e(v, v.append(x), LabelKind::bar);
      if (!p.graph.has_edge(e)) {
        Graph g = p.graph;
        g.add_edge(e);
        out.push_back({std::move(g), p.point});
      }
    }
  }
  // Removals, dropping the target vertex when it is left bare.
  for (Edge const& e : p.graph.edges()) {
    if (e.kind != LabelKind::bar) {
      continue;
    }
    Graph g = p.graph;
    g.remove_edge(e);
    bool incident = false;
    for (Edge const& f : g.edges()) {
      if (f.src == e.dst || f.dst == e.dst) {
        incident = true;
        break;
      }
    }
    if (!incident && e.dst != p.point && !e.dst.empty()) {
      g.remove_vertex(e.dst);
    }
    if (g.has_vertex(p.point) && is_accessible(g)) {
      out.push_back({std::move(g), p.point});
    }
  }
  return out;
}

}  // namespace

RelationSet relations_for(Variety variety, std::vector<Generator> alphabet) {
  return {variety, std::move(alphabet)};
}

std::vector<PointedGraph> neighbors(PointedGraph const& p, RelationSet const& rels) {
  if (rels.variety == Variety::ffr_p) {
    return perfect_neighbors(p, rels.alphabet);
  }
  std::vector<Rule> rules = rules_for(rels.variety);
  std::vector<PointedGraph> out;
  for (Edge const& e : applicable_edges(p.graph, rules)) {
    Graph g = p.graph;
    g.add_edge(e);
    out.push_back({std::move(g), p.point});
  }
  for (Edge const& e : p.graph.edges()) {
    if (e.kind != LabelKind::bar) {
      continue;  // the transformations only ever add bar edges
    }
    Graph g = p.graph;
    g.remove_edge(e);
    if (g.edge_count() == 0 || !is_accessible(g)) {
      continue;
    }
    if (applicable_edges(g, rules).count(e)) {
      out.push_back({std::move(g), p.point});
    }
  }
  return out;
}

SearchVerdict bfs_equal(PointedGraph const& u, PointedGraph const& v,
                        RelationSet const& rels, std::size_t bound,
                        std::size_t state_budget) {
  if (bound > kBoundCap) {
    throw OracleError("bfs_equal: bound exceeds cap");
  }
  if (u.point != v.point) {
    return {VerdictKind::points_differ};
  }
  if (u.graph == v.graph) {
    return {VerdictKind::equal, 0};
  }

  // In the perfect variety the move universe is infinite; restrict the
  // search to subgraphs of u union v, through which chains between
  // equivalent pairs can always be routed.
  bool restrict = rels.variety == Variety::ffr_p;
  Graph universe = restrict ? graph_union(u.graph, v.graph) : Graph();
  auto admissible = [&](PointedGraph const& q) {
    if (!restrict) {
      return true;
    }
    for (Edge const& e : q.graph.edges()) {
      if (!universe.has_edge(e)) {
        return false;
      }
    }
    return true;
  };

  KeyMap visited;
  visited.emplace(u.graph.canonical_key(), 0);
  std::deque<PointedGraph> queue{u};
  std::deque<std::size_t> depths{0};
  auto target = v.graph.canonical_key();
  while (!queue.empty()) {
    PointedGraph p = std::move(queue.front());
    std::size_t d = depths.front();
    queue.pop_front();
    depths.pop_front();
    if (d >= bound) {
      continue;
    }
    for (PointedGraph& q : neighbors(p, rels)) {
      if (!admissible(q)) {
        continue;
      }
      auto key = q.graph.canonical_key();
      if (visited.count(key)) {
        continue;
      }
      if (key == target) {
        return {VerdictKind::equal, d + 1};
      }
      if (visited.size() >= state_budget) {
        throw OracleError("bfs_equal: state budget exceeded");
      }
      visited.emplace(std::move(key), d + 1);
      queue.push_back(std::move(q));
      depths.push_back(d + 1);
    }
  }
  return {VerdictKind::not_equal_within_bound, 0, bound};
}

std::size_t calibrated_bound(TermPtr const& u, TermPtr const& v, Variety variety) {
  if (variety == Variety::ffr_p) {
    // The canonical reduct forgets the bar edges a chain must toggle, so
    // calibrate on the raw values instead.
    auto eu = eval_raw(to_extended(u, variety), variety);
    auto ev = eval_raw(to_extended(v, variety), variety);
    return eu.graph.edge_count() + ev.graph.edge_count() + 4;
  }
  return eval(u, variety).graph.edge_count() + eval(v, variety).graph.edge_count() + 4;
}

SearchVerdict oracle_decide(TermPtr const& u, TermPtr const& v,
                            RelationSet const& rels) {
  PointedGraph pu = eval_raw(to_extended(u, rels.variety), rels.variety);
  PointedGraph pv = eval_raw(to_extended(v, rels.variety), rels.variety);
  return bfs_equal(pu, pv, rels, calibrated_bound(u, v, rels.variety));
}

TermPtr random_term(std::mt19937_64& rng, std::vector<Generator> const& alphabet,
                    std::size_t target_complexity) {
  if (target_complexity <= 1) {
    std::size_t pick = rng() % (alphabet.size() + 1);
    if (pick == alphabet.size()) {
      return Term::lambda();
    }
    return Term::gen(alphabet[pick]);
  }
  std::size_t c = target_complexity;
  bool can_split = c >= 3;
  std::size_t op = rng() % (can_split ? 4 : 2);
  switch (op) {
    case 0:
      return Term::plus(random_term(rng, alphabet, c - 1));
    case 1:
      return Term::max(random_term(rng, alphabet, c - 1));
    default: {
      std::size_t left = 1 + rng() % (c - 2);
      return Term::prod(random_term(rng, alphabet, left),
                        random_term(rng, alphabet, c - 1 - left));
    }
  }
}

namespace {

struct LawChecker {
  AxiomReport& report;
  std::string witness;

  void require(bool holds, std::string const& law) {
    ++report.checks;
    if (!holds) {
      report.violations.push_back({law, witness});
    }
  }

  void observe(bool holds, std::string const& law) {
    ++report.checks;
    if (!holds) {
      report.informational.push_back({law, witness});
    }
  }
};

}  // namespace

AxiomReport check_axioms(Variety variety, std::size_t sample_size,
                         std::size_t max_complexity, std::uint64_t seed) {
  AxiomReport report;
  report.variety = variety;
  report.seed = seed;
  report.samples = sample_size;

  std::vector<Generator> alphabet{Generator("x"), Generator("y")};
  std::mt19937_64 rng(seed);
  Element lam = lambda_element(variety);
  bool strong_claimed = variety != Variety::ffr;
  bool perfect_claimed = variety == Variety::ffr_p;

  for (std::size_t i = 0; i < sample_size; ++i) {
    auto draw = [&]() {
      return random_term(rng, alphabet, 1 + rng() % max_complexity);
    };
    TermPtr tu = draw();
    TermPtr tv = draw();
    TermPtr tw = draw();
    Element a = eval(tu, variety);
    Element b = eval(tv, variety);
    Element c = eval(tw, variety);
    LawChecker check{report,
                     render(tu) + " ; " + render(tv) + " ; " + render(tw)};

    check.require(multiply(plus(a), a) == a, "x^+x=x");
    check.require(multiply(plus(a), plus(b)) == multiply(plus(b), plus(a)),
                  "x^+y^+=y^+x^+");
    check.require(plus(multiply(plus(a), b)) == multiply(plus(a), plus(b)),
                  "(x^+y)^+=x^+y^+");
    check.require(multiply(a, plus(b)) == multiply(plus(multiply(a, b)), a),
                  "xy^+=(xy)^+x");
    check.require(plus(multiply(a, b)) == plus(multiply(a, plus(b))),
                  "(xy)^+=(xy^+)^+");
    check.require(plus(multiply(multiply(a, plus(b)), c)) ==
                      multiply(plus(multiply(a, b)), plus(multiply(a, c))),
                  "(uw^+v)^+=(uw)^+(uv)^+");
    check.require(a == multiply(plus(a), mx(a)), "x=x^+m(x)");
    check.require(mx(a) == mx(multiply(plus(b), a)), "m(x)=m(y^+x)");
    check.require(natural_leq(a, mx(a)), "m(x)>=x");
    check.require(multiply(lam, a) == a, "1x=x");
    // Monotonicity of the natural order: e a <= a for a projection e.
    {
      Element s = multiply(plus(c), a);
      check.require(natural_leq(multiply(s, b), multiply(a, b)), "s<=t => su<=tu");
      check.require(natural_leq(multiply(b, s), multiply(b, a)), "s<=t => us<=ut");
      check.require(natural_leq(plus(s), plus(a)), "s<=t => s^+<=t^+");
    }
    // Properness on a sigma-related pair with forced equal projections.
    {
      Element s = multiply(plus(b), a);
      if (plus(s) == plus(a) && sigma_related(s, a)) {
        check.require(s == a, "properness");
      }
    }
    // Left ample quasi-identity.
    if (multiply(a, c) == multiply(b, c)) {
      check.require(multiply(a, plus(c)) == multiply(b, plus(c)),
                    "xz=yz -> xz^+=yz^+");
    }

    bool strong = multiply(mx(a), mx(b)) ==
                  multiply(plus(mx(a)), mx(multiply(a, b)));
    bool perfect1 = multiply(mx(a), mx(b)) == mx(multiply(a, b));
    bool perfect2 = plus(mx(a)) == lam;
    bool right_identity = multiply(a, lam) == a;
    if (strong_claimed) {
      check.require(strong, "m(s)m(t)=(m(s))^+m(st)");
    } else {
      check.observe(strong, "m(s)m(t)=(m(s))^+m(st)");
    }
    if (perfect_claimed) {
      check.require(perfect1, "m(s)m(t)=m(st)");
      check.require(perfect2, "(m(s))^+=1");
      check.require(right_identity, "x1=x");
    } else {
      check.observe(perfect1, "m(s)m(t)=m(st)");
      check.observe(perfect2, "(m(s))^+=1");
      check.observe(right_identity, "x1=x");
    }
  }

  // The canonical strong-law witness pair, so the report for the plain
  // variety always names a concrete failure.
  {
    TermPtr lhs = parse("m(x)*m(y)");
    TermPtr rhs = parse("m(x)^+*m(x*y)");
    bool eq = decide(lhs, rhs, variety);
    LawChecker check{report, render(lhs) + " ; " + render(rhs)};
    if (strong_claimed) {
      check.require(eq, "m(s)m(t)=(m(s))^+m(st)");
    } else {
      check.observe(eq, "m(s)m(t)=(m(s))^+m(st)");
    }
  }
  return report;
}

CorpusResult corpus_check(Variety variety, std::vector<Generator> const& alphabet,
                          std::size_t max_complexity, std::size_t sample_pairs,
                          std::uint64_t seed) {
  CorpusResult result;
  std::vector<TermPtr> terms = enumerate_terms(alphabet, max_complexity);
  RelationSet rels = relations_for(variety, alphabet);

  struct Entry {
    TermPtr term;
    PointedGraph raw;
    Element canonical;
  };
  std::vector<Entry> entries;
  entries.reserve(terms.size());
  for (TermPtr const& t : terms) {
    entries.push_back({t, eval_raw(to_extended(t, variety), variety),
                       eval(t, variety)});
  }

  auto bound_for = [&](Entry const& a, Entry const& b) {
    if (variety == Variety::ffr_p) {
      return a.raw.graph.edge_count() + b.raw.graph.edge_count() + 4;
    }
    return a.canonical.graph.edge_count() + b.canonical.graph.edge_count() + 4;
  };

  auto check_pair = [&](Entry const& a, Entry const& b, SearchVerdict verdict) {
    ++result.pairs_checked;
    bool oracle_equal = verdict.kind == VerdictKind::equal;
    bool decide_equal = a.canonical == b.canonical;
    if (oracle_equal != decide_equal) {
      result.disagreements.push_back(
          {render(a.term), render(b.term), decide_equal, verdict});
    }
  };

  if (sample_pairs > 0) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < sample_pairs; ++i) {
      Entry const& a = entries[rng() % entries.size()];
      Entry const& b = entries[rng() % entries.size()];
      check_pair(a, b, bfs_equal(a.raw, b.raw, rels, bound_for(a, b)));
    }
    return result;
  }

  // Exhaustive mode.  Pairs with distinct points are cheap; for the rest,
  // the plain and strong varieties reuse one breadth-first sweep per left
  // term (its reachable class is a finite set of subgraphs of the closure).
  std::unordered_map<Word, std::vector<std::size_t>> by_point;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    by_point[entries[i].raw.point].push_back(i);
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].raw.point != entries[j].raw.point) {
        check_pair(entries[i], entries[j], {VerdictKind::points_differ});
      }
    }
  }
  for (auto const& [point, group] : by_point) {
    for (std::size_t gi = 0; gi < group.size(); ++gi) {
      Entry const& a = entries[group[gi]];
      if (variety == Variety::ffr_p) {
        for (std::size_t gj = gi + 1; gj < group.size(); ++gj) {
          Entry const& b = entries[group[gj]];
          check_pair(a, b, bfs_equal(a.raw, b.raw, rels, bound_for(a, b)));
        }
        continue;
      }
      // One full sweep of a's rewrite class, then lookups.
      KeyMap depths;
      depths.emplace(a.raw.graph.canonical_key(), 0);
      std::deque<PointedGraph> queue{a.raw};
      std::deque<std::size_t> ds{0};
      while (!queue.empty()) {
        PointedGraph p = std::move(queue.front());
        std::size_t d = ds.front();
        queue.pop_front();
        ds.pop_front();
        for (PointedGraph& q : neighbors(p, rels)) {
          auto key = q.graph.canonical_key();
          if (depths.emplace(std::move(key), d + 1).second) {
            if (depths.size() > kDefaultStateBudget) {
              throw OracleError("corpus_check: state budget exceeded");
            }
            queue.push_back(std::move(q));
            ds.push_back(d + 1);
          }
        }
      }
      for (std::size_t gj = gi + 1; gj < group.size(); ++gj) {
        Entry const& b = entries[group[gj]];
        std::size_t bound = bound_for(a, b);
        auto it = depths.find(b.raw.graph.canonical_key());
        if (it != depths.end() && it->second <= bound) {
          check_pair(a, b, {VerdictKind::equal, it->second});
        } else {
          check_pair(a, b, {VerdictKind::not_equal_within_bound, 0, bound});
        }
      }
    }
  }
  return result;
}

}  // namespace ffr
