// The edge-addition transformations T1-T4, the closure operators for the
// plain and strong congruences, and the X-edge reduct used by the perfect
// model.
//
//   T1: v has an outgoing bar edge but no bar-lambda loop     -> add (v,~,v)
//   T2: plain edge (v,x,vx) without the parallel bar edge     -> add (v,~x,vx)
//   T3: consecutive bar edges (w,~u,wu),(wu,~v,wuv)           -> add (w,~uv,wuv)
//   T4: bar edges (w,~u,wu),(w,~uv,wuv)                       -> add (wu,~v,wuv)
//       (the premise edges may coincide, v = lambda: any non-loop bar edge
//       licenses a bar-lambda loop at its target)
//
// close() computes the fixpoint directly: for the plain rule set the bar
// edges of the fixpoint are the transitive closure of the seeded bar
// relation plus a loop at every vertex with an outgoing bar edge; for the
// strong rule set they are all (prefix, extension) pairs of vertices plus
// a loop at every vertex.  close_worklist() is the literal one-edge-at-a-time
// fixpoint with a seedable application order; the two agree (tested).

#ifndef FFR_CLOSURE_HPP_
#define FFR_CLOSURE_HPP_

#include <cstdint>
#include <unordered_set>

#include "ffr/cayley.hpp"

namespace ffr {

enum class Rule : std::uint8_t { T1, T2, T3, T4 };

enum class Variety : std::uint8_t { ffr, ffr_s, ffr_p };

// {T1,T2,T3} for ffr, {T1,T2,T3,T4} for ffr_s; throws for ffr_p.
std::vector<Rule> rules_for(Variety v);

std::string variety_name(Variety v);

// Every edge addable by one application of any enabled rule.
std::unordered_set<Edge> applicable_edges(Graph const& g,
                                          std::vector<Rule> const& rules);

// The closure fixpoint.  Requires an accessible graph with at least one
// edge and variety ffr or ffr_s; never changes the vertex set.
Graph close(Graph const& g, Variety variety);

// Reference fixpoint applying one applicable edge at a time; `seed` picks
// the (otherwise arbitrary) application order.
Graph close_worklist(Graph const& g, Variety variety, std::uint64_t seed = 0);

bool is_closed(Graph const& g, Variety variety);

// Subgraph induced by the plain-labeled edges: keeps exactly those edges,
// with the vertex set shrunk to their endpoints (possibly empty).
Graph x_reduct(Graph const& g);

}  // namespace ffr

#endif  // FFR_CLOSURE_HPP_
