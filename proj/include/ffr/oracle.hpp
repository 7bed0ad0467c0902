// Brute-force cross-checks, independent of the closure-based deciders:
// single-step graph rewrites realizing the defining relation sets of the
// three congruences, bounded-breadth equivalence search between raw values,
// and the randomized law-checking harness.

#ifndef FFR_ORACLE_HPP_
#define FFR_ORACLE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ffr/semigroup.hpp"

namespace ffr {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A variety's single-step moves.  Moves never change the point.
//   ffr    add an edge permitted by T1/T2/T3, or remove a bar edge that the
//          smaller graph licenses, keeping the graph accessible;
//   ffr_s  the same with T4 included;
//   ffr_p  add or remove a bar edge (v,~x,vx) at any vertex v, growing or
//          dropping the vertex vx as needed.  `alphabet` bounds the letters
//          available for additions.
struct RelationSet {
  Variety variety;
  std::vector<Generator> alphabet;
};

RelationSet relations_for(Variety variety,
                          std::vector<Generator> alphabet = {});

std::vector<PointedGraph> neighbors(PointedGraph const& p, RelationSet const& rels);

enum class VerdictKind { equal, points_differ, not_equal_within_bound };

struct SearchVerdict {
  VerdictKind kind;
  std::size_t chain_length = 0;  // set for equal
  std::size_t bound = 0;         // set for not_equal_within_bound
};

inline constexpr std::size_t kBoundCap = 64;
inline constexpr std::size_t kDefaultStateBudget = 200000;

// Breadth-first search for a rewrite chain of length <= bound from u to v.
// For the perfect variety the search is confined to subgraphs of u union v,
// which the chain construction for equal pairs never has to leave.  Throws
// OracleError when bound exceeds the cap or the visited-state budget runs
// out.
SearchVerdict bfs_equal(PointedGraph const& u, PointedGraph const& v,
                        RelationSet const& rels, std::size_t bound,
                        std::size_t state_budget = kDefaultStateBudget);

// edges(canonical u) + edges(canonical v) + 4: forward chains into the
// canonical form suffice, the slack covers detours.
std::size_t calibrated_bound(TermPtr const& u, TermPtr const& v, Variety variety);

// Raw values, calibrated bound, bfs_equal.
SearchVerdict oracle_decide(TermPtr const& u, TermPtr const& v,
                            RelationSet const& rels);

// Uniform-ish random term of exactly the requested complexity.
TermPtr random_term(std::mt19937_64& rng, std::vector<Generator> const& alphabet,
                    std::size_t target_complexity);

struct AxiomViolation {
  std::string law;
  std::string witness;  // rendered terms
};

struct AxiomReport {
  Variety variety;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  // Violations of laws that must hold in the variety.
  std::vector<AxiomViolation> violations;
  // Failures of laws not claimed by the variety (the strong and perfect
  // laws outside their subvarieties), reported for information.
  std::vector<AxiomViolation> informational;

  bool ok() const { return violations.empty(); }
};

AxiomReport check_axioms(Variety variety, std::size_t sample_size,
                         std::size_t max_complexity, std::uint64_t seed);

struct Disagreement {
  std::string u;
  std::string v;
  bool decide_verdict;
  SearchVerdict oracle_verdict;
};

struct CorpusResult {
  std::size_t pairs_checked = 0;
  std::vector<Disagreement> disagreements;
  bool ok() const { return disagreements.empty(); }
};

// Compares decide() with the oracle verdict over term pairs from the
// enumerated corpus: all pairs when sample_pairs == 0, otherwise a seeded
// sample of that many pairs.
CorpusResult corpus_check(Variety variety, std::vector<Generator> const& alphabet,
                          std::size_t max_complexity, std::size_t sample_pairs = 0,
                          std::uint64_t seed = 0);

}  // namespace ffr

#endif  // FFR_ORACLE_HPP_
