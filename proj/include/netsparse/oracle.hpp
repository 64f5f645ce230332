#ifndef NETSPARSE_ORACLE_HPP
#define NETSPARSE_ORACLE_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"

#include <cstdint>
#include <vector>

namespace netsparse {

// Caps for the exhaustive solvers. Instances beyond a cap are refused with
// budget_error instead of running unbounded; the timeout guards the search
// itself.
struct OracleBudget {
    std::size_t max_candidate_edges = 22;
    std::size_t max_hyperedge_universe = 12;
    double timeout_seconds = 60.0;
};

// Exact minimum-cardinality subset of the community-induced candidate pool
// meeting every density target (and connectivity when requested). Searches
// subsets in increasing cardinality; among co-optimal solutions returns the
// lexicographically smallest edge set. With minimize_distance the objective
// is total edge distance instead of cardinality.
std::vector<Edge> opt_sparsedens(const Graph& g0, const CommunitySet& cs,
                                 const std::vector<double>& alphas,
                                 bool connectivity,
                                 const OracleBudget& budget = {},
                                 bool minimize_distance = false);

// Independent cross-check for opt_sparsedens: a flat scan over all edge
// subsets with an explicit (cardinality, lexicographic) best-so-far rule,
// sharing no search machinery with the combination enumerator.
std::vector<Edge> opt_sparsedens_scan(const Graph& g0, const CommunitySet& cs,
                                      const std::vector<double>& alphas,
                                      bool connectivity,
                                      const OracleBudget& budget = {});

// Exact minimum edge set under which every community induces a spanning
// star. Subset enumeration in increasing cardinality.
std::vector<Edge> opt_sparsestars(const Graph& g0, const CommunitySet& cs,
                                  const OracleBudget& budget = {});

// Same optimum found by enumerating center assignments (one feasible center
// per community) instead of edge subsets. Used to cross-check
// opt_sparsestars; both return the lexicographically smallest optimum.
std::vector<Edge> opt_sparsestars_centers(const Graph& g0,
                                          const CommunitySet& cs,
                                          const OracleBudget& budget = {});

// Exact minimum arc set giving every community an out-star from a center
// adjacent (in g0) to all other members. Enumerates center assignments;
// every arc-minimal solution is a union of such stars.
std::vector<Arc> opt_sparsedistars(const Graph& g0, const CommunitySet& cs,
                                   const OracleBudget& budget = {});

struct MatchingOpt {
    std::vector<std::vector<std::uint32_t>> blocks; // disjoint community groups
    long long score = 0;                            // total hyperedge score
};

// Exact maximum-score partition of the communities into groups with a
// nonempty common intersection. When g0 is given, a group additionally
// needs a common member adjacent in g0 to the whole group union (the
// groups realizable as stars of g0).
MatchingOpt opt_matching(const CommunitySet& cs, const OracleBudget& budget = {},
                         const Graph* g0 = nullptr);

} // namespace netsparse

#endif
