#ifndef NETSPARSE_STARS_HPP
#define NETSPARSE_STARS_HPP

#include "netsparse/hyperedge.hpp"
#include "netsparse/result.hpp"

#include <optional>
#include <vector>

namespace netsparse {

enum class CenterPolicy {
    MinId,       // smallest feasible center id
    MaxCoverage, // feasible center in the most communities overall
};

struct DirectedStarSet {
    std::vector<Arc> arcs;                       // sorted, unique
    std::vector<std::optional<VertexId>> center; // per community
    std::vector<Hyperedge> effective; // hyperedges as materialized (after
                                      // any infeasible group was split)
};

// Greedy disjoint hyperedge matching covering every community. Candidates
// are the per-vertex maximal hyperedges restricted to communities the
// vertex can center in g0; each step takes the highest score (ties: more
// communities, then more covered vertices, then smaller witness id).
// Throws infeasible_error when a community spans no star in g0.
std::vector<Hyperedge> greedy_matching(const Graph& g0, const CommunitySet& cs);

// Realize each hyperedge as a directed star out of a center from its
// common intersection that is adjacent in g0 to everything it must reach.
// A hyperedge with no such center is split into per-community stars.
DirectedStarSet materialize_stars(const std::vector<Hyperedge>& matching,
                                  const Graph& g0, const CommunitySet& cs,
                                  CenterPolicy policy = CenterPolicy::MinId);

// Drop directions and duplicates; canonical sorted edges.
std::vector<Edge> undirect(const std::vector<Arc>& arcs);

// Star sparsifier: greedy matching, star materialization, undirection.
// Every community of cs ends up inducing a spanning star.
SparsifyResult sparsify_stars(const Graph& g0, const CommunitySet& cs,
                              CenterPolicy policy = CenterPolicy::MinId);

// k|E| <= (k-1)C + 2|E*|, checked in exact integer arithmetic, with
// C = sum(|C_i|-1) and k from compute_k.
bool undirected_bound_holds(std::size_t result_edges, const CommunitySet& cs,
                            std::size_t opt_edges);
// k|D| <= (k-1)C + |D*| for the directed intermediate.
bool directed_bound_holds(std::size_t result_arcs, const CommunitySet& cs,
                          std::size_t opt_arcs);

// sum(|C_i|-1): the arc count of one star per community.
long long star_arc_total(const CommunitySet& cs);

} // namespace netsparse

#endif
