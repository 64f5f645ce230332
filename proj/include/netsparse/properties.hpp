#ifndef NETSPARSE_PROPERTIES_HPP
#define NETSPARSE_PROPERTIES_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace netsparse {

// Edges of g with both endpoints in `community`, canonical order.
// `community` must be sorted; ids are validated.
std::vector<Edge> induced_edges(const Graph& g,
                                std::span<const VertexId> community);
std::size_t induced_edge_count(const Graph& g,
                               std::span<const VertexId> community);

// ceil(alpha * C(size, 2)), the required induced edge count for the
// density property. Guards against floating noise so that products that
// are integers in exact arithmetic (e.g. 0.7 * 10) round to themselves.
long long density_requirement(double alpha, std::size_t community_size);

// |E(community)| >= density_requirement. Size-1 communities always satisfy.
bool density_satisfied(const Graph& g, std::span<const VertexId> community,
                       double alpha);

// Connected components of the induced subgraph, isolated members included.
std::size_t component_count(const Graph& g,
                            std::span<const VertexId> community);
bool connected(const Graph& g, std::span<const VertexId> community);

// All members adjacent to every other member, ascending id. A size-1
// community has its lone vertex as center of the empty star.
std::vector<VertexId> valid_star_centers(const Graph& g,
                                         std::span<const VertexId> community);
// Smallest such center, or nullopt when the community spans no star.
std::optional<VertexId> spanning_star_center(
    const Graph& g, std::span<const VertexId> community);

// Harmonic mean of pairwise hop distances between community members,
// C(|c|,2) / sum(1/dist), unreachable pairs contributing 0 to the sum.
// Returns +infinity when no pair is reachable. Requires |c| >= 2.
// Hop counts ignore edge distances even on weighted graphs.
double harmonic_mean_shortest_path(const Graph& g,
                                   std::span<const VertexId> community);

// Sorted union of per-community induced edge sets: the only edges any
// sparsifier can use.
std::vector<Edge> community_candidate_edges(const Graph& g,
                                            const CommunitySet& cs);

} // namespace netsparse

#endif
