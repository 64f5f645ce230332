#ifndef NETSPARSE_HYPEREDGE_HPP
#define NETSPARSE_HYPEREDGE_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace netsparse {

// A group of communities sharing at least one vertex. `score` counts the
// arcs saved by serving the whole group with one shared star center
// instead of one star per community.
struct Hyperedge {
    std::vector<std::uint32_t> members; // community indices, ascending
    std::vector<VertexId> common;       // vertices in every member community
    std::vector<VertexId> covered;      // vertices in any member community
    long long score = 0;
};

// Score via per-vertex multiplicities: 1 - |H| + sum over the covered
// vertices of (memberships within H - 1).
long long hyperedge_score(const CommunitySet& cs,
                          std::span<const std::uint32_t> members);

// The same value from star sizes: sum(|C|-1) - (|covered|-1). Kept as an
// independent route for the score identity checks.
long long hyperedge_score_star_form(const CommunitySet& cs,
                                    std::span<const std::uint32_t> members);

// Assembles members/common/covered/score. Members must be nonempty with a
// nonempty common intersection.
Hyperedge build_hyperedge(const CommunitySet& cs,
                          std::vector<std::uint32_t> members);

// Maximal candidate hyperedge witnessed by vertex v over the communities
// flagged uncovered; nullopt when v belongs to none of them.
std::optional<Hyperedge> candidate_hyperedge(
    const CommunitySet& cs, VertexId v, std::span<const std::uint8_t> uncovered);

// Largest number of communities sharing one vertex; every group of
// communities with a common vertex has at most this many members.
std::uint32_t compute_k(const CommunitySet& cs);

} // namespace netsparse

#endif
