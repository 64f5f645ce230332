#include "netsparse/hyperedge.hpp"

#include "netsparse/errors.hpp"

#include <algorithm>

namespace netsparse {

namespace {

std::vector<VertexId> members_union(const CommunitySet& cs,
                                    std::span<const std::uint32_t> members) {
    std::vector<VertexId> u;
    for (std::uint32_t i : members) {
        auto c = cs.members(i);
        u.insert(u.end(), c.begin(), c.end());
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

std::vector<VertexId> members_intersection(
    const CommunitySet& cs, std::span<const std::uint32_t> members) {
    auto first = cs.members(members.front());
    std::vector<VertexId> inter(first.begin(), first.end());
    for (std::size_t j = 1; j < members.size(); ++j) {
        auto c = cs.members(members[j]);
        std::vector<VertexId> next;
        std::set_intersection(inter.begin(), inter.end(), c.begin(), c.end(),
                              std::back_inserter(next));
        inter = std::move(next);
        if (inter.empty()) break;
    }
    return inter;
}

} // namespace

long long hyperedge_score(const CommunitySet& cs,
                          std::span<const std::uint32_t> members) {
    long long score = 1 - static_cast<long long>(members.size());
    for (VertexId v : members_union(cs, members)) {
        long long mult = 0;
        for (std::uint32_t i : members)
            if (cs.contains(i, v)) ++mult;
        score += mult - 1;
    }
    return score;
}

long long hyperedge_score_star_form(const CommunitySet& cs,
                                    std::span<const std::uint32_t> members) {
    long long score = 0;
    for (std::uint32_t i : members)
        score += static_cast<long long>(cs.member_count(i)) - 1;
    score -= static_cast<long long>(members_union(cs, members).size()) - 1;
    return score;
}

Hyperedge build_hyperedge(const CommunitySet& cs,
                          std::vector<std::uint32_t> members) {
    if (members.empty())
        throw contract_error("hyperedge needs at least one community");
    std::sort(members.begin(), members.end());
    Hyperedge h;
    h.common = members_intersection(cs, members);
    if (h.common.empty())
        throw contract_error("hyperedge communities share no vertex");
    h.covered = members_union(cs, members);
    h.members = std::move(members);
    h.score = hyperedge_score(cs, h.members);
    return h;
}

std::optional<Hyperedge> candidate_hyperedge(
    const CommunitySet& cs, VertexId v,
    std::span<const std::uint8_t> uncovered) {
    if (uncovered.size() != cs.size())
        throw contract_error("uncovered flag list size mismatch");
    std::vector<std::uint32_t> members;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (uncovered[i] && cs.contains(i, v))
            members.push_back(static_cast<std::uint32_t>(i));
    if (members.empty()) return std::nullopt;
    return build_hyperedge(cs, std::move(members));
}

std::uint32_t compute_k(const CommunitySet& cs) {
    if (cs.empty()) return 0;
    VertexId max_v = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (VertexId v : cs.members(i)) max_v = std::max(max_v, v);
    auto counts = cs.membership_counts(max_v + 1);
    return *std::max_element(counts.begin(), counts.end());
}

} // namespace netsparse
