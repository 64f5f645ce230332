#include "netsparse/stars.hpp"

#include "netsparse/errors.hpp"
#include "netsparse/properties.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>

namespace netsparse {

namespace {

// queue key: score desc, |members| desc, |covered| desc, witness id asc
struct QueueKey {
    long long score = 0;
    std::size_t members = 0;
    std::size_t covered = 0;
    VertexId witness = 0;
};

bool key_better(const QueueKey& a, const QueueKey& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.members != b.members) return a.members > b.members;
    if (a.covered != b.covered) return a.covered > b.covered;
    return a.witness < b.witness;
}

bool key_equal(const QueueKey& a, const QueueKey& b) {
    return a.score == b.score && a.members == b.members &&
           a.covered == b.covered && a.witness == b.witness;
}

// The communities of center_for[v] all contain v, so the candidate built
// from them always has v in its common intersection.
std::optional<Hyperedge> scoped_candidate(
    const CommunitySet& cs, const std::vector<std::uint32_t>& center_for,
    const std::vector<std::uint8_t>& uncovered) {
    std::vector<std::uint32_t> members;
    for (std::uint32_t i : center_for)
        if (uncovered[i]) members.push_back(i);
    if (members.empty()) return std::nullopt;
    return build_hyperedge(cs, std::move(members));
}

std::vector<VertexId> feasible_centers(const Graph& g0, const Hyperedge& h) {
    std::vector<VertexId> out;
    for (VertexId x : h.common) {
        bool ok = true;
        for (VertexId y : h.covered) {
            if (y == x) continue;
            if (!g0.has_edge(x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

VertexId pick_center(const std::vector<VertexId>& candidates,
                     CenterPolicy policy,
                     const std::vector<std::uint32_t>& membership) {
    if (policy == CenterPolicy::MinId) return candidates.front();
    VertexId best = candidates.front();
    for (VertexId x : candidates)
        if (membership[x] > membership[best]) best = x;
    return best;
}

} // namespace

std::vector<Hyperedge> greedy_matching(const Graph& g0,
                                       const CommunitySet& cs) {
    cs.validate_against(g0.vertex_count());

    // center_for[v]: communities v can center within g0
    std::vector<std::vector<std::uint32_t>> center_for(g0.vertex_count());
    std::vector<std::size_t> starless;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto centers = valid_star_centers(g0, cs.members(i));
        if (centers.empty()) {
            starless.push_back(i);
            continue;
        }
        for (VertexId x : centers)
            center_for[x].push_back(static_cast<std::uint32_t>(i));
    }
    if (!starless.empty())
        throw infeasible_error("no spanning star in the feasibility graph for " +
                                   std::to_string(starless.size()) +
                                   " communities",
                               starless);

    std::vector<std::uint8_t> uncovered(cs.size(), 1);
    std::size_t uncovered_count = cs.size();

    auto cmp = [](const QueueKey& a, const QueueKey& b) {
        return key_better(b, a); // max-heap
    };
    std::priority_queue<QueueKey, std::vector<QueueKey>, decltype(cmp)> queue(
        cmp);
    for (VertexId v = 0; v < g0.vertex_count(); ++v) {
        if (center_for[v].empty()) continue;
        auto h = scoped_candidate(cs, center_for[v], uncovered);
        queue.push(QueueKey{h->score, h->members.size(), h->covered.size(), v});
    }

    std::vector<Hyperedge> matching;
    while (uncovered_count > 0) {
        if (queue.empty())
            throw contract_error("matching queue drained with uncovered "
                                 "communities left");
        QueueKey top = queue.top();
        queue.pop();
        auto h = scoped_candidate(cs, center_for[top.witness], uncovered);
        if (!h) continue; // everything this witness could center is covered
        QueueKey fresh{h->score, h->members.size(), h->covered.size(),
                       top.witness};
        if (!key_equal(fresh, top)) {
            queue.push(fresh); // stale; re-rank under the current coverage
            continue;
        }
        for (std::uint32_t i : h->members) {
            uncovered[i] = 0;
            --uncovered_count;
        }
        matching.push_back(std::move(*h));
    }
    return matching;
}

DirectedStarSet materialize_stars(const std::vector<Hyperedge>& matching,
                                  const Graph& g0, const CommunitySet& cs,
                                  CenterPolicy policy) {
    cs.validate_against(g0.vertex_count());
    std::vector<std::uint32_t> membership;
    if (policy == CenterPolicy::MaxCoverage)
        membership = cs.membership_counts(g0.vertex_count());

    DirectedStarSet out;
    out.center.assign(cs.size(), std::nullopt);

    auto emit_star = [&](VertexId x, const Hyperedge& h) {
        for (VertexId y : h.covered)
            if (y != x) out.arcs.push_back(Arc{x, y});
        for (std::uint32_t i : h.members) out.center[i] = x;
        out.effective.push_back(h);
    };

    for (const Hyperedge& h : matching) {
        auto centers = feasible_centers(g0, h);
        if (!centers.empty()) {
            emit_star(pick_center(centers, policy, membership), h);
            continue;
        }
        // no shared center reaches the whole union in g0: fall back to one
        // star per community
        std::vector<std::size_t> starless;
        for (std::uint32_t i : h.members) {
            Hyperedge single = build_hyperedge(cs, {i});
            auto single_centers = feasible_centers(g0, single);
            if (single_centers.empty()) {
                starless.push_back(i);
                continue;
            }
            emit_star(pick_center(single_centers, policy, membership), single);
        }
        if (!starless.empty())
            throw infeasible_error("no spanning star in the feasibility "
                                   "graph for " +
                                       std::to_string(starless.size()) +
                                       " communities",
                                   starless);
    }

    std::sort(out.arcs.begin(), out.arcs.end());
    out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()),
                   out.arcs.end());
    return out;
}

std::vector<Edge> undirect(const std::vector<Arc>& arcs) {
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const Arc& a : arcs) edges.push_back(make_edge(a.from, a.to));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

SparsifyResult sparsify_stars(const Graph& g0, const CommunitySet& cs,
                              CenterPolicy policy) {
    auto matching = greedy_matching(g0, cs);
    auto dss = materialize_stars(matching, g0, cs, policy);

    SparsifyResult result;
    result.edges = undirect(dss.arcs);
    result.center = dss.center;
    result.satisfied.assign(cs.size(), 1);
    result.arc_count = dss.arcs.size();
    for (const Hyperedge& h : dss.effective) result.matching_score += h.score;

    // centers in discovery order with the number of communities they serve
    std::map<VertexId, std::size_t> seen;
    for (const Hyperedge& h : dss.effective) {
        VertexId x = *dss.center[h.members.front()];
        auto it = seen.find(x);
        if (it == seen.end()) {
            seen.emplace(x, result.center_order.size());
            result.center_order.push_back(
                CenterInfo{x, static_cast<std::uint32_t>(h.members.size())});
        } else {
            result.center_order[it->second].covered +=
                static_cast<std::uint32_t>(h.members.size());
        }
    }
    return result;
}

long long star_arc_total(const CommunitySet& cs) {
    long long total = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        total += static_cast<long long>(cs.member_count(i)) - 1;
    return total;
}

bool undirected_bound_holds(std::size_t result_edges, const CommunitySet& cs,
                            std::size_t opt_edges) {
    long long k = compute_k(cs);
    long long c = star_arc_total(cs);
    return k * static_cast<long long>(result_edges) <=
           (k - 1) * c + 2 * static_cast<long long>(opt_edges);
}

bool directed_bound_holds(std::size_t result_arcs, const CommunitySet& cs,
                          std::size_t opt_arcs) {
    long long k = compute_k(cs);
    long long c = star_arc_total(cs);
    return k * static_cast<long long>(result_arcs) <=
           (k - 1) * c + static_cast<long long>(opt_arcs);
}

} // namespace netsparse
