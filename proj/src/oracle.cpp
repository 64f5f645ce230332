#include "netsparse/oracle.hpp"

#include "netsparse/errors.hpp"
#include "netsparse/properties.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace netsparse {

namespace {

class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds))) {}

    void tick() {
        if ((++ticks_ & 0xFFFF) == 0 && std::chrono::steady_clock::now() > end_)
            throw budget_error("exact solver timed out");
    }

private:
    std::chrono::steady_clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

struct DensInstance {
    std::vector<Edge> pool;
    std::vector<std::vector<std::uint32_t>> comms_of; // per pool index
    std::vector<long long> required;
    std::size_t max_cover = 1;
};

DensInstance build_dens_instance(const Graph& g0, const CommunitySet& cs,
                                 const std::vector<double>& alphas,
                                 bool connectivity,
                                 const OracleBudget& budget) {
    if (alphas.size() != cs.size())
        throw contract_error("opt_sparsedens: alpha list size mismatch");
    cs.validate_against(g0.vertex_count());

    DensInstance inst;
    inst.pool = community_candidate_edges(g0, cs);
    if (inst.pool.size() > budget.max_candidate_edges)
        throw budget_error("candidate pool of " + std::to_string(inst.pool.size()) +
                           " edges exceeds budget " +
                           std::to_string(budget.max_candidate_edges));

    inst.comms_of.resize(inst.pool.size());
    std::vector<std::size_t> infeasible;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        inst.required.push_back(density_requirement(alphas[i], c.size()));
        auto ind = induced_edges(g0, c);
        if (static_cast<long long>(ind.size()) < inst.required.back() ||
            (connectivity && !connected(g0, c))) {
            infeasible.push_back(i);
            continue;
        }
        for (const Edge& e : ind) {
            auto it = std::lower_bound(inst.pool.begin(), inst.pool.end(), e);
            inst.comms_of[static_cast<std::size_t>(it - inst.pool.begin())]
                .push_back(static_cast<std::uint32_t>(i));
        }
    }
    if (!infeasible.empty())
        throw infeasible_error("instance infeasible for " +
                                   std::to_string(infeasible.size()) +
                                   " communities",
                               infeasible);
    for (const auto& cover : inst.comms_of)
        inst.max_cover = std::max(inst.max_cover, cover.size());
    return inst;
}

// Per-community induced subgraph connectivity of the current selection.
bool selection_connected(const CommunitySet& cs, const DensInstance& inst,
                         const std::vector<std::size_t>& selected) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        if (c.size() <= 1) continue;
        std::vector<std::size_t> parent(c.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t components = c.size();
        for (std::size_t idx : selected) {
            bool inside = std::binary_search(inst.comms_of[idx].begin(),
                                             inst.comms_of[idx].end(),
                                             static_cast<std::uint32_t>(i));
            if (!inside) continue;
            const Edge& e = inst.pool[idx];
            auto pos = [&](VertexId v) {
                return static_cast<std::size_t>(
                    std::lower_bound(c.begin(), c.end(), v) - c.begin());
            };
            std::size_t a = find(pos(e.u)), b = find(pos(e.v));
            if (a != b) {
                parent[b] = a;
                --components;
            }
        }
        if (components != 1) return false;
    }
    return true;
}

struct DensSearch {
    const CommunitySet& cs;
    const DensInstance& inst;
    bool connectivity;
    Deadline& deadline;
    std::vector<long long> counts;
    long long deficit = 0; // total remaining density shortfall
    std::vector<std::size_t> selected;
    std::vector<Edge> found;

    bool extend(std::size_t pos, std::size_t slots) {
        deadline.tick();
        if (deficit == 0 && slots == 0) {
            if (!connectivity || selection_connected(cs, inst, selected)) {
                for (std::size_t idx : selected) found.push_back(inst.pool[idx]);
                return true;
            }
            return false;
        }
        if (slots == 0) return false;
        if (deficit > static_cast<long long>(slots * 2 * inst.max_cover))
            return false;
        for (std::size_t idx = pos; idx + slots <= inst.pool.size(); ++idx) {
            apply(idx);
            bool done = extend(idx + 1, slots - 1);
            undo(idx);
            if (done) return true;
        }
        return false;
    }

    void apply(std::size_t idx) {
        selected.push_back(idx);
        for (std::uint32_t i : inst.comms_of[idx]) {
            if (counts[i] < inst.required[i]) --deficit;
            ++counts[i];
        }
    }

    void undo(std::size_t idx) {
        selected.pop_back();
        for (std::uint32_t i : inst.comms_of[idx]) {
            --counts[i];
            if (counts[i] < inst.required[i]) ++deficit;
        }
    }
};

} // namespace

std::vector<Edge> opt_sparsedens(const Graph& g0, const CommunitySet& cs,
                                 const std::vector<double>& alphas,
                                 bool connectivity, const OracleBudget& budget,
                                 bool minimize_distance) {
    DensInstance inst = build_dens_instance(g0, cs, alphas, connectivity, budget);
    Deadline deadline(budget.timeout_seconds);

    if (!minimize_distance) {
        DensSearch search{cs, inst, connectivity, deadline,
                          std::vector<long long>(cs.size(), 0), 0, {}, {}};
        search.deficit = std::accumulate(inst.required.begin(),
                                         inst.required.end(), 0LL);
        long long lower = 0;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            long long need = inst.required[i];
            if (connectivity)
                need = std::max(
                    need, static_cast<long long>(cs.member_count(i)) - 1);
            lower = std::max(lower, need);
        }
        for (std::size_t k = static_cast<std::size_t>(lower);
             k <= inst.pool.size(); ++k) {
            if (search.extend(0, k)) return search.found;
        }
        throw contract_error("opt_sparsedens: no solution after feasibility check");
    }

    // minimum total distance: include/exclude search with weight pruning
    std::vector<double> dist(inst.pool.size());
    for (std::size_t idx = 0; idx < inst.pool.size(); ++idx)
        dist[idx] = g0.distance(inst.pool[idx]);

    std::vector<long long> counts(cs.size(), 0);
    long long deficit =
        std::accumulate(inst.required.begin(), inst.required.end(), 0LL);
    std::vector<std::size_t> selected;
    std::vector<Edge> best;
    double best_weight = std::numeric_limits<double>::infinity();
    bool have_best = false;

    auto current_edges = [&]() {
        std::vector<Edge> out;
        out.reserve(selected.size());
        for (std::size_t idx : selected) out.push_back(inst.pool[idx]);
        return out;
    };

    std::function<void(std::size_t, double)> dfs = [&](std::size_t pos,
                                                       double weight) {
        deadline.tick();
        if (deficit == 0 &&
            (!connectivity || selection_connected(cs, inst, selected))) {
            std::vector<Edge> cand = current_edges();
            if (!have_best || weight < best_weight ||
                (weight == best_weight && cand < best)) {
                have_best = true;
                best_weight = weight;
                best = std::move(cand);
            }
            return; // supersets only add positive distance
        }
        if (pos >= inst.pool.size()) return;
        long long capacity = 0;
        for (std::size_t idx = pos; idx < inst.pool.size(); ++idx)
            capacity += static_cast<long long>(2 * inst.comms_of[idx].size());
        if (deficit > capacity) return;
        for (std::size_t idx = pos; idx < inst.pool.size(); ++idx) {
            double w = weight + dist[idx];
            if (have_best && w > best_weight) continue;
            selected.push_back(idx);
            for (std::uint32_t i : inst.comms_of[idx]) {
                if (counts[i] < inst.required[i]) --deficit;
                ++counts[i];
            }
            dfs(idx + 1, w);
            for (std::uint32_t i : inst.comms_of[idx]) {
                --counts[i];
                if (counts[i] < inst.required[i]) ++deficit;
            }
            selected.pop_back();
        }
    };
    dfs(0, 0.0);
    if (!have_best)
        throw contract_error("opt_sparsedens: no solution after feasibility check");
    return best;
}

std::vector<Edge> opt_sparsedens_scan(const Graph& g0, const CommunitySet& cs,
                                      const std::vector<double>& alphas,
                                      bool connectivity,
                                      const OracleBudget& budget) {
    DensInstance inst = build_dens_instance(g0, cs, alphas, connectivity, budget);
    const std::size_t m = inst.pool.size();
    if (m > 22) throw budget_error("scan oracle limited to 22 candidate edges");
    Deadline deadline(budget.timeout_seconds);

    std::vector<Edge> best;
    std::size_t best_count = m + 1;
    bool have_best = false;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        deadline.tick();
        std::size_t count = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (have_best && count > best_count) continue;
        std::vector<long long> counts(cs.size(), 0);
        std::vector<std::size_t> selected;
        for (std::size_t idx = 0; idx < m; ++idx) {
            if (!(mask & (std::uint64_t{1} << idx))) continue;
            selected.push_back(idx);
            for (std::uint32_t i : inst.comms_of[idx]) ++counts[i];
        }
        bool ok = true;
        for (std::size_t i = 0; i < cs.size() && ok; ++i)
            ok = counts[i] >= inst.required[i];
        if (ok && connectivity) ok = selection_connected(cs, inst, selected);
        if (!ok) continue;
        std::vector<Edge> cand;
        cand.reserve(selected.size());
        for (std::size_t idx : selected) cand.push_back(inst.pool[idx]);
        if (!have_best || count < best_count ||
            (count == best_count && cand < best)) {
            have_best = true;
            best_count = count;
            best = std::move(cand);
        }
    }
    if (!have_best)
        throw contract_error("opt_sparsedens_scan: no solution after feasibility check");
    return best;
}

namespace {

struct StarInstance {
    std::vector<Edge> pool;
    // per community, per member: pool indices of the star from that member,
    // or empty when the member cannot center the community in g0
    std::vector<std::vector<std::vector<std::int32_t>>> star_edges;
};

StarInstance build_star_instance(const Graph& g0, const CommunitySet& cs,
                                 const OracleBudget& budget,
                                 bool enforce_edge_budget) {
    cs.validate_against(g0.vertex_count());
    StarInstance inst;
    inst.pool = community_candidate_edges(g0, cs);
    if (enforce_edge_budget && inst.pool.size() > budget.max_candidate_edges)
        throw budget_error("candidate pool of " + std::to_string(inst.pool.size()) +
                           " edges exceeds budget " +
                           std::to_string(budget.max_candidate_edges));

    auto pool_index = [&](const Edge& e) -> std::int32_t {
        auto it = std::lower_bound(inst.pool.begin(), inst.pool.end(), e);
        return static_cast<std::int32_t>(it - inst.pool.begin());
    };

    std::vector<std::size_t> infeasible;
    inst.star_edges.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        inst.star_edges[i].resize(c.size());
        bool any_center = false;
        for (std::size_t xi = 0; xi < c.size(); ++xi) {
            bool valid = true;
            std::vector<std::int32_t> idx;
            for (VertexId y : c) {
                if (y == c[xi]) continue;
                if (!g0.has_edge(c[xi], y)) {
                    valid = false;
                    break;
                }
                idx.push_back(pool_index(make_edge(c[xi], y)));
            }
            if (valid) {
                std::sort(idx.begin(), idx.end());
                inst.star_edges[i][xi] = std::move(idx);
                any_center = true;
            } else {
                inst.star_edges[i][xi].clear();
                inst.star_edges[i][xi].push_back(-1); // marker: invalid center
            }
        }
        if (!any_center) infeasible.push_back(i);
    }
    if (!infeasible.empty())
        throw infeasible_error("no spanning star in the feasibility graph for " +
                                   std::to_string(infeasible.size()) +
                                   " communities",
                               infeasible);
    return inst;
}

bool is_valid_center(const std::vector<std::int32_t>& idx) {
    return idx.empty() || idx.front() >= 0;
}

} // namespace

std::vector<Edge> opt_sparsestars(const Graph& g0, const CommunitySet& cs,
                                  const OracleBudget& budget) {
    StarInstance inst = build_star_instance(g0, cs, budget, true);
    Deadline deadline(budget.timeout_seconds);
    const std::size_t m = inst.pool.size();

    std::vector<char> picked(m, 0);
    std::vector<std::size_t> selected;

    auto feasible = [&]() {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            bool has = false;
            for (const auto& idx : inst.star_edges[i]) {
                if (!is_valid_center(idx)) continue;
                bool all = true;
                for (std::int32_t e : idx)
                    if (!picked[static_cast<std::size_t>(e)]) {
                        all = false;
                        break;
                    }
                if (all) {
                    has = true;
                    break;
                }
            }
            if (!has) return false;
        }
        return true;
    };

    std::function<bool(std::size_t, std::size_t)> extend =
        [&](std::size_t pos, std::size_t slots) -> bool {
        deadline.tick();
        if (slots == 0) return feasible();
        for (std::size_t idx = pos; idx + slots <= m; ++idx) {
            picked[idx] = 1;
            selected.push_back(idx);
            if (extend(idx + 1, slots - 1)) return true;
            picked[idx] = 0;
            selected.pop_back();
        }
        return false;
    };

    std::size_t lower = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        lower = std::max(lower, cs.member_count(i) - 1);

    for (std::size_t k = lower; k <= m; ++k) {
        selected.clear();
        std::fill(picked.begin(), picked.end(), 0);
        if (extend(0, k)) {
            std::vector<Edge> out;
            for (std::size_t idx : selected) out.push_back(inst.pool[idx]);
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    throw contract_error("opt_sparsestars: no solution after feasibility check");
}

namespace {

// Shared center-assignment search. For each community pick a valid center;
// track distinct undirected edges or directed arcs of the induced stars.
template <bool Directed>
struct CenterAssignmentSearch {
    const CommunitySet& cs;
    const StarInstance& inst;
    Deadline& deadline;

    std::vector<int> edge_use = {};           // undirected: per pool index
    std::map<Arc, int> arc_use = {};          // directed
    std::size_t distinct = 0;
    std::vector<VertexId> chosen = {};        // center per community

    bool have_best = false;
    std::size_t best_size = 0;
    std::vector<Edge> best_edges = {};
    std::vector<Arc> best_arcs = {};

    void run() {
        chosen.assign(cs.size(), 0);
        if constexpr (!Directed) edge_use.assign(inst.pool.size(), 0);
        assign(0);
    }

    void assign(std::size_t i) {
        deadline.tick();
        if (have_best && distinct > best_size) return;
        if (i == cs.size()) {
            finish();
            return;
        }
        auto c = cs.members(i);
        for (std::size_t xi = 0; xi < c.size(); ++xi) {
            const auto& star = inst.star_edges[i][xi];
            if (!is_valid_center(star)) continue;
            std::size_t added = take(i, xi);
            chosen[i] = c[xi];
            assign(i + 1);
            release(i, xi, added);
        }
    }

    std::size_t take(std::size_t i, std::size_t xi) {
        std::size_t added = 0;
        if constexpr (Directed) {
            VertexId x = cs.members(i)[xi];
            for (VertexId y : cs.members(i)) {
                if (y == x) continue;
                if (arc_use[Arc{x, y}]++ == 0) ++added;
            }
        } else {
            for (std::int32_t e : inst.star_edges[i][xi])
                if (edge_use[static_cast<std::size_t>(e)]++ == 0) ++added;
        }
        distinct += added;
        return added;
    }

    void release(std::size_t i, std::size_t xi, std::size_t added) {
        if constexpr (Directed) {
            VertexId x = cs.members(i)[xi];
            for (VertexId y : cs.members(i)) {
                if (y == x) continue;
                auto it = arc_use.find(Arc{x, y});
                if (--it->second == 0) arc_use.erase(it);
            }
        } else {
            for (std::int32_t e : inst.star_edges[i][xi])
                --edge_use[static_cast<std::size_t>(e)];
        }
        distinct -= added;
    }

    void finish() {
        if constexpr (Directed) {
            std::vector<Arc> cand;
            cand.reserve(arc_use.size());
            for (const auto& [arc, n] : arc_use)
                if (n > 0) cand.push_back(arc);
            if (!have_best || cand.size() < best_size ||
                (cand.size() == best_size && cand < best_arcs)) {
                have_best = true;
                best_size = cand.size();
                best_arcs = std::move(cand);
            }
        } else {
            std::vector<Edge> cand;
            for (std::size_t idx = 0; idx < edge_use.size(); ++idx)
                if (edge_use[idx] > 0) cand.push_back(inst.pool[idx]);
            if (!have_best || cand.size() < best_size ||
                (cand.size() == best_size && cand < best_edges)) {
                have_best = true;
                best_size = cand.size();
                best_edges = std::move(cand);
            }
        }
    }
};

} // namespace

std::vector<Edge> opt_sparsestars_centers(const Graph& g0,
                                          const CommunitySet& cs,
                                          const OracleBudget& budget) {
    if (cs.size() > budget.max_hyperedge_universe)
        throw budget_error("community count exceeds hyperedge budget");
    StarInstance inst = build_star_instance(g0, cs, budget, false);
    Deadline deadline(budget.timeout_seconds);
    CenterAssignmentSearch<false> search{cs, inst, deadline};
    search.run();
    return search.best_edges;
}

std::vector<Arc> opt_sparsedistars(const Graph& g0, const CommunitySet& cs,
                                   const OracleBudget& budget) {
    if (cs.size() > budget.max_hyperedge_universe)
        throw budget_error("community count exceeds hyperedge budget");
    StarInstance inst = build_star_instance(g0, cs, budget, false);
    Deadline deadline(budget.timeout_seconds);
    CenterAssignmentSearch<true> search{cs, inst, deadline};
    search.run();
    return search.best_arcs;
}

namespace {

struct Block {
    std::vector<std::uint32_t> members;
    std::vector<VertexId> inter;
    std::vector<VertexId> uni;
};

std::vector<VertexId> sorted_intersect(std::span<const VertexId> a,
                                       std::span<const VertexId> b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<VertexId> sorted_union(std::span<const VertexId> a,
                                   std::span<const VertexId> b) {
    std::vector<VertexId> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
}

bool block_realizable(const Graph* g0, const std::vector<VertexId>& inter,
                      const std::vector<VertexId>& uni) {
    if (inter.empty()) return false;
    if (g0 == nullptr) return true;
    for (VertexId x : inter) {
        bool ok = true;
        for (VertexId y : uni) {
            if (y == x) continue;
            if (!g0->has_edge(x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace

MatchingOpt opt_matching(const CommunitySet& cs, const OracleBudget& budget,
                         const Graph* g0) {
    if (cs.size() > budget.max_hyperedge_universe)
        throw budget_error("community count " + std::to_string(cs.size()) +
                           " exceeds hyperedge budget " +
                           std::to_string(budget.max_hyperedge_universe));
    Deadline deadline(budget.timeout_seconds);

    // score upper bound a community can still contribute: fully absorbing
    // C_j into a block saves at most |C_j| - 1 arcs
    std::vector<long long> suffix_gain(cs.size() + 1, 0);
    for (std::size_t j = cs.size(); j-- > 0;)
        suffix_gain[j] = suffix_gain[j + 1] +
                         static_cast<long long>(cs.member_count(j)) - 1;

    std::vector<Block> blocks;
    long long total = 0;
    MatchingOpt best;
    bool have_best = false;

    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        deadline.tick();
        if (have_best && total + suffix_gain[i] <= best.score) return;
        if (i == cs.size()) {
            if (!have_best || total > best.score) {
                have_best = true;
                best.score = total;
                best.blocks.clear();
                for (const Block& b : blocks) best.blocks.push_back(b.members);
            }
            return;
        }
        auto c = cs.members(i);
        // index-based: deeper levels append blocks, which may reallocate
        const std::size_t block_count = blocks.size();
        for (std::size_t bi = 0; bi < block_count; ++bi) {
            auto inter = sorted_intersect(blocks[bi].inter, c);
            if (inter.empty()) continue;
            auto uni = sorted_union(blocks[bi].uni, c);
            if (!block_realizable(g0, inter, uni)) continue;
            long long delta = static_cast<long long>(c.size()) - 1 -
                              (static_cast<long long>(uni.size()) -
                               static_cast<long long>(blocks[bi].uni.size()));
            Block saved = blocks[bi];
            blocks[bi].members.push_back(static_cast<std::uint32_t>(i));
            blocks[bi].inter = std::move(inter);
            blocks[bi].uni = std::move(uni);
            total += delta;
            assign(i + 1);
            total -= delta;
            blocks[bi] = std::move(saved);
        }
        // new singleton block (always realizable: communities are screened
        // for a valid center by the callers that pass g0)
        if (g0 == nullptr ||
            block_realizable(g0, std::vector<VertexId>(c.begin(), c.end()),
                             std::vector<VertexId>(c.begin(), c.end()))) {
            blocks.push_back(Block{{static_cast<std::uint32_t>(i)},
                                   {c.begin(), c.end()},
                                   {c.begin(), c.end()}});
            assign(i + 1);
            blocks.pop_back();
        }
    };
    assign(0);
    if (!have_best)
        throw infeasible_error("no realizable block partition", {});
    return best;
}

} // namespace netsparse
