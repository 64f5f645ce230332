#include "netsparse/dens.hpp"

#include "netsparse/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace netsparse {

namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
    std::string out;
    for (std::size_t i = 0; i < idx.size() && i < 8; ++i) {
        if (i) out += ", ";
        out += std::to_string(idx[i]);
    }
    if (idx.size() > 8) out += ", ...";
    return out;
}

SparsifyResult run_greedy(const Graph& g0, const CommunitySet& cs,
                          const DensConfig& cfg, bool lazy) {
    std::vector<double> alphas = resolve_alphas(g0, cs, cfg);
    PotentialState state(g0, cs, alphas, cfg.connectivity);

    auto infeasible = state.infeasible_communities();
    if (!infeasible.empty())
        throw infeasible_error(
            "density target unreachable for communities [" +
                join_indices(infeasible) + "]",
            infeasible);

    const auto& pool = state.candidate_edges();
    SparsifyResult result;

    auto key_of = [&](std::size_t idx) {
        return cfg.weighted ? state.weighted_gain(idx)
                            : static_cast<double>(state.marginal_gain(idx));
    };
    // larger key first, smaller canonical edge on ties
    auto better = [&](double ka, std::size_t ia, double kb, std::size_t ib) {
        if (ka != kb) return ka > kb;
        return pool[ia] < pool[ib];
    };

    if (lazy) {
        using Entry = std::pair<double, std::size_t>;
        auto cmp = [&](const Entry& a, const Entry& b) {
            return better(b.first, b.second, a.first, a.second);
        };
        std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
        for (std::size_t idx = 0; idx < pool.size(); ++idx)
            queue.push({key_of(idx), idx});

        while (state.total_potential() < 0) {
            if (queue.empty())
                throw contract_error("greedy ran out of candidates before "
                                     "reaching the target");
            auto [stale, idx] = queue.top();
            queue.pop();
            double fresh = key_of(idx);
            if (!queue.empty()) {
                auto [top_key, top_idx] = queue.top();
                if (better(top_key, top_idx, fresh, idx)) {
                    queue.push({fresh, idx});
                    continue;
                }
            }
            if (!(fresh > 0.0))
                throw contract_error("greedy reached a zero-gain maximum "
                                     "with unmet targets");
            state.insert(idx);
            result.selection_order.push_back(pool[idx]);
        }
    } else {
        while (state.total_potential() < 0) {
            double best_key = -1.0;
            std::size_t best_idx = pool.size();
            for (std::size_t idx = 0; idx < pool.size(); ++idx) {
                if (state.inserted(idx)) continue;
                double key = key_of(idx);
                if (best_idx == pool.size() ||
                    better(key, idx, best_key, best_idx)) {
                    best_key = key;
                    best_idx = idx;
                }
            }
            if (best_idx == pool.size() || !(best_key > 0.0))
                throw contract_error("greedy reached a zero-gain maximum "
                                     "with unmet targets");
            state.insert(best_idx);
            result.selection_order.push_back(pool[best_idx]);
        }
    }

    result.edges = result.selection_order;
    std::sort(result.edges.begin(), result.edges.end());
    result.satisfied.assign(cs.size(), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool ok = state.count(i) >= state.required(i);
        if (cfg.connectivity) ok = ok && state.components(i) == 1;
        result.satisfied[i] = ok ? 1 : 0;
    }
    return result;
}

} // namespace

SparsifyResult sparsify_density(const Graph& g0, const CommunitySet& cs,
                                const DensConfig& cfg) {
    return run_greedy(g0, cs, cfg, true);
}

SparsifyResult sparsify_density_naive(const Graph& g0, const CommunitySet& cs,
                                      const DensConfig& cfg) {
    return run_greedy(g0, cs, cfg, false);
}

} // namespace netsparse
