#include "netsparse/potential.hpp"

#include "netsparse/properties.hpp"

#include <algorithm>
#include <numeric>

namespace netsparse {

std::vector<double> resolve_alphas(const Graph& g0, const CommunitySet& cs,
                                   const DensConfig& cfg) {
    if (cs.empty()) return {};
    int sources = (cfg.epsilon ? 1 : 0) + (cfg.alpha ? 1 : 0) +
                  (cs.has_alphas() ? 1 : 0);
    if (sources != 1)
        throw input_error("exactly one density source required: epsilon, "
                          "uniform alpha, or per-community alphas");
    std::vector<double> alphas(cs.size());
    if (cfg.alpha) {
        if (!(*cfg.alpha >= 0.0 && *cfg.alpha <= 1.0))
            throw input_error("alpha outside [0,1]");
        std::fill(alphas.begin(), alphas.end(), *cfg.alpha);
    } else if (cfg.epsilon) {
        if (!(*cfg.epsilon >= 0.0 && *cfg.epsilon <= 1.0))
            throw input_error("epsilon outside [0,1]");
        for (std::size_t i = 0; i < cs.size(); ++i) {
            auto c = cs.members(i);
            double pairs = static_cast<double>(c.size()) *
                           static_cast<double>(c.size() - 1) / 2.0;
            double density =
                pairs > 0.0
                    ? static_cast<double>(induced_edge_count(g0, c)) / pairs
                    : 0.0;
            alphas[i] = *cfg.epsilon * density;
        }
    } else {
        alphas = cs.alphas();
    }
    return alphas;
}

PotentialState::PotentialState(const Graph& g0, const CommunitySet& cs,
                               std::vector<double> alphas, bool connectivity)
    : g0_(&g0), cs_(&cs), connectivity_(connectivity) {
    if (alphas.size() != cs.size())
        throw contract_error("PotentialState: alpha list size mismatch");
    cs.validate_against(g0.vertex_count());

    pool_ = community_candidate_edges(g0, cs);
    dist_.resize(pool_.size());
    for (std::size_t idx = 0; idx < pool_.size(); ++idx)
        dist_[idx] = g0.distance(pool_[idx]);

    // invert the membership: for every candidate edge, the communities
    // containing both endpoints
    std::vector<std::vector<std::uint32_t>> cover(pool_.size());
    counts_.assign(cs.size(), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        required_.push_back(density_requirement(alphas[i], c.size()));
        for (const Edge& e : induced_edges(g0, c)) {
            auto it = std::lower_bound(pool_.begin(), pool_.end(), e);
            cover[static_cast<std::size_t>(it - pool_.begin())].push_back(
                static_cast<std::uint32_t>(i));
        }
    }
    cover_offset_.assign(1, 0);
    for (auto& v : cover) {
        cover_.insert(cover_.end(), v.begin(), v.end());
        cover_offset_.push_back(cover_.size());
    }
    selected_.assign(pool_.size(), 0);

    total_ = -std::accumulate(required_.begin(), required_.end(), 0LL);
    if (connectivity_) {
        dsu_offset_.assign(1, 0);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            components_.push_back(cs.member_count(i));
            total_ += 1 - static_cast<long long>(cs.member_count(i));
            dsu_offset_.push_back(dsu_offset_.back() + cs.member_count(i));
        }
        dsu_parent_.resize(dsu_offset_.back());
        std::iota(dsu_parent_.begin(), dsu_parent_.end(), std::size_t{0});
    }
}

std::span<const std::uint32_t> PotentialState::communities_of(
    std::size_t candidate) const {
    return {cover_.data() + cover_offset_[candidate],
            cover_offset_[candidate + 1] - cover_offset_[candidate]};
}

std::size_t PotentialState::member_position(std::size_t i, VertexId v) const {
    auto c = cs_->members(i);
    return static_cast<std::size_t>(
        std::lower_bound(c.begin(), c.end(), v) - c.begin());
}

std::size_t PotentialState::find_root(std::size_t slot) const {
    while (dsu_parent_[slot] != slot)
        slot = dsu_parent_[slot] = dsu_parent_[dsu_parent_[slot]];
    return slot;
}

std::size_t PotentialState::components(std::size_t i) const {
    if (!connectivity_)
        throw contract_error("components: connectivity mode is off");
    return components_[i];
}

long long PotentialState::potential_single(std::size_t i) const {
    return std::min(0LL, counts_[i] - required_[i]);
}

long long PotentialState::connectivity_potential(std::size_t i) const {
    return 1 - static_cast<long long>(components(i));
}

long long PotentialState::marginal_gain(std::size_t candidate) const {
    if (selected_[candidate])
        throw contract_error("marginal_gain: edge already selected");
    long long gain = 0;
    for (std::uint32_t i : communities_of(candidate)) {
        if (counts_[i] < required_[i]) ++gain;
        if (connectivity_) {
            const Edge& e = pool_[candidate];
            std::size_t a =
                find_root(dsu_offset_[i] + member_position(i, e.u));
            std::size_t b =
                find_root(dsu_offset_[i] + member_position(i, e.v));
            if (a != b) ++gain;
        }
    }
    return gain;
}

long long PotentialState::marginal_gain(const Edge& e) const {
    auto it = std::lower_bound(pool_.begin(), pool_.end(), e);
    if (it != pool_.end() && *it == e)
        return marginal_gain(static_cast<std::size_t>(it - pool_.begin()));
    if (!g0_->has_edge(e))
        throw contract_error("marginal_gain: edge not in the feasibility graph");
    if (external_selected_.count(e))
        throw contract_error("marginal_gain: edge already selected");
    return 0; // inside no community, gain is zero forever
}

double PotentialState::weighted_gain(std::size_t candidate) const {
    return static_cast<double>(marginal_gain(candidate)) / dist_[candidate];
}

void PotentialState::insert(std::size_t candidate) {
    if (selected_[candidate])
        throw contract_error("insert: edge already selected");
    selected_[candidate] = 1;
    for (std::uint32_t i : communities_of(candidate)) {
        if (counts_[i] < required_[i]) ++total_;
        ++counts_[i];
        if (connectivity_) {
            const Edge& e = pool_[candidate];
            std::size_t a =
                find_root(dsu_offset_[i] + member_position(i, e.u));
            std::size_t b =
                find_root(dsu_offset_[i] + member_position(i, e.v));
            if (a != b) {
                dsu_parent_[b] = a;
                --components_[i];
                ++total_;
            }
        }
    }
}

void PotentialState::insert(const Edge& e) {
    auto it = std::lower_bound(pool_.begin(), pool_.end(), e);
    if (it != pool_.end() && *it == e) {
        insert(static_cast<std::size_t>(it - pool_.begin()));
        return;
    }
    if (!g0_->has_edge(e))
        throw contract_error("insert: edge not in the feasibility graph");
    if (!external_selected_.insert(e).second)
        throw contract_error("insert: edge already selected");
}

std::vector<std::size_t> PotentialState::infeasible_communities() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cs_->size(); ++i) {
        auto c = cs_->members(i);
        bool bad =
            static_cast<long long>(induced_edge_count(*g0_, c)) < required_[i];
        if (!bad && connectivity_) bad = !connected(*g0_, c);
        if (bad) out.push_back(i);
    }
    return out;
}

long long total_potential_of(const Graph&, const CommunitySet& cs,
                             const std::vector<double>& alphas,
                             bool connectivity,
                             std::span<const Edge> selected) {
    if (alphas.size() != cs.size())
        throw contract_error("total_potential_of: alpha list size mismatch");
    long long total = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        long long required = density_requirement(alphas[i], c.size());
        long long count = 0;
        std::vector<std::size_t> parent(c.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::size_t comps = c.size();
        for (const Edge& e : selected) {
            if (!std::binary_search(c.begin(), c.end(), e.u) ||
                !std::binary_search(c.begin(), c.end(), e.v))
                continue;
            ++count;
            auto pos = [&](VertexId v) {
                return static_cast<std::size_t>(
                    std::lower_bound(c.begin(), c.end(), v) - c.begin());
            };
            std::size_t a = find(pos(e.u)), b = find(pos(e.v));
            if (a != b) {
                parent[b] = a;
                --comps;
            }
        }
        total += std::min(0LL, count - required);
        if (connectivity) total += 1 - static_cast<long long>(comps);
    }
    return total;
}

} // namespace netsparse
