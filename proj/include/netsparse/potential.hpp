#ifndef NETSPARSE_POTENTIAL_HPP
#define NETSPARSE_POTENTIAL_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"

#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

namespace netsparse {

// Configuration of the density sparsifier. Density targets come from
// exactly one source: epsilon (per-community fraction of the feasibility
// graph's induced density), a uniform alpha, or alphas already carried by
// the community set.
struct DensConfig {
    bool connectivity = false;
    bool weighted = false;
    std::optional<double> epsilon;
    std::optional<double> alpha;
};

std::vector<double> resolve_alphas(const Graph& g0, const CommunitySet& cs,
                                   const DensConfig& cfg);

// Incremental bookkeeping for the density potential: per-community induced
// edge counts against their required counts, plus component counts when
// connectivity is on. The potential of a community is min(0, count -
// required); the connectivity term is 1 - components. Adding edges never
// decreases any term.
class PotentialState {
public:
    PotentialState(const Graph& g0, const CommunitySet& cs,
                   std::vector<double> alphas, bool connectivity);

    const std::vector<Edge>& candidate_edges() const { return pool_; }
    std::span<const std::uint32_t> communities_of(std::size_t candidate) const;
    double candidate_distance(std::size_t candidate) const {
        return dist_[candidate];
    }

    std::size_t community_count() const { return required_.size(); }
    long long required(std::size_t i) const { return required_[i]; }
    long long count(std::size_t i) const { return counts_[i]; }
    bool connectivity_mode() const { return connectivity_; }
    std::size_t components(std::size_t i) const;

    long long potential_single(std::size_t i) const;
    long long connectivity_potential(std::size_t i) const;
    long long total_potential() const { return total_; }

    // Potential increase from adding the candidate; >= 0.
    long long marginal_gain(std::size_t candidate) const;
    // Edge overload; 0 for edges of g0 outside every community.
    long long marginal_gain(const Edge& e) const;
    // gain / distance (gain / 1 on unweighted graphs)
    double weighted_gain(std::size_t candidate) const;

    void insert(std::size_t candidate);
    void insert(const Edge& e);
    bool inserted(std::size_t candidate) const { return selected_[candidate]; }

    // Communities that cannot reach their target with every candidate edge.
    std::vector<std::size_t> infeasible_communities() const;

private:
    std::size_t member_position(std::size_t i, VertexId v) const;
    std::size_t find_root(std::size_t slot) const;

    const Graph* g0_ = nullptr;
    const CommunitySet* cs_ = nullptr;
    bool connectivity_ = false;

    std::vector<Edge> pool_;
    std::vector<double> dist_;
    std::vector<std::size_t> cover_offset_;
    std::vector<std::uint32_t> cover_;

    std::vector<long long> required_;
    std::vector<long long> counts_;
    std::vector<char> selected_;
    std::unordered_set<Edge, EdgeHash> external_selected_;

    // union-find forest over member slots, one tree set per community
    std::vector<std::size_t> dsu_offset_;
    mutable std::vector<std::size_t> dsu_parent_;
    std::vector<std::size_t> components_;

    long long total_ = 0;
};

// Definition-direct recomputation of the total potential of an arbitrary
// edge selection; shares no state with PotentialState.
long long total_potential_of(const Graph& g0, const CommunitySet& cs,
                             const std::vector<double>& alphas,
                             bool connectivity, std::span<const Edge> selected);

} // namespace netsparse

#endif
