#ifndef NETSPARSE_GRAPH_HPP
#define NETSPARSE_GRAPH_HPP

#include "netsparse/errors.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace netsparse {

using VertexId = std::uint32_t;

// Canonical undirected edge, always u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Canonicalizes the pair; throws input_error on a self-loop.
Edge make_edge(VertexId a, VertexId b);

// Directed arc of a star, center first.
struct Arc {
    VertexId from = 0;
    VertexId to = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct EdgeHash {
    std::size_t operator()(const Edge& e) const noexcept {
        return std::hash<std::uint64_t>{}(
            (static_cast<std::uint64_t>(e.u) << 32) | e.v);
    }
};

// Bijective label <-> dense id table. Ids are assigned in insertion order,
// so identical input files always produce identical id assignments.
class LabelTable {
public:
    // Returns the id of `label`, interning it if unseen.
    VertexId intern(const std::string& label);

    std::optional<VertexId> id_of(const std::string& label) const;
    const std::string& label_of(VertexId id) const;
    VertexId size() const { return static_cast<VertexId>(labels_.size()); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> ids_;
};

// Immutable undirected graph over dense vertex ids 0..n-1 with an optional
// positive distance per edge (unit when absent). Edges are stored sorted in
// canonical order; adjacency is CSR with sorted neighbor ranges.
class Graph {
public:
    Graph() = default;
    Graph(VertexId n, std::vector<Edge> edges);
    Graph(VertexId n, std::vector<Edge> edges, std::vector<double> distances);

    VertexId vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool weighted() const { return !dist_.empty(); }
    double distance(std::size_t edge_index) const {
        return dist_.empty() ? 1.0 : dist_[edge_index];
    }
    // Throws contract_error if e is not an edge of the graph.
    double distance(const Edge& e) const;

    bool has_vertex(VertexId v) const { return v < n_; }
    bool has_edge(VertexId a, VertexId b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    // Position of e in edges(), if present.
    std::optional<std::size_t> edge_index(const Edge& e) const;

    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_ && a.dist_ == b.dist_;
    }

private:
    void build_adjacency();
    void validate() const;

    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> dist_; // empty or parallel to edges_
    std::vector<std::size_t> adj_offset_;
    std::vector<VertexId> adj_;
};

} // namespace netsparse

#endif
