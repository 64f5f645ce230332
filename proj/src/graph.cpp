#include "netsparse/graph.hpp"

#include <algorithm>
#include <numeric>

namespace netsparse {

Edge make_edge(VertexId a, VertexId b) {
    if (a == b)
        throw input_error("self-loop on vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

VertexId LabelTable::intern(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, id);
    return id;
}

std::optional<VertexId> LabelTable::id_of(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& LabelTable::label_of(VertexId id) const {
    if (id >= labels_.size())
        throw contract_error("label_of: id out of range");
    return labels_[id];
}

Graph::Graph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    validate();
    build_adjacency();
}

Graph::Graph(VertexId n, std::vector<Edge> edges, std::vector<double> distances)
    : n_(n), edges_(std::move(edges)), dist_(std::move(distances)) {
    if (!dist_.empty()) {
        if (dist_.size() != edges_.size())
            throw input_error("distance list does not match edge list");
        std::vector<std::size_t> order(edges_.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return edges_[a] < edges_[b];
        });
        std::vector<Edge> se(edges_.size());
        std::vector<double> sd(dist_.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            se[i] = edges_[order[i]];
            sd[i] = dist_[order[i]];
        }
        edges_ = std::move(se);
        dist_ = std::move(sd);
    } else {
        std::sort(edges_.begin(), edges_.end());
    }
    validate();
    build_adjacency();
}

void Graph::validate() const {
    for (const Edge& e : edges_) {
        if (e.u >= e.v)
            throw input_error("edge not canonical or self-loop: (" +
                              std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        if (e.v >= n_)
            throw input_error("edge endpoint " + std::to_string(e.v) +
                              " out of range (n=" + std::to_string(n_) + ")");
    }
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw input_error("duplicate edge (" + std::to_string(edges_[i].u) +
                              "," + std::to_string(edges_[i].v) + ")");
    for (double d : dist_)
        if (!(d > 0.0))
            throw input_error("non-positive edge distance");
}

void Graph::build_adjacency() {
    adj_offset_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offset_[e.u + 1];
        ++adj_offset_[e.v + 1];
    }
    for (std::size_t i = 1; i < adj_offset_.size(); ++i)
        adj_offset_[i] += adj_offset_[i - 1];
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
    for (const Edge& e : edges_) {
        adj_[cursor[e.u]++] = e.v;
        adj_[cursor[e.v]++] = e.u;
    }
    // edges_ sorted by (u,v) fills u-rows in order; v-rows need a sort
    for (VertexId v = 0; v < n_; ++v)
        std::sort(adj_.begin() + adj_offset_[v], adj_.begin() + adj_offset_[v + 1]);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= n_ || b >= n_ || a == b) return false;
    if (degree(a) > degree(b)) std::swap(a, b);
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<std::size_t> Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

double Graph::distance(const Edge& e) const {
    auto idx = edge_index(e);
    if (!idx)
        throw contract_error("distance: edge not in graph");
    return distance(*idx);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= n_)
        throw input_error("vertex " + std::to_string(v) + " out of range");
    return {adj_.data() + adj_offset_[v], adj_offset_[v + 1] - adj_offset_[v]};
}

} // namespace netsparse
