#include "netsparse/properties.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

namespace netsparse {

namespace {

void check_members(const Graph& g, std::span<const VertexId> community) {
    for (VertexId v : community)
        if (!g.has_vertex(v))
            throw input_error("community member " + std::to_string(v) +
                              " not a vertex of the graph");
}

bool in_sorted(std::span<const VertexId> s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

// Union-find over community member positions.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

std::size_t position(std::span<const VertexId> sorted, VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

} // namespace

std::vector<Edge> induced_edges(const Graph& g,
                                std::span<const VertexId> community) {
    check_members(g, community);
    std::vector<Edge> out;
    for (VertexId u : community)
        for (VertexId v : g.neighbors(u))
            if (v > u && in_sorted(community, v)) out.push_back(Edge{u, v});
    return out;
}

std::size_t induced_edge_count(const Graph& g,
                               std::span<const VertexId> community) {
    check_members(g, community);
    std::size_t count = 0;
    for (VertexId u : community)
        for (VertexId v : g.neighbors(u))
            if (v > u && in_sorted(community, v)) ++count;
    return count;
}

long long density_requirement(double alpha, std::size_t community_size) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw input_error("alpha outside [0,1]");
    long long pairs = static_cast<long long>(community_size) *
                      static_cast<long long>(community_size - 1) / 2;
    if (community_size < 2 || alpha == 0.0) return 0;
    long long req =
        static_cast<long long>(std::ceil(alpha * static_cast<double>(pairs) - 1e-9));
    return std::max(req, 0LL);
}

bool density_satisfied(const Graph& g, std::span<const VertexId> community,
                       double alpha) {
    if (community.empty())
        throw input_error("empty community");
    long long req = density_requirement(alpha, community.size());
    return static_cast<long long>(induced_edge_count(g, community)) >= req;
}

std::size_t component_count(const Graph& g,
                            std::span<const VertexId> community) {
    if (community.empty())
        throw input_error("empty community");
    check_members(g, community);
    DisjointSets ds(community.size());
    std::size_t components = community.size();
    for (VertexId u : community)
        for (VertexId v : g.neighbors(u))
            if (v > u && in_sorted(community, v))
                if (ds.merge(position(community, u), position(community, v)))
                    --components;
    return components;
}

bool connected(const Graph& g, std::span<const VertexId> community) {
    return component_count(g, community) == 1;
}

std::vector<VertexId> valid_star_centers(const Graph& g,
                                         std::span<const VertexId> community) {
    check_members(g, community);
    std::vector<VertexId> centers;
    for (VertexId x : community) {
        bool ok = true;
        for (VertexId y : community) {
            if (y == x) continue;
            if (!g.has_edge(x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) centers.push_back(x);
    }
    return centers;
}

std::optional<VertexId> spanning_star_center(
    const Graph& g, std::span<const VertexId> community) {
    check_members(g, community);
    for (VertexId x : community) {
        bool ok = true;
        for (VertexId y : community) {
            if (y == x) continue;
            if (!g.has_edge(x, y)) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    return std::nullopt;
}

double harmonic_mean_shortest_path(const Graph& g,
                                   std::span<const VertexId> community) {
    if (community.size() < 2)
        throw input_error("harmonic mean needs at least two members");
    check_members(g, community);

    const VertexId n = g.vertex_count();
    std::vector<std::int64_t> dist(n, -1);
    std::vector<VertexId> queue;
    double inv_sum = 0.0;

    // BFS from every member but the last; community is sorted, so the
    // targets of source community[si] are exactly the members after it.
    for (std::size_t si = 0; si + 1 < community.size(); ++si) {
        VertexId src = community[si];
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(src);
        dist[src] = 0;
        std::size_t remaining = community.size() - si - 1;
        for (std::size_t head = 0; head < queue.size() && remaining > 0; ++head) {
            VertexId u = queue[head];
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                if (w > src && in_sorted(community, w)) --remaining;
                queue.push_back(w);
            }
        }
        for (std::size_t sj = si + 1; sj < community.size(); ++sj) {
            VertexId other = community[sj];
            if (dist[other] > 0)
                inv_sum += 1.0 / static_cast<double>(dist[other]);
        }
    }

    double pairs = static_cast<double>(community.size()) *
                   static_cast<double>(community.size() - 1) / 2.0;
    if (inv_sum == 0.0) return std::numeric_limits<double>::infinity();
    return pairs / inv_sum;
}

std::vector<Edge> community_candidate_edges(const Graph& g,
                                            const CommunitySet& cs) {
    std::vector<Edge> pool;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto ind = induced_edges(g, cs.members(i));
        pool.insert(pool.end(), ind.begin(), ind.end());
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    return pool;
}

} // namespace netsparse
