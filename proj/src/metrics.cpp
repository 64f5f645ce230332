#include "netsparse/metrics.hpp"

#include "netsparse/properties.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

namespace netsparse {

namespace {

std::vector<std::uint32_t> component_labels(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    std::vector<VertexId> queue;
    std::uint32_t next = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (label[s] != UINT32_MAX) continue;
        label[s] = next;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (VertexId w : g.neighbors(queue[head]))
                if (label[w] == UINT32_MAX) {
                    label[w] = next;
                    queue.push_back(w);
                }
        ++next;
    }
    return label;
}

// Same value as harmonic_mean_shortest_path, with shared scratch buffers
// and component labels so each BFS stops once its reachable targets are
// found and unreachable ones cost nothing.
double harmonic_batched(const Graph& g, std::span<const VertexId> community,
                        const std::vector<std::uint32_t>& label,
                        std::vector<std::int64_t>& dist,
                        std::vector<VertexId>& queue) {
    double inv_sum = 0.0;
    for (std::size_t si = 0; si + 1 < community.size(); ++si) {
        VertexId src = community[si];
        std::size_t remaining = 0;
        for (std::size_t sj = si + 1; sj < community.size(); ++sj)
            if (label[community[sj]] == label[src]) ++remaining;
        if (remaining == 0) continue;
        queue.clear();
        queue.push_back(src);
        dist[src] = 0;
        for (std::size_t head = 0; head < queue.size() && remaining > 0;
             ++head) {
            VertexId u = queue[head];
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[u] + 1;
                if (w > src &&
                    std::binary_search(community.begin() + si + 1,
                                       community.end(), w))
                    --remaining;
                queue.push_back(w);
            }
        }
        for (std::size_t sj = si + 1; sj < community.size(); ++sj) {
            VertexId other = community[sj];
            if (dist[other] > 0)
                inv_sum += 1.0 / static_cast<double>(dist[other]);
        }
        for (VertexId v : queue) dist[v] = -1;
    }
    double pairs = static_cast<double>(community.size()) *
                   static_cast<double>(community.size() - 1) / 2.0;
    if (inv_sum == 0.0) return std::numeric_limits<double>::infinity();
    return pairs / inv_sum;
}

} // namespace

MetricReport metrics(const Graph& g0, const Graph& gs, const CommunitySet& cs) {
    if (gs.vertex_count() != g0.vertex_count())
        throw contract_error("metrics: vertex sets differ");
    for (const Edge& e : gs.edges())
        if (!g0.has_edge(e))
            throw contract_error("metrics: sparsifier is not a subgraph");
    cs.validate_against(g0.vertex_count());

    MetricReport report;
    report.rho = g0.edge_count() == 0
                     ? 1.0
                     : static_cast<double>(gs.edge_count()) /
                           static_cast<double>(g0.edge_count());

    const double inf = std::numeric_limits<double>::infinity();

    auto label_orig = component_labels(g0);
    auto label_sparse = component_labels(gs);

    report.avg_degree_orig.resize(cs.size());
    report.avg_degree_sparse.resize(cs.size());
    report.harmonic_sp_orig.resize(cs.size());
    report.harmonic_sp_sparse.resize(cs.size());

    // per-community values are independent; compute them strided across
    // workers with private scratch, then reduce sequentially
    auto worker = [&](std::size_t offset, std::size_t stride) {
        std::vector<std::int64_t> dist(g0.vertex_count(), -1);
        std::vector<VertexId> queue;
        for (std::size_t i = offset; i < cs.size(); i += stride) {
            auto c = cs.members(i);
            const double size = static_cast<double>(c.size());
            report.avg_degree_orig[i] =
                2.0 * static_cast<double>(induced_edge_count(g0, c)) / size;
            report.avg_degree_sparse[i] =
                2.0 * static_cast<double>(induced_edge_count(gs, c)) / size;
            report.harmonic_sp_orig[i] =
                c.size() >= 2
                    ? harmonic_batched(g0, c, label_orig, dist, queue)
                    : inf;
            report.harmonic_sp_sparse[i] =
                c.size() >= 2
                    ? harmonic_batched(gs, c, label_sparse, dist, queue)
                    : inf;
        }
    };

    std::size_t workers = 1;
    if (cs.size() >= 256)
        workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (workers == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t t = 0; t < workers; ++t)
            threads.emplace_back(worker, t, workers);
        for (auto& th : threads) th.join();
    }

    double delta_sum = 0.0, lambda_sum = 0.0;
    std::size_t delta_n = 0, lambda_n = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (report.avg_degree_orig[i] > 0.0) {
            delta_sum += report.avg_degree_sparse[i] / report.avg_degree_orig[i];
            ++delta_n;
        } else {
            ++report.delta_skipped;
        }
        double h_orig = report.harmonic_sp_orig[i];
        double h_sparse = report.harmonic_sp_sparse[i];
        if (cs.member_count(i) < 2 || !std::isfinite(h_orig)) {
            ++report.lambda_skipped;
        } else {
            lambda_sum += std::isfinite(h_sparse) ? h_orig / h_sparse : 0.0;
            ++lambda_n;
        }
    }

    report.delta = delta_n > 0 ? delta_sum / static_cast<double>(delta_n) : 1.0;
    report.lambda = lambda_n > 0 ? lambda_sum / static_cast<double>(lambda_n) : 1.0;
    return report;
}

} // namespace netsparse
