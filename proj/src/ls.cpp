#include "netsparse/ls.hpp"

#include "netsparse/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace netsparse {

double jaccard_edge_score(const Graph& g, const Edge& e,
                          bool closed_neighborhoods) {
    if (!g.has_edge(e))
        throw contract_error("jaccard_edge_score: edge not in graph");
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    std::vector<VertexId> a(nu.begin(), nu.end());
    std::vector<VertexId> b(nv.begin(), nv.end());
    if (closed_neighborhoods) {
        a.insert(std::lower_bound(a.begin(), a.end(), e.u), e.u);
        b.insert(std::lower_bound(b.begin(), b.end(), e.v), e.v);
    }
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++inter;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    std::size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

namespace {

struct RankedIncidence {
    // per vertex: incident edge indices, best score first
    std::vector<std::size_t> offset;
    std::vector<std::size_t> edge_index;
};

RankedIncidence rank_incident_edges(const Graph& g,
                                    const std::vector<double>& score) {
    const std::size_t n = g.vertex_count();
    RankedIncidence r;
    r.offset.assign(n + 1, 0);
    for (const Edge& e : g.edges()) {
        ++r.offset[e.u + 1];
        ++r.offset[e.v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) r.offset[i] += r.offset[i - 1];
    r.edge_index.resize(2 * g.edge_count());
    std::vector<std::size_t> cursor(r.offset.begin(), r.offset.end() - 1);
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx) {
        const Edge& e = g.edges()[idx];
        r.edge_index[cursor[e.u]++] = idx;
        r.edge_index[cursor[e.v]++] = idx;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto begin = r.edge_index.begin() + r.offset[v];
        auto end = r.edge_index.begin() + r.offset[v + 1];
        std::sort(begin, end, [&](std::size_t a, std::size_t b) {
            if (score[a] != score[b]) return score[a] > score[b];
            return g.edges()[a] < g.edges()[b];
        });
    }
    return r;
}

std::size_t keep_count(std::size_t degree, double f) {
    if (degree == 0) return 0;
    if (f >= 1.0) return degree;
    if (f <= 0.0) return 1;
    double raw = std::pow(static_cast<double>(degree), f);
    auto k = static_cast<std::size_t>(std::ceil(raw));
    return std::min(std::max<std::size_t>(k, 1), degree);
}

std::size_t union_size(const Graph& g, const RankedIncidence& ranked,
                       double f, std::vector<char>& taken) {
    std::fill(taken.begin(), taken.end(), 0);
    std::size_t selected = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t deg = ranked.offset[v + 1] - ranked.offset[v];
        std::size_t keep = keep_count(deg, f);
        for (std::size_t j = 0; j < keep; ++j) {
            std::size_t idx = ranked.edge_index[ranked.offset[v] + j];
            if (!taken[idx]) {
                taken[idx] = 1;
                ++selected;
            }
        }
    }
    return selected;
}

} // namespace

LsResult ls_sparsify(const Graph& g, const LsConfig& cfg) {
    if (cfg.target_edges == 0 || cfg.target_edges > g.edge_count())
        throw input_error("target edge count must be in [1, |E|]");
    if (cfg.tolerance < 0.0)
        throw input_error("tolerance must be nonnegative");

    std::vector<double> score(g.edge_count());
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
        score[idx] = jaccard_edge_score(g, g.edges()[idx],
                                        cfg.closed_neighborhoods);
    RankedIncidence ranked = rank_incident_edges(g, score);

    // the union size only changes where some ceil(deg^f) jumps; evaluate at
    // midpoints between consecutive jump exponents to stay clear of the
    // floating boundary, plus the exact endpoints 0 and 1
    std::vector<double> points{0.0};
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t deg = ranked.offset[v + 1] - ranked.offset[v];
        for (std::size_t k = 1; k < deg; ++k)
            points.push_back(std::log(static_cast<double>(k)) /
                             std::log(static_cast<double>(deg)));
    }
    points.push_back(1.0);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<double> evals{0.0};
    for (std::size_t i = 1; i < points.size(); ++i)
        evals.push_back(0.5 * (points[i - 1] + points[i]));
    evals.push_back(1.0);

    std::vector<char> taken(g.edge_count(), 0);
    auto size_at = [&](std::size_t i) {
        return union_size(g, ranked, evals[i], taken);
    };

    // first evaluation point whose union reaches the target
    std::size_t lo = 0, hi = evals.size() - 1;
    if (size_at(lo) < cfg.target_edges) {
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (size_at(mid) < cfg.target_edges)
                lo = mid;
            else
                hi = mid;
        }
    } else {
        hi = lo;
    }

    std::size_t pick = hi;
    if (hi > 0) {
        std::size_t under = size_at(hi - 1);
        std::size_t over = size_at(hi);
        // nearest achievable size; prefer the larger on a tie
        if (cfg.target_edges - under < over - cfg.target_edges) pick = hi - 1;
    }

    LsResult result;
    result.exponent = evals[pick];
    std::size_t achieved = union_size(g, ranked, evals[pick], taken);
    result.edges.reserve(achieved);
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
        if (taken[idx]) result.edges.push_back(g.edges()[idx]);
    double band = cfg.tolerance * static_cast<double>(cfg.target_edges);
    result.within_tolerance =
        std::abs(static_cast<double>(achieved) -
                 static_cast<double>(cfg.target_edges)) <= band;
    return result;
}

} // namespace netsparse
