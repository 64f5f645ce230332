#ifndef NETSPARSE_METRICS_HPP
#define NETSPARSE_METRICS_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"

#include <cstddef>
#include <vector>

namespace netsparse {

// Sparsification quality report.
//   rho    - |E_sparse| / |E_orig|
//   delta  - mean over communities of (sparse avg degree / orig avg degree)
//   lambda - mean over communities of (orig harmonic mean path length /
//            sparse harmonic mean path length)
// Communities where a ratio is undefined (no original edges for delta;
// fewer than two members or no reachable original pair for lambda) are
// skipped and counted. A community disconnected only in the sparsifier
// contributes 0 to lambda.
struct MetricReport {
    double rho = 1.0;
    std::vector<double> avg_degree_orig;
    std::vector<double> avg_degree_sparse;
    std::vector<double> harmonic_sp_orig;
    std::vector<double> harmonic_sp_sparse;
    double delta = 1.0;
    double lambda = 1.0;
    std::size_t delta_skipped = 0;
    std::size_t lambda_skipped = 0;
};

// Requires gs.edges() to be a subset of g0.edges() over the same vertex set.
MetricReport metrics(const Graph& g0, const Graph& gs, const CommunitySet& cs);

} // namespace netsparse

#endif
