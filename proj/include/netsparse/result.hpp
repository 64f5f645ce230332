#ifndef NETSPARSE_RESULT_HPP
#define NETSPARSE_RESULT_HPP

#include "netsparse/graph.hpp"
#include "netsparse/metrics.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace netsparse {

struct CenterInfo {
    VertexId vertex = 0;
    std::uint32_t covered = 0; // communities served by this center
};

// Output of a sparsification run. `satisfied` and `center` are indexed by
// the community set the algorithm ran on (after infeasible communities
// were filtered out). `center`/`center_order` are filled in star mode only;
// `selection_order` in density mode only.
struct SparsifyResult {
    std::vector<Edge> edges; // sorted canonical
    std::vector<Edge> selection_order;
    std::vector<std::uint8_t> satisfied;
    std::vector<std::optional<VertexId>> center;
    std::vector<CenterInfo> center_order; // centers in discovery order
    std::size_t arc_count = 0;            // star mode: directed arcs built
    long long matching_score = 0;         // star mode: total hyperedge score
    MetricReport stats;
};

} // namespace netsparse

#endif
