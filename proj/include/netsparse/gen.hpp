#ifndef NETSPARSE_GEN_HPP
#define NETSPARSE_GEN_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"
#include "netsparse/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace netsparse {

// Planted-community instance generator. Every draw comes from one seeded
// engine, so equal configs produce byte-identical files.
struct GenConfig {
    std::uint64_t seed = 1;
    std::uint32_t n = 30;
    std::uint32_t communities = 6;
    std::uint32_t min_size = 2;
    std::uint32_t max_size = 5;
    // probability a member is drawn from already-used vertices instead of
    // fresh ones; 0 gives pairwise-disjoint communities
    double overlap = 0.3;
    // plant one hub vertex in exactly min(target_tmax, communities)
    // communities and cap everyone else there; 0 disables the hub
    std::uint32_t target_tmax = 0;
    double extra_edge_prob = 0.25; // intra-community edges beyond the star
    bool complete = false;        // feasibility graph = all community pairs
    bool attributes = false;      // emit a 2-value vertex attribute
    double center_bias = 0.8;     // P(planted center gets value "a")
};

struct GenInstance {
    Graph g0;
    CommunitySet cs;
    LabelTable labels;
    AttributeTable attrs;
    std::vector<VertexId> planted_centers; // one per community
    std::uint32_t actual_tmax = 0;
    GenConfig config;
};

GenInstance generate_instance(const GenConfig& cfg);

// Writes <prefix>.edges, <prefix>.comms, <prefix>.meta.json and, when
// attributes are on, <prefix>.attrs.
void write_instance_files(const GenInstance& inst, const std::string& prefix);

} // namespace netsparse

#endif
