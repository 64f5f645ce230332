#ifndef NETSPARSE_LS_HPP
#define NETSPARSE_LS_HPP

#include "netsparse/graph.hpp"

#include <vector>

namespace netsparse {

// Size-matched local-similarity sparsifier: edges are ranked per vertex by
// the Jaccard similarity of the endpoint neighborhoods, each vertex keeps
// its top ceil(degree^f) edges, and f is searched so the union lands within
// tolerance of target_edges.
struct LsConfig {
    std::size_t target_edges = 0;
    double tolerance = 0.05;
    bool closed_neighborhoods = true; // endpoints included in their own sets
};

double jaccard_edge_score(const Graph& g, const Edge& e,
                          bool closed_neighborhoods = true);

struct LsResult {
    std::vector<Edge> edges; // sorted canonical
    double exponent = 1.0;   // degree exponent actually used
    bool within_tolerance = true;
};

LsResult ls_sparsify(const Graph& g, const LsConfig& cfg);

} // namespace netsparse

#endif
