#ifndef NETSPARSE_DENS_HPP
#define NETSPARSE_DENS_HPP

#include "netsparse/potential.hpp"
#include "netsparse/result.hpp"

namespace netsparse {

// Greedy density sparsifier. Starting from the empty selection, repeatedly
// picks the candidate edge with the largest potential gain (divided by the
// edge distance in weighted mode; smallest canonical edge on ties) until
// every community meets its density target, and its connectivity target in
// connectivity mode. Throws infeasible_error when some community cannot be
// satisfied even by the full candidate pool.
//
// Uses a lazy priority queue of stale gain upper bounds; gains only shrink,
// so re-evaluating the top reproduces the plain argmax selection exactly.
SparsifyResult sparsify_density(const Graph& g0, const CommunitySet& cs,
                                const DensConfig& cfg);

// Reference implementation that rescans every candidate each round. Must
// produce the identical selection sequence.
SparsifyResult sparsify_density_naive(const Graph& g0, const CommunitySet& cs,
                                      const DensConfig& cfg);

} // namespace netsparse

#endif
