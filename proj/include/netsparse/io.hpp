#ifndef NETSPARSE_IO_HPP
#define NETSPARSE_IO_HPP

#include "netsparse/community.hpp"
#include "netsparse/graph.hpp"
#include "netsparse/result.hpp"

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netsparse {

// vertex label -> attribute key -> value
using AttributeTable = std::map<std::string, std::map<std::string, std::string>>;

// Edge list, one "u v" or "u v w" per line (w a positive decimal distance),
// '#' starts a comment, labels interned in order of first appearance.
// Duplicate edges collapse to the minimum distance; self-loops are errors.
Graph parse_graph(std::istream& in, LabelTable& labels);
Graph parse_graph_file(const std::string& path, LabelTable& labels);

// One community per line, whitespace-separated labels; duplicates within a
// line collapse; empty lines are skipped. Unknown labels are errors unless
// allow_new_labels.
CommunitySet parse_communities(std::istream& in, LabelTable& labels,
                               bool allow_new_labels);
CommunitySet parse_communities_file(const std::string& path, LabelTable& labels,
                                    bool allow_new_labels);

// "label key=value ..." lines; every data line must carry the same key set.
AttributeTable parse_attributes(std::istream& in, const LabelTable& labels);
AttributeTable parse_attributes_file(const std::string& path,
                                     const LabelTable& labels);

// Writers emit lines sorted by canonical (u,v) id pairs, which preserves
// the interning order on re-parse: parse(write(x)) == x.
void write_graph(std::ostream& out, const Graph& g, const LabelTable& labels);
void write_edge_list(std::ostream& out, std::span<const Edge> edges,
                     const LabelTable& labels);
void write_communities(std::ostream& out, const CommunitySet& cs,
                       const LabelTable& labels);
void write_attributes(std::ostream& out, const AttributeTable& attrs);

// Feasibility graph for community-only instances: every pair of vertices
// sharing a community. Never materializes pairs outside the communities.
Graph complete_over_communities(const CommunitySet& cs, VertexId n);

enum class Property {
    Density,
    Star,
    Connectivity,
    DensityConnectivity,
};

struct FilterOutcome {
    CommunitySet kept;
    std::vector<double> kept_alphas;         // density properties only
    std::vector<std::size_t> kept_original;  // original index per kept entry
    std::vector<std::size_t> dropped;        // original indices
};

// Drops the communities that fail `property` in g0 itself; the rest admit
// a feasible sparsifier. `alphas` is required for the density properties.
FilterOutcome feasibility_filter(const Graph& g0, const CommunitySet& cs,
                                 Property property,
                                 std::span<const double> alphas = {});

// Per attribute key: value -> (count among distinct star centers, count
// among all vertices). Vertices without the key count under "unknown".
using CenterStats =
    std::map<std::string,
             std::map<std::string, std::pair<std::size_t, std::size_t>>>;

CenterStats center_attribute_stats(const SparsifyResult& result,
                                   const AttributeTable& attrs,
                                   const LabelTable& labels);

} // namespace netsparse

#endif
