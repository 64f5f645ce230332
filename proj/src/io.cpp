#include "netsparse/io.hpp"

#include "netsparse/properties.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace netsparse {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(std::move(tok));
    return tokens;
}

[[noreturn]] void line_error(std::size_t lineno, const std::string& what) {
    throw input_error("line " + std::to_string(lineno) + ": " + what);
}

std::string format_distance(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    return in;
}

} // namespace

Graph parse_graph(std::istream& in, LabelTable& labels) {
    std::vector<Edge> edges;
    std::unordered_map<Edge, std::size_t, EdgeHash> position;
    std::vector<double> dist;
    bool any_weight = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        if (tokens.size() != 2 && tokens.size() != 3)
            line_error(lineno, "expected 'u v' or 'u v w'");
        VertexId u = labels.intern(tokens[0]);
        VertexId v = labels.intern(tokens[1]);
        if (u == v) line_error(lineno, "self-loop on '" + tokens[0] + "'");
        double w = 1.0;
        if (tokens.size() == 3) {
            char* end = nullptr;
            w = std::strtod(tokens[2].c_str(), &end);
            if (end == tokens[2].c_str() || *end != '\0')
                line_error(lineno, "malformed distance '" + tokens[2] + "'");
            if (!(w > 0.0))
                line_error(lineno, "distance must be positive");
            any_weight = true;
        }
        Edge e = make_edge(u, v);
        auto it = position.find(e);
        if (it != position.end()) {
            dist[it->second] = std::min(dist[it->second], w);
        } else {
            position.emplace(e, edges.size());
            edges.push_back(e);
            dist.push_back(w);
        }
    }
    if (any_weight) return Graph(labels.size(), std::move(edges), std::move(dist));
    return Graph(labels.size(), std::move(edges));
}

Graph parse_graph_file(const std::string& path, LabelTable& labels) {
    auto in = open_or_throw(path);
    return parse_graph(in, labels);
}

CommunitySet parse_communities(std::istream& in, LabelTable& labels,
                               bool allow_new_labels) {
    std::vector<std::vector<VertexId>> communities;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        std::vector<VertexId> members;
        for (const std::string& tok : tokens) {
            if (allow_new_labels) {
                members.push_back(labels.intern(tok));
            } else {
                auto id = labels.id_of(tok);
                if (!id)
                    line_error(lineno, "unknown vertex '" + tok + "'");
                members.push_back(*id);
            }
        }
        communities.push_back(std::move(members));
    }
    return CommunitySet(std::move(communities));
}

CommunitySet parse_communities_file(const std::string& path, LabelTable& labels,
                                    bool allow_new_labels) {
    auto in = open_or_throw(path);
    return parse_communities(in, labels, allow_new_labels);
}

AttributeTable parse_attributes(std::istream& in, const LabelTable& labels) {
    AttributeTable table;
    std::set<std::string> keys;
    bool first_line = true;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        if (!labels.id_of(tokens[0]))
            line_error(lineno, "unknown vertex '" + tokens[0] + "'");
        std::map<std::string, std::string> row;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            auto eq = tokens[t].find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 == tokens[t].size())
                line_error(lineno, "expected key=value, got '" + tokens[t] + "'");
            row[tokens[t].substr(0, eq)] = tokens[t].substr(eq + 1);
        }
        std::set<std::string> row_keys;
        for (const auto& [k, v] : row) row_keys.insert(k);
        if (first_line) {
            keys = row_keys;
            first_line = false;
        } else if (row_keys != keys) {
            line_error(lineno, "attribute keys differ from the first line");
        }
        table[tokens[0]] = std::move(row);
    }
    return table;
}

AttributeTable parse_attributes_file(const std::string& path,
                                     const LabelTable& labels) {
    auto in = open_or_throw(path);
    return parse_attributes(in, labels);
}

namespace {

// endpoint labels in lexicographic order, so the file is independent of
// the id assignment and survives a reparse byte-for-byte
std::pair<std::string, std::string> label_pair(const Edge& e,
                                               const LabelTable& labels) {
    std::string a = labels.label_of(e.u);
    std::string b = labels.label_of(e.v);
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

} // namespace

void write_graph(std::ostream& out, const Graph& g, const LabelTable& labels) {
    std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>>
        lines;
    lines.reserve(g.edge_count());
    for (std::size_t idx = 0; idx < g.edge_count(); ++idx)
        lines.emplace_back(label_pair(g.edges()[idx], labels), idx);
    std::sort(lines.begin(), lines.end());
    for (const auto& [pair, idx] : lines) {
        out << pair.first << ' ' << pair.second;
        if (g.weighted()) out << ' ' << format_distance(g.distance(idx));
        out << '\n';
    }
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges,
                     const LabelTable& labels) {
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(edges.size());
    for (const Edge& e : edges) lines.push_back(label_pair(e, labels));
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

void write_communities(std::ostream& out, const CommunitySet& cs,
                       const LabelTable& labels) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<std::string> names;
        for (VertexId v : cs.members(i)) names.push_back(labels.label_of(v));
        std::sort(names.begin(), names.end());
        for (std::size_t j = 0; j < names.size(); ++j)
            out << (j ? " " : "") << names[j];
        out << '\n';
    }
}

void write_attributes(std::ostream& out, const AttributeTable& attrs) {
    for (const auto& [label, row] : attrs) {
        out << label;
        for (const auto& [k, v] : row) out << ' ' << k << '=' << v;
        out << '\n';
    }
}

Graph complete_over_communities(const CommunitySet& cs, VertexId n) {
    cs.validate_against(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        for (std::size_t a = 0; a < c.size(); ++a)
            for (std::size_t b = a + 1; b < c.size(); ++b)
                edges.push_back(Edge{c[a], c[b]});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

FilterOutcome feasibility_filter(const Graph& g0, const CommunitySet& cs,
                                 Property property,
                                 std::span<const double> alphas) {
    bool density = property == Property::Density ||
                   property == Property::DensityConnectivity;
    bool connectivity = property == Property::Connectivity ||
                        property == Property::DensityConnectivity;
    if (density && alphas.size() != cs.size())
        throw contract_error("feasibility_filter: alphas required for the "
                             "density property");
    cs.validate_against(g0.vertex_count());

    FilterOutcome out;
    std::vector<std::vector<VertexId>> kept;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = cs.members(i);
        bool ok = true;
        if (density) ok = density_satisfied(g0, c, alphas[i]);
        if (ok && connectivity) ok = connected(g0, c);
        if (ok && property == Property::Star)
            ok = spanning_star_center(g0, c).has_value();
        if (ok) {
            kept.emplace_back(c.begin(), c.end());
            out.kept_original.push_back(i);
            if (density) out.kept_alphas.push_back(alphas[i]);
        } else {
            out.dropped.push_back(i);
        }
    }
    out.kept = CommunitySet(std::move(kept));
    return out;
}

CenterStats center_attribute_stats(const SparsifyResult& result,
                                   const AttributeTable& attrs,
                                   const LabelTable& labels) {
    std::set<VertexId> centers;
    for (const auto& c : result.center)
        if (c) centers.insert(*c);

    std::set<std::string> keys;
    for (const auto& [label, row] : attrs)
        for (const auto& [k, v] : row) keys.insert(k);

    CenterStats stats;
    for (const std::string& key : keys) {
        auto& bucket = stats[key];
        for (VertexId v = 0; v < labels.size(); ++v) {
            const std::string& label = labels.label_of(v);
            std::string value = "unknown";
            auto row = attrs.find(label);
            if (row != attrs.end()) {
                auto kv = row->second.find(key);
                if (kv != row->second.end()) value = kv->second;
            }
            auto& [center_count, all_count] = bucket[value];
            ++all_count;
            if (centers.count(v)) ++center_count;
        }
    }
    return stats;
}

} // namespace netsparse
