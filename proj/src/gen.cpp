#include "netsparse/gen.hpp"

#include "netsparse/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

namespace netsparse {

namespace {

// mt19937_64 output is standard-specified; the helpers below keep every
// draw on one engine so instances replay bit-for-bit
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next(std::uint64_t bound) { return engine() % bound; }
    double next_unit() {
        return static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }
};

} // namespace

GenInstance generate_instance(const GenConfig& cfg) {
    if (cfg.n == 0 || cfg.communities == 0)
        throw input_error("generator needs n > 0 and communities > 0");
    if (cfg.min_size == 0 || cfg.min_size > cfg.max_size)
        throw input_error("generator needs 0 < min_size <= max_size");
    if (cfg.max_size > cfg.n)
        throw input_error("community size exceeds vertex count");
    if (!(cfg.overlap >= 0.0 && cfg.overlap <= 1.0))
        throw input_error("overlap outside [0,1]");

    Rng rng(cfg.seed);
    const std::uint32_t hub = 0;
    const std::uint32_t hub_plant =
        cfg.target_tmax > 0 ? std::min(cfg.target_tmax, cfg.communities) : 0;
    const std::uint32_t cap = hub_plant; // 0 means uncapped

    // fresh vertices handed out in shuffled order; hub excluded when planted
    std::vector<VertexId> fresh;
    for (VertexId v = cfg.target_tmax > 0 ? 1 : 0; v < cfg.n; ++v)
        fresh.push_back(v);
    for (std::size_t i = fresh.size(); i > 1; --i)
        std::swap(fresh[i - 1], fresh[rng.next(i)]);

    std::vector<std::uint32_t> count(cfg.n, 0);
    std::vector<VertexId> pool; // vertices already used at least once
    std::vector<std::vector<VertexId>> communities;
    std::vector<VertexId> centers;
    std::set<Edge> edges;

    for (std::uint32_t i = 0; i < cfg.communities; ++i) {
        std::uint32_t size =
            cfg.min_size +
            static_cast<std::uint32_t>(
                rng.next(cfg.max_size - cfg.min_size + 1));
        std::vector<VertexId> members;
        std::set<VertexId> taken;
        if (i < hub_plant) {
            members.push_back(hub);
            taken.insert(hub);
            ++count[hub];
        }
        while (members.size() < size) {
            VertexId v = cfg.n; // sentinel
            bool from_pool =
                cfg.overlap > 0.0 && !pool.empty() && rng.next_unit() < cfg.overlap;
            if (from_pool) {
                for (int tries = 0; tries < 32; ++tries) {
                    VertexId cand = pool[rng.next(pool.size())];
                    if (taken.count(cand)) continue;
                    if (cand == hub && hub_plant > 0) continue;
                    if (cap > 0 && count[cand] >= cap) continue;
                    v = cand;
                    break;
                }
            }
            if (v == cfg.n) {
                if (!fresh.empty()) {
                    v = fresh.back();
                    fresh.pop_back();
                    pool.push_back(v);
                } else if (cfg.overlap == 0.0) {
                    throw input_error(
                        "n too small for disjoint communities of this size");
                } else {
                    // everything is in use; take any admissible pool vertex
                    bool found = false;
                    for (VertexId cand : pool) {
                        if (taken.count(cand)) continue;
                        if (cand == hub && hub_plant > 0) continue;
                        if (cap > 0 && count[cand] >= cap) continue;
                        v = cand;
                        found = true;
                        break;
                    }
                    if (!found)
                        throw input_error("generator exhausted admissible "
                                          "vertices; raise n or tmax");
                }
            }
            members.push_back(v);
            taken.insert(v);
            ++count[v];
        }

        VertexId center =
            taken.count(hub) && hub_plant > 0
                ? hub
                : members[rng.next(members.size())];
        centers.push_back(center);
        for (VertexId v : members)
            if (v != center) edges.insert(make_edge(center, v));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                Edge e = make_edge(members[a], members[b]);
                if (!edges.count(e) && rng.next_unit() < cfg.extra_edge_prob)
                    edges.insert(e);
            }
        communities.push_back(std::move(members));
    }

    GenInstance inst;
    inst.config = cfg;
    inst.cs = CommunitySet(communities);
    inst.planted_centers = std::move(centers);
    inst.actual_tmax = *std::max_element(count.begin(), count.end());
    for (VertexId v = 0; v < cfg.n; ++v)
        inst.labels.intern("v" + std::to_string(v));
    if (cfg.complete) {
        inst.g0 = complete_over_communities(inst.cs, cfg.n);
    } else {
        inst.g0 = Graph(cfg.n, std::vector<Edge>(edges.begin(), edges.end()));
    }

    if (cfg.attributes) {
        std::set<VertexId> planted(inst.planted_centers.begin(),
                                   inst.planted_centers.end());
        // only community members exist in the emitted files
        for (VertexId v = 0; v < cfg.n; ++v) {
            if (count[v] == 0) continue;
            double p = planted.count(v) ? cfg.center_bias : 0.5;
            inst.attrs[inst.labels.label_of(v)]["group"] =
                rng.next_unit() < p ? "a" : "b";
        }
    }
    return inst;
}

void write_instance_files(const GenInstance& inst, const std::string& prefix) {
    {
        std::ofstream out(prefix + ".edges");
        if (!out) throw input_error("cannot write " + prefix + ".edges");
        write_graph(out, inst.g0, inst.labels);
    }
    {
        std::ofstream out(prefix + ".comms");
        if (!out) throw input_error("cannot write " + prefix + ".comms");
        write_communities(out, inst.cs, inst.labels);
    }
    if (inst.config.attributes) {
        std::ofstream out(prefix + ".attrs");
        if (!out) throw input_error("cannot write " + prefix + ".attrs");
        write_attributes(out, inst.attrs);
    }

    nlohmann::ordered_json meta;
    meta["seed"] = inst.config.seed;
    meta["n"] = inst.config.n;
    meta["communities"] = inst.config.communities;
    meta["min_size"] = inst.config.min_size;
    meta["max_size"] = inst.config.max_size;
    meta["overlap"] = inst.config.overlap;
    meta["target_tmax"] = inst.config.target_tmax;
    meta["actual_tmax"] = inst.actual_tmax;
    meta["complete"] = inst.config.complete;
    meta["edges"] = inst.g0.edge_count();
    nlohmann::ordered_json centers = nlohmann::ordered_json::array();
    for (VertexId c : inst.planted_centers)
        centers.push_back(inst.labels.label_of(c));
    meta["planted_centers"] = centers;
    if (inst.config.attributes) {
        // ground-truth attribute tallies over the distinct planted centers
        std::set<VertexId> planted(inst.planted_centers.begin(),
                                   inst.planted_centers.end());
        std::map<std::string, std::size_t> center_counts;
        for (VertexId v : planted)
            ++center_counts[inst.attrs.at(inst.labels.label_of(v)).at("group")];
        meta["planted_center_groups"] = center_counts;
    }
    std::ofstream out(prefix + ".meta.json");
    if (!out) throw input_error("cannot write " + prefix + ".meta.json");
    out << meta.dump(2) << '\n';
}

} // namespace netsparse
