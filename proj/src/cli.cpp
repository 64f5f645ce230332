#include "netsparse/cli.hpp"

#include "netsparse/dens.hpp"
#include "netsparse/errors.hpp"
#include "netsparse/gen.hpp"
#include "netsparse/io.hpp"
#include "netsparse/ls.hpp"
#include "netsparse/metrics.hpp"
#include "netsparse/oracle.hpp"
#include "netsparse/properties.hpp"
#include "netsparse/stars.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

namespace netsparse {

namespace {

using nlohmann::ordered_json;

class Timer {
public:
    double ms() const {
        auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

struct CommonOptions {
    std::string graph_path;
    std::string communities_path;
    std::string attributes_path;
    std::string out_path;
    std::string report_path;
    bool allow_new_vertices = false;
};

struct LoadedInput {
    LabelTable labels;
    Graph g0;
    CommunitySet cs;
    AttributeTable attrs;
    bool design_mode = false;
};

Graph extend_vertices(const Graph& g, VertexId n) {
    if (n <= g.vertex_count()) return g;
    if (!g.weighted()) return Graph(n, g.edges());
    std::vector<double> dist(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) dist[i] = g.distance(i);
    return Graph(n, g.edges(), dist);
}

LoadedInput load_input(const CommonOptions& opt) {
    LoadedInput in;
    if (opt.communities_path.empty())
        throw input_error("--communities is required");
    if (!opt.graph_path.empty()) {
        in.g0 = parse_graph_file(opt.graph_path, in.labels);
        in.cs = parse_communities_file(opt.communities_path, in.labels,
                                       opt.allow_new_vertices);
        in.g0 = extend_vertices(in.g0, in.labels.size());
    } else {
        // network-design mode: the feasibility graph is complete over the
        // community-internal pairs
        in.design_mode = true;
        in.cs = parse_communities_file(opt.communities_path, in.labels, true);
        in.g0 = complete_over_communities(in.cs, in.labels.size());
    }
    if (!opt.attributes_path.empty())
        in.attrs = parse_attributes_file(opt.attributes_path, in.labels);
    return in;
}

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool graph_required) {
    auto* g = cmd->add_option("--graph", opt.graph_path, "edge list file");
    if (graph_required) g->required();
    cmd->add_option("--communities", opt.communities_path,
                    "community file, one community per line");
    cmd->add_option("--out", opt.out_path, "write the sparsified edge list");
    cmd->add_option("--report", opt.report_path, "write the JSON report");
    cmd->add_flag("--allow-new-vertices", opt.allow_new_vertices,
                  "accept community labels missing from the graph");
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << body;
}

void emit_edges(const CommonOptions& opt, std::span<const Edge> edges,
                const LabelTable& labels) {
    if (opt.out_path.empty()) return;
    std::ofstream out(opt.out_path);
    if (!out) throw input_error("cannot write " + opt.out_path);
    write_edge_list(out, edges, labels);
}

void emit_report(const CommonOptions& opt, const ordered_json& report) {
    if (opt.report_path.empty()) return;
    write_text_file(opt.report_path, report.dump(2) + "\n");
}

ordered_json input_section(const CommonOptions& opt, const LoadedInput& in) {
    ordered_json j;
    j["graph"] = opt.graph_path.empty() ? "complete" : opt.graph_path;
    j["communities"] = opt.communities_path;
    j["vertices"] = in.labels.size();
    j["edges"] = in.g0.edge_count();
    j["num_communities"] = in.cs.size();
    return j;
}

ordered_json metrics_section(const MetricReport& m) {
    ordered_json j;
    j["delta"] = m.delta;
    j["lambda"] = m.lambda;
    j["delta_skipped"] = m.delta_skipped;
    j["lambda_skipped"] = m.lambda_skipped;
    return j;
}

ordered_json stats_section(const CenterStats& stats) {
    ordered_json j;
    for (const auto& [key, values] : stats) {
        ordered_json v;
        for (const auto& [value, counts] : values)
            v[value] = {{"centers", counts.first}, {"all", counts.second}};
        j[key] = v;
    }
    return j;
}

ordered_json centers_section(const SparsifyResult& result,
                             const LabelTable& labels) {
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < result.center_order.size() && i < 10; ++i) {
        const CenterInfo& c = result.center_order[i];
        list.push_back({{"vertex", labels.label_of(c.vertex)},
                        {"covered", c.covered}});
    }
    return list;
}

// ---- dens ----------------------------------------------------------------

struct DensOptions {
    CommonOptions common;
    DensConfig cfg;
    double alpha = -1.0;
    double epsilon = -1.0;
};

int cmd_dens(DensOptions& opt) {
    Timer total;
    Timer parse;
    if (opt.alpha >= 0.0) opt.cfg.alpha = opt.alpha;
    if (opt.epsilon >= 0.0) opt.cfg.epsilon = opt.epsilon;
    if (!opt.cfg.alpha && !opt.cfg.epsilon)
        throw input_error("dens needs --alpha or --epsilon");
    LoadedInput in = load_input(opt.common);
    double parse_ms = parse.ms();

    Timer algo;
    std::vector<double> alphas = resolve_alphas(in.g0, in.cs, opt.cfg);
    auto filtered = feasibility_filter(in.g0, in.cs,
                                       opt.cfg.connectivity
                                           ? Property::DensityConnectivity
                                           : Property::Density,
                                       alphas);
    DensConfig run_cfg = opt.cfg;
    run_cfg.alpha.reset();
    run_cfg.epsilon.reset();
    CommunitySet kept = filtered.kept.with_alphas(filtered.kept_alphas);
    SparsifyResult result = sparsify_density(in.g0, kept, run_cfg);
    double algo_ms = algo.ms();

    Timer met;
    Graph gs(in.g0.vertex_count(), result.edges);
    result.stats = metrics(in.g0, gs, kept);
    double metrics_ms = met.ms();

    emit_edges(opt.common, result.edges, in.labels);

    ordered_json report;
    report["input"] = input_section(opt.common, in);
    ordered_json config;
    config["command"] = "dens";
    config["connectivity"] = opt.cfg.connectivity;
    config["weighted"] = opt.cfg.weighted;
    if (opt.cfg.epsilon) config["epsilon"] = *opt.cfg.epsilon;
    if (opt.cfg.alpha) config["alpha"] = *opt.cfg.alpha;
    report["config"] = config;
    report["dropped_communities"] = filtered.dropped;
    report["edges"] = result.edges.size();
    report["rho"] = result.stats.rho;
    ordered_json per_community = ordered_json::array();
    for (std::size_t i = 0; i < kept.size(); ++i)
        per_community.push_back(
            {{"index", filtered.kept_original[i]},
             {"size", kept.member_count(i)},
             {"satisfied", result.satisfied[i] != 0}});
    report["per_community"] = per_community;
    report["metrics"] = metrics_section(result.stats);
    report["centers_top"] = ordered_json::array();
    ordered_json timings;
    timings["parse"] = parse_ms;
    timings["algorithm"] = algo_ms;
    timings["metrics"] = metrics_ms;
    timings["total"] = total.ms();
    report["timings_ms"] = timings;
    emit_report(opt.common, report);

    std::cout << "dens: " << result.edges.size() << " edges, rho "
              << result.stats.rho << ", dropped " << filtered.dropped.size()
              << " communities\n";
    return 0;
}

// ---- stars ---------------------------------------------------------------

struct StarsOptions {
    CommonOptions common;
    std::string center_policy = "min-id";
};

int cmd_stars(StarsOptions& opt) {
    Timer total;
    Timer parse;
    LoadedInput in = load_input(opt.common);
    double parse_ms = parse.ms();
    CenterPolicy policy = opt.center_policy == "max-coverage"
                              ? CenterPolicy::MaxCoverage
                              : CenterPolicy::MinId;

    Timer algo;
    auto filtered = feasibility_filter(in.g0, in.cs, Property::Star);
    SparsifyResult result = sparsify_stars(in.g0, filtered.kept, policy);
    double algo_ms = algo.ms();

    Timer met;
    Graph gs(in.g0.vertex_count(), result.edges);
    result.stats = metrics(in.g0, gs, filtered.kept);
    double metrics_ms = met.ms();

    emit_edges(opt.common, result.edges, in.labels);

    ordered_json report;
    report["input"] = input_section(opt.common, in);
    ordered_json config;
    config["command"] = "stars";
    config["center_policy"] = opt.center_policy;
    report["config"] = config;
    report["dropped_communities"] = filtered.dropped;
    report["edges"] = result.edges.size();
    report["rho"] = result.stats.rho;
    ordered_json per_community = ordered_json::array();
    for (std::size_t i = 0; i < filtered.kept.size(); ++i) {
        ordered_json entry;
        entry["index"] = filtered.kept_original[i];
        entry["size"] = filtered.kept.member_count(i);
        entry["satisfied"] = result.satisfied[i] != 0;
        if (result.center[i])
            entry["center"] = in.labels.label_of(*result.center[i]);
        per_community.push_back(entry);
    }
    report["per_community"] = per_community;
    report["metrics"] = metrics_section(result.stats);
    report["centers_top"] = centers_section(result, in.labels);
    if (!in.attrs.empty())
        report["center_attribute_stats"] =
            stats_section(center_attribute_stats(result, in.attrs, in.labels));
    ordered_json timings;
    timings["parse"] = parse_ms;
    timings["algorithm"] = algo_ms;
    timings["metrics"] = metrics_ms;
    timings["total"] = total.ms();
    report["timings_ms"] = timings;
    emit_report(opt.common, report);

    std::cout << "stars: " << result.edges.size() << " edges, "
              << result.center_order.size() << " centers, rho "
              << result.stats.rho << ", dropped " << filtered.dropped.size()
              << " communities\n";
    return 0;
}

// ---- ls ------------------------------------------------------------------

struct LsOptions {
    CommonOptions common;
    LsConfig cfg;
    bool open_neighborhoods = false;
};

int cmd_ls(LsOptions& opt) {
    Timer total;
    Timer parse;
    LoadedInput in;
    in.g0 = parse_graph_file(opt.common.graph_path, in.labels);
    if (!opt.common.communities_path.empty()) {
        in.cs = parse_communities_file(opt.common.communities_path, in.labels,
                                       opt.common.allow_new_vertices);
        in.g0 = extend_vertices(in.g0, in.labels.size());
    }
    double parse_ms = parse.ms();

    Timer algo;
    opt.cfg.closed_neighborhoods = !opt.open_neighborhoods;
    LsResult ls = ls_sparsify(in.g0, opt.cfg);
    double algo_ms = algo.ms();

    Timer met;
    MetricReport stats;
    if (!in.cs.empty()) {
        Graph gs(in.g0.vertex_count(), ls.edges);
        stats = metrics(in.g0, gs, in.cs);
    } else {
        stats.rho = in.g0.edge_count() == 0
                        ? 1.0
                        : static_cast<double>(ls.edges.size()) /
                              static_cast<double>(in.g0.edge_count());
    }
    double metrics_ms = met.ms();

    emit_edges(opt.common, ls.edges, in.labels);

    ordered_json report;
    report["input"] = input_section(opt.common, in);
    ordered_json config;
    config["command"] = "ls";
    config["target_edges"] = opt.cfg.target_edges;
    config["tolerance"] = opt.cfg.tolerance;
    config["closed_neighborhoods"] = opt.cfg.closed_neighborhoods;
    config["exponent"] = ls.exponent;
    config["within_tolerance"] = ls.within_tolerance;
    report["config"] = config;
    report["dropped_communities"] = ordered_json::array();
    report["edges"] = ls.edges.size();
    report["rho"] = stats.rho;
    report["per_community"] = ordered_json::array();
    report["metrics"] = metrics_section(stats);
    report["centers_top"] = ordered_json::array();
    ordered_json timings;
    timings["parse"] = parse_ms;
    timings["algorithm"] = algo_ms;
    timings["metrics"] = metrics_ms;
    timings["total"] = total.ms();
    report["timings_ms"] = timings;
    emit_report(opt.common, report);

    if (!ls.within_tolerance)
        std::cerr << "warning: nearest achievable size "
                  << ls.edges.size() << " is outside the tolerance band\n";
    std::cout << "ls: " << ls.edges.size() << " edges (target "
              << opt.cfg.target_edges << "), exponent " << ls.exponent << "\n";
    return 0;
}

// ---- oracle ----------------------------------------------------------------

struct OracleOptions {
    CommonOptions common;
    std::string problem;
    double alpha = -1.0;
    double epsilon = -1.0;
    bool connectivity = false;
    bool weighted = false;
    OracleBudget budget;
};

int cmd_oracle(OracleOptions& opt) {
    LoadedInput in = load_input(opt.common);

    ordered_json report;
    report["problem"] = opt.problem;
    std::vector<Edge> edges;
    if (opt.problem == "dens") {
        DensConfig cfg;
        if (opt.alpha >= 0.0) cfg.alpha = opt.alpha;
        if (opt.epsilon >= 0.0) cfg.epsilon = opt.epsilon;
        if (!cfg.alpha && !cfg.epsilon)
            throw input_error("oracle dens needs --alpha or --epsilon");
        auto alphas = resolve_alphas(in.g0, in.cs, cfg);
        edges = opt_sparsedens(in.g0, in.cs, alphas, opt.connectivity,
                               opt.budget, opt.weighted);
        report["optimal_size"] = edges.size();
    } else if (opt.problem == "stars") {
        edges = opt_sparsestars(in.g0, in.cs, opt.budget);
        report["optimal_size"] = edges.size();
    } else if (opt.problem == "distars") {
        auto arcs = opt_sparsedistars(in.g0, in.cs, opt.budget);
        report["optimal_size"] = arcs.size();
        ordered_json list = ordered_json::array();
        for (const Arc& a : arcs)
            list.push_back(in.labels.label_of(a.from) + " " +
                           in.labels.label_of(a.to));
        report["arcs"] = list;
        emit_report(opt.common, report);
        if (!opt.common.out_path.empty()) {
            std::string body;
            for (const Arc& a : arcs)
                body += in.labels.label_of(a.from) + " " +
                        in.labels.label_of(a.to) + "\n";
            write_text_file(opt.common.out_path, body);
        }
        std::cout << "oracle distars: " << arcs.size() << " arcs\n";
        return 0;
    } else if (opt.problem == "matching") {
        auto matching = opt_matching(in.cs, opt.budget,
                                     in.design_mode ? nullptr : &in.g0);
        report["optimal_score"] = matching.score;
        ordered_json blocks = ordered_json::array();
        for (const auto& block : matching.blocks) blocks.push_back(block);
        report["blocks"] = blocks;
        emit_report(opt.common, report);
        std::cout << "oracle matching: score " << matching.score << "\n";
        return 0;
    } else {
        throw input_error("unknown oracle problem '" + opt.problem + "'");
    }

    ordered_json list = ordered_json::array();
    for (const Edge& e : edges)
        list.push_back(in.labels.label_of(e.u) + " " + in.labels.label_of(e.v));
    report["edges"] = list;
    emit_report(opt.common, report);
    emit_edges(opt.common, edges, in.labels);
    std::cout << "oracle " << opt.problem << ": " << edges.size()
              << " edges\n";
    return 0;
}

// ---- metrics ---------------------------------------------------------------

struct MetricsOptions {
    CommonOptions common;
    std::string sparse_path;
};

int cmd_metrics(MetricsOptions& opt) {
    LoadedInput in = load_input(opt.common);
    Graph gs = parse_graph_file(opt.sparse_path, in.labels);
    if (in.labels.size() > in.g0.vertex_count())
        throw input_error("sparsifier uses labels absent from the graph");
    gs = extend_vertices(gs, in.g0.vertex_count());

    MetricReport stats;
    try {
        stats = metrics(in.g0, gs, in.cs);
    } catch (const contract_error& e) {
        throw input_error(e.what());
    }

    ordered_json report;
    report["input"] = input_section(opt.common, in);
    ordered_json config;
    config["command"] = "metrics";
    config["sparse"] = opt.sparse_path;
    report["config"] = config;
    report["dropped_communities"] = ordered_json::array();
    report["edges"] = gs.edge_count();
    report["rho"] = stats.rho;
    ordered_json per_community = ordered_json::array();
    for (std::size_t i = 0; i < in.cs.size(); ++i)
        per_community.push_back(
            {{"index", i}, {"size", in.cs.member_count(i)}});
    report["per_community"] = per_community;
    report["metrics"] = metrics_section(stats);
    report["centers_top"] = ordered_json::array();
    emit_report(opt.common, report);

    std::cout << "metrics: rho " << stats.rho << ", delta " << stats.delta
              << ", lambda " << stats.lambda << "\n";
    return 0;
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
    GenConfig cfg;
    std::string out_prefix = "instance";
};

int cmd_gen(GenOptions& opt) {
    GenInstance inst = generate_instance(opt.cfg);
    write_instance_files(inst, opt.out_prefix);
    std::cout << "gen: wrote " << opt.out_prefix << ".edges ("
              << inst.g0.edge_count() << " edges), " << opt.out_prefix
              << ".comms (" << inst.cs.size() << " communities), tmax "
              << inst.actual_tmax << "\n";
    return 0;
}

// ---- bench -----------------------------------------------------------------

struct BenchOptions {
    CommonOptions common;
    std::string algo = "both";
    double epsilon = -1.0;
    bool connectivity = false;
};

int cmd_bench(BenchOptions& opt) {
    std::string csv = "algo,param,phase,ms,value\n";
    auto row = [&](const std::string& algo, const std::string& param,
                   const std::string& phase, double ms, std::size_t value) {
        csv += algo + "," + param + "," + phase + "," + std::to_string(ms) +
               "," + std::to_string(value) + "\n";
    };

    Timer parse;
    LoadedInput in = load_input(opt.common);
    row("input", "", "parse", parse.ms(), in.g0.edge_count());

    if (opt.algo == "stars" || opt.algo == "both") {
        Timer filter;
        auto filtered = feasibility_filter(in.g0, in.cs, Property::Star);
        row("stars", "", "filter", filter.ms(), filtered.kept.size());
        Timer match;
        auto matching = greedy_matching(in.g0, filtered.kept);
        row("stars", "", "matching", match.ms(), matching.size());
        Timer mat;
        auto dss = materialize_stars(matching, in.g0, filtered.kept);
        row("stars", "", "materialize", mat.ms(), dss.arcs.size());
        Timer und;
        auto edges = undirect(dss.arcs);
        row("stars", "", "undirect", und.ms(), edges.size());
    }
    if (opt.algo == "dens" || opt.algo == "both") {
        std::vector<double> sweep;
        if (opt.epsilon >= 0.0)
            sweep.push_back(opt.epsilon);
        else
            sweep = {0.5, 0.7, 0.9};
        for (double eps : sweep) {
            DensConfig cfg;
            cfg.epsilon = eps;
            cfg.connectivity = opt.connectivity;
            Timer filter;
            auto alphas = resolve_alphas(in.g0, in.cs, cfg);
            auto filtered = feasibility_filter(
                in.g0, in.cs,
                cfg.connectivity ? Property::DensityConnectivity
                                 : Property::Density,
                alphas);
            std::string param = "epsilon=" + std::to_string(eps);
            row("dens", param, "filter", filter.ms(), filtered.kept.size());
            DensConfig run_cfg = cfg;
            run_cfg.epsilon.reset();
            CommunitySet kept = filtered.kept.with_alphas(filtered.kept_alphas);
            Timer algo;
            auto result = sparsify_density(in.g0, kept, run_cfg);
            row("dens", param, "greedy", algo.ms(), result.edges.size());
        }
    }

    if (!opt.common.out_path.empty())
        write_text_file(opt.common.out_path, csv);
    else
        std::cout << csv;
    return 0;
}

} // namespace

int run_cli(std::vector<std::string> args) {
    CLI::App app{"community-constrained network sparsifier"};
    app.require_subcommand(1);

    DensOptions dens;
    auto* dens_cmd = app.add_subcommand(
        "dens", "sparsify while keeping every community dense enough");
    add_common_flags(dens_cmd, dens.common, false);
    auto* alpha_opt =
        dens_cmd->add_option("--alpha", dens.alpha, "uniform density target");
    auto* eps_opt = dens_cmd->add_option(
        "--epsilon", dens.epsilon,
        "density target as a fraction of each community's density");
    alpha_opt->excludes(eps_opt);
    eps_opt->excludes(alpha_opt);
    dens_cmd->add_flag("--connectivity", dens.cfg.connectivity,
                       "also require every community connected");
    dens_cmd->add_flag("--weighted", dens.cfg.weighted,
                       "minimize total edge distance instead of edge count");

    StarsOptions stars;
    auto* stars_cmd = app.add_subcommand(
        "stars", "sparsify so every community induces a spanning star");
    add_common_flags(stars_cmd, stars.common, false);
    stars_cmd->add_option("--attributes", stars.common.attributes_path,
                          "vertex attribute file");
    stars_cmd
        ->add_option("--center-policy", stars.center_policy,
                     "center tie rule: min-id or max-coverage")
        ->check(CLI::IsMember({"min-id", "max-coverage"}));

    LsOptions ls;
    auto* ls_cmd = app.add_subcommand(
        "ls", "local-similarity baseline matched to a target size");
    ls_cmd->add_option("--graph", ls.common.graph_path, "edge list file")
        ->required();
    ls_cmd->add_option("--communities", ls.common.communities_path,
                       "optional community file for the metric report");
    ls_cmd->add_option("--out", ls.common.out_path, "write the edge list");
    ls_cmd->add_option("--report", ls.common.report_path, "write the report");
    ls_cmd->add_flag("--allow-new-vertices", ls.common.allow_new_vertices,
                     "accept community labels missing from the graph");
    ls_cmd->add_option("--target-edges", ls.cfg.target_edges,
                       "edge count to match")
        ->required();
    ls_cmd->add_option("--tolerance", ls.cfg.tolerance,
                       "relative size tolerance");
    ls_cmd->add_flag("--open-neighborhoods", ls.open_neighborhoods,
                     "score with open instead of closed neighborhoods");

    OracleOptions oracle;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "exact solver for small instances");
    oracle_cmd
        ->add_option("problem", oracle.problem,
                     "dens, stars, distars, or matching")
        ->required()
        ->check(CLI::IsMember({"dens", "stars", "distars", "matching"}));
    add_common_flags(oracle_cmd, oracle.common, false);
    oracle_cmd->add_option("--alpha", oracle.alpha, "uniform density target");
    oracle_cmd->add_option("--epsilon", oracle.epsilon,
                           "relative density target");
    oracle_cmd->add_flag("--connectivity", oracle.connectivity,
                         "density oracle also requires connectivity");
    oracle_cmd->add_flag("--weighted", oracle.weighted,
                         "density oracle minimizes total distance");
    oracle_cmd->add_option("--max-candidate-edges",
                           oracle.budget.max_candidate_edges,
                           "refuse larger candidate pools");
    oracle_cmd->add_option("--max-communities",
                           oracle.budget.max_hyperedge_universe,
                           "refuse more communities (stars side)");
    oracle_cmd->add_option("--timeout", oracle.budget.timeout_seconds,
                           "search timeout in seconds");

    MetricsOptions metrics_opt;
    auto* metrics_cmd = app.add_subcommand(
        "metrics", "compare a sparsifier against its source graph");
    metrics_cmd->add_option("--graph", metrics_opt.common.graph_path,
                            "original edge list")
        ->required();
    metrics_cmd
        ->add_option("--sparse", metrics_opt.sparse_path, "sparsified edge list")
        ->required();
    metrics_cmd
        ->add_option("--communities", metrics_opt.common.communities_path,
                     "community file")
        ->required();
    metrics_cmd->add_option("--report", metrics_opt.common.report_path,
                            "write the JSON report");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand(
        "gen", "generate a seeded planted-community instance");
    gen_cmd->add_option("--seed", gen.cfg.seed, "RNG seed");
    gen_cmd->add_option("--n", gen.cfg.n, "vertex count");
    gen_cmd->add_option("--num-communities", gen.cfg.communities,
                        "community count");
    gen_cmd->add_option("--min-size", gen.cfg.min_size, "smallest community");
    gen_cmd->add_option("--max-size", gen.cfg.max_size, "largest community");
    gen_cmd->add_option("--overlap", gen.cfg.overlap,
                        "probability of reusing an already-used vertex");
    gen_cmd->add_option("--tmax", gen.cfg.target_tmax,
                        "plant a hub with this community multiplicity");
    gen_cmd->add_option("--extra-edge-prob", gen.cfg.extra_edge_prob,
                        "intra-community edge probability beyond the star");
    gen_cmd->add_flag("--complete", gen.cfg.complete,
                      "emit the complete community-pair graph");
    gen_cmd->add_flag("--attributes", gen.cfg.attributes,
                      "emit a 2-value vertex attribute with center bias");
    gen_cmd->add_option("--center-bias", gen.cfg.center_bias,
                        "bias of planted centers toward group a");
    gen_cmd->add_option("--out-prefix", gen.out_prefix, "output file prefix");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand(
        "bench", "time the pipeline phases and emit CSV");
    add_common_flags(bench_cmd, bench.common, false);
    bench_cmd->add_option("--algo", bench.algo, "dens, stars, or both")
        ->check(CLI::IsMember({"dens", "stars", "both"}));
    bench_cmd->add_option("--epsilon", bench.epsilon,
                          "fix one epsilon instead of the 0.5/0.7/0.9 sweep");
    bench_cmd->add_flag("--connectivity", bench.connectivity,
                        "bench the connectivity-constrained variant");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dens_cmd->parsed()) return cmd_dens(dens);
        if (stars_cmd->parsed()) return cmd_stars(stars);
        if (ls_cmd->parsed()) return cmd_ls(ls);
        if (oracle_cmd->parsed()) return cmd_oracle(oracle);
        if (metrics_cmd->parsed()) return cmd_metrics(metrics_opt);
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (bench_cmd->parsed()) return cmd_bench(bench);
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace netsparse
