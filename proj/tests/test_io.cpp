#include "netsparse/io.hpp"

#include "netsparse/gen.hpp"
#include "netsparse/properties.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <set>
#include <sstream>

using namespace netsparse;
using testutil::communities_of;
using testutil::graph_of;

TEST_SUITE_BEGIN("ingest");

TEST_CASE("plain edge lists parse with interned labels") {
    std::istringstream in("a b\nb c\n");
    LabelTable labels;
    Graph g = parse_graph(in, labels);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(labels.id_of("a") == 0);
    CHECK(labels.id_of("c") == 2);
    CHECK_FALSE(g.weighted());
}

TEST_CASE("comments, duplicates and malformed lines") {
    std::istringstream ok("# header\na b\n\na b\n");
    LabelTable labels;
    CHECK(parse_graph(ok, labels).edge_count() == 1);

    std::istringstream dup_weights("a b 3.0\na b 1.5\n");
    LabelTable l2;
    Graph g = parse_graph(dup_weights, l2);
    CHECK(g.distance(Edge{0, 1}) == 1.5); // duplicates keep the minimum

    std::istringstream self("a a\n");
    LabelTable l3;
    CHECK_THROWS_AS(parse_graph(self, l3), input_error);

    std::istringstream bad_w("a b -1\n");
    LabelTable l4;
    CHECK_THROWS_AS(parse_graph(bad_w, l4), input_error);

    std::istringstream junk("a b c d\n");
    LabelTable l5;
    CHECK_THROWS_AS(parse_graph(junk, l5), input_error);

    std::istringstream nonnum("a b xyz\n");
    LabelTable l6;
    CHECK_THROWS_AS(parse_graph(nonnum, l6), input_error);
}

TEST_CASE("community files") {
    std::istringstream graph_in("a b\nb c\nc d\n");
    LabelTable labels;
    Graph g = parse_graph(graph_in, labels);

    std::istringstream comm_in("a b c\na b d\n\nc\n");
    CommunitySet cs = parse_communities(comm_in, labels, false);
    CHECK(cs.size() == 3);
    CHECK(cs.member_count(0) == 3);
    CHECK(cs.member_count(2) == 1);

    std::istringstream dup_in("a a b\n");
    CHECK(parse_communities(dup_in, labels, false).member_count(0) == 2);

    std::istringstream unknown("a z\n");
    CHECK_THROWS_AS(parse_communities(unknown, labels, false), input_error);

    std::istringstream fresh("a z\n");
    CommunitySet grown = parse_communities(fresh, labels, true);
    CHECK(labels.id_of("z").has_value());
    CHECK(grown.size() == 1);
    (void)g;
}

TEST_CASE("attribute files") {
    LabelTable labels;
    labels.intern("v1");
    labels.intern("v2");

    std::istringstream in("v1 sex=m age=juv\nv2 sex=f age=ad\n");
    auto attrs = parse_attributes(in, labels);
    CHECK(attrs.at("v1").at("sex") == "m");
    CHECK(attrs.at("v2").at("age") == "ad");

    std::istringstream unknown("v9 sex=m\n");
    CHECK_THROWS_AS(parse_attributes(unknown, labels), input_error);

    std::istringstream inconsistent("v1 sex=m\nv2 age=ad\n");
    CHECK_THROWS_AS(parse_attributes(inconsistent, labels), input_error);

    std::istringstream malformed("v1 sexm\n");
    CHECK_THROWS_AS(parse_attributes(malformed, labels), input_error);
}

TEST_CASE("graph and community writers round-trip") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto inst = testutil::varied_instance(seed);

        std::ostringstream gout;
        write_graph(gout, inst.g0, inst.labels);
        std::istringstream gin(gout.str());
        LabelTable labels2;
        Graph g2 = parse_graph(gin, labels2);
        // vertices never touched by an edge do not survive the file format
        CHECK(g2.edges().size() == inst.g0.edges().size());
        for (const Edge& e : g2.edges()) {
            Edge orig = make_edge(
                *inst.labels.id_of(labels2.label_of(e.u)),
                *inst.labels.id_of(labels2.label_of(e.v)));
            CHECK(inst.g0.has_edge(orig));
        }

        std::ostringstream cout_;
        write_communities(cout_, inst.cs, inst.labels);
        std::istringstream cin_(cout_.str());
        LabelTable labels3 = inst.labels;
        CommunitySet cs2 = parse_communities(cin_, labels3, false);
        CHECK(cs2 == inst.cs);

        // writing again from the reparse is byte-identical
        std::ostringstream gout2;
        write_graph(gout2, g2, labels2);
        CHECK(gout.str() == gout2.str());
    }
}

TEST_CASE("weighted graphs round-trip exactly") {
    Graph g(3, {Edge{0, 1}, Edge{1, 2}}, {0.1234567890123456789, 3.0});
    LabelTable labels;
    labels.intern("x");
    labels.intern("y");
    labels.intern("z");
    std::ostringstream out;
    write_graph(out, g, labels);
    std::istringstream in(out.str());
    LabelTable labels2;
    Graph g2 = parse_graph(in, labels2);
    CHECK(g2.weighted());
    CHECK(g2.distance(Edge{0, 1}) == g.distance(Edge{0, 1}));
    CHECK(g2.distance(Edge{1, 2}) == g.distance(Edge{1, 2}));
}

TEST_CASE("interning is order stable") {
    std::string body = "p q\nq r\na p\n";
    std::istringstream in1(body), in2(body);
    LabelTable l1, l2;
    Graph g1 = parse_graph(in1, l1);
    Graph g2 = parse_graph(in2, l2);
    CHECK(g1 == g2);
    for (VertexId v = 0; v < l1.size(); ++v)
        CHECK(l1.label_of(v) == l2.label_of(v));
}

TEST_CASE("complete community graphs stay within the communities") {
    auto cs = communities_of({{0, 1, 2}, {2, 3}});
    Graph g = complete_over_communities(cs, 6);
    CHECK(g.edge_count() == 4); // 3 pairs + 1 pair, no cross edges
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(4, 5));
}

TEST_CASE("feasibility filtering by property") {
    Graph g = graph_of(5, {{0, 1}, {1, 2}, {3, 4}});
    auto cs = communities_of({{0, 1, 2}, {0, 3}, {2, 3}});

    SUBCASE("all feasible") {
        std::vector<double> alphas{0.0, 0.0, 0.0};
        auto out = feasibility_filter(g, cs, Property::Density, alphas);
        CHECK(out.dropped.empty());
        CHECK(out.kept.size() == 3);
    }
    SUBCASE("star-free communities are dropped") {
        auto out = feasibility_filter(g, cs, Property::Star);
        CHECK(out.dropped == std::vector<std::size_t>{1, 2});
        CHECK(out.kept_original == std::vector<std::size_t>{0});
    }
    SUBCASE("density thresholds beyond the available edges drop") {
        std::vector<double> alphas{1.0, 1.0, 1.0};
        auto out = feasibility_filter(g, cs, Property::Density, alphas);
        // {0,1,2} has 2 of 3 pairs; {0,3} and {2,3} have none
        CHECK(out.dropped == std::vector<std::size_t>{0, 1, 2});
        for (std::size_t i = 0; i < cs.size(); ++i) {
            long long req =
                density_requirement(alphas[i], cs.member_count(i));
            CHECK(static_cast<long long>(
                      induced_edge_count(g, cs.members(i))) < req);
        }
    }
    SUBCASE("connectivity") {
        auto out = feasibility_filter(g, cs, Property::Connectivity);
        CHECK(out.dropped == std::vector<std::size_t>{1, 2});
    }
}

TEST_CASE("center attribute statistics") {
    LabelTable labels;
    labels.intern("u");
    labels.intern("v");
    labels.intern("w");

    SparsifyResult result;
    result.center = {VertexId{0}, VertexId{0}, VertexId{1}};

    SUBCASE("uniform centers") {
        AttributeTable attrs;
        attrs["u"]["grp"] = "x";
        attrs["v"]["grp"] = "x";
        attrs["w"]["grp"] = "y";
        auto stats = center_attribute_stats(result, attrs, labels);
        CHECK(stats.at("grp").at("x").first == 2); // distinct centers u, v
        CHECK(stats.at("grp").at("x").second == 2);
        CHECK(stats.at("grp").at("y").first == 0);
        CHECK(stats.at("grp").at("y").second == 1);
    }
    SUBCASE("empty table puts everyone under unknown") {
        AttributeTable attrs;
        auto stats = center_attribute_stats(result, attrs, labels);
        CHECK(stats.empty());
    }
    SUBCASE("missing vertices count as unknown") {
        AttributeTable attrs;
        attrs["u"]["grp"] = "x";
        auto stats = center_attribute_stats(result, attrs, labels);
        CHECK(stats.at("grp").at("unknown").first == 1); // center v
        CHECK(stats.at("grp").at("unknown").second == 2);
    }
}

TEST_CASE("planted attribute bias is recovered exactly") {
    GenConfig cfg;
    cfg.seed = 42;
    cfg.n = 40;
    cfg.communities = 12;
    cfg.attributes = true;
    cfg.center_bias = 1.0; // every planted center lands in group a
    auto inst = generate_instance(cfg);

    SparsifyResult result;
    for (VertexId c : inst.planted_centers) result.center.push_back(c);
    auto stats = center_attribute_stats(result, inst.attrs, inst.labels);

    std::set<VertexId> planted(inst.planted_centers.begin(),
                               inst.planted_centers.end());
    CHECK(stats.at("group").at("a").first == planted.size());
}

TEST_SUITE_END();
