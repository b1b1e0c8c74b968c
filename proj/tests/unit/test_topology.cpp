#include <gtest/gtest.h>

#include <cmath>

#include "commkit/error.hpp"
#include "commkit/generators.hpp"
#include "commkit/partition.hpp"
#include "commkit/topology.hpp"
#include "oracles.hpp"

using namespace commkit;

namespace {

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (node v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (node u = 0; u < n; ++u) {
        for (node v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph(n, edges);
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (node v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

} // namespace

TEST(Topology, DegreeOfBridgeNode) {
    const Graph g = oracle::two_triangles();
    EXPECT_EQ(degree(g, 2), 3u);
    EXPECT_THROW(degree(g, 6), ArgumentError);
}

TEST(Topology, LocalClusteringHandValues) {
    const Graph g = oracle::two_triangles();
    EXPECT_DOUBLE_EQ(local_clustering(g, 0), 1.0);
    EXPECT_DOUBLE_EQ(local_clustering(g, 2), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(local_clustering(star(3), 1), 0.0);
    EXPECT_NEAR(transitivity(g), (4.0 + 2.0 / 3.0) / 6.0, 1e-12);
    EXPECT_THROW(transitivity(Graph()), ArgumentError);
}

TEST(Topology, ShortestDistances) {
    const Graph g = oracle::two_triangles();
    const auto d = shortest_distances(g, 0);
    EXPECT_EQ(d[5], 3u);
    EXPECT_EQ(d[0], 0u);
    const Graph split(4, std::vector<Edge>{{0, 1}, {2, 3}});
    EXPECT_EQ(shortest_distances(split, 0)[2], kUnreachable);
}

TEST(Topology, BetweennessMatchesPathEnumeration) {
    RngStream rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_connected_graph(7, 0.4, rng);
        const auto expected = oracle::enumerate_betweenness(g);
        const auto nodes = centrality(g, CentralityKind::Betweenness).values;
        const auto edges = edge_betweenness(g);
        ASSERT_EQ(edges.size(), expected.edges.size());
        for (std::size_t v = 0; v < nodes.size(); ++v) EXPECT_NEAR(nodes[v], expected.nodes[v], 1e-9);
        for (std::size_t e = 0; e < edges.size(); ++e) EXPECT_NEAR(edges[e], expected.edges[e], 1e-9);
    }
}

TEST(Topology, BridgeCarriesAllCrossPairs) {
    const Graph g = oracle::two_triangles();
    const auto edges = g.edges();
    const auto eb = edge_betweenness(g);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] == Edge{2, 3}) {
            EXPECT_DOUBLE_EQ(eb[i], 9.0);
        }
    }
}

TEST(Topology, Closeness) {
    const auto c = centrality(star(4), CentralityKind::Closeness).values;
    EXPECT_DOUBLE_EQ(c[0], 1.0);
    EXPECT_DOUBLE_EQ(c[1], 4.0 / 7.0);
    // Components are scored separately; an isolated node scores 0.
    const Graph split(3, std::vector<Edge>{{0, 1}});
    const auto s = centrality(split, CentralityKind::Closeness).values;
    EXPECT_DOUBLE_EQ(s[0], 1.0);
    EXPECT_DOUBLE_EQ(s[2], 0.0);
}

TEST(Topology, CentralizationExtremes) {
    for (auto kind : {CentralityKind::Degree, CentralityKind::Closeness, CentralityKind::Betweenness}) {
        EXPECT_NEAR(centralization(star(6), kind), 1.0, 1e-12) << to_string(kind);
        EXPECT_NEAR(centralization(complete(6), kind), 0.0, 1e-12) << to_string(kind);
    }
    EXPECT_THROW(centralization(path(2), CentralityKind::Degree), ArgumentError);
}

TEST(Topology, Assortativity) {
    EXPECT_FALSE(assortativity(complete(5)).has_value());
    EXPECT_FALSE(assortativity(Graph(3, std::vector<Edge>{})).has_value());
    EXPECT_NEAR(*assortativity(star(5)), -1.0, 1e-12);
    // Path of 4: endpoint degree pairs (1,2),(2,2),(2,1) -> r = -1/2.
    EXPECT_NEAR(*assortativity(path(4)), -0.5, 1e-12);
}

TEST(Topology, BridgesMatchDeleteAndRecount) {
    RngStream rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_connected_graph(9, 0.25, rng);
        const auto edges = g.edges();
        const std::size_t base = oracle::components(9, edges);
        std::vector<Edge> bridges;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (oracle::components(9, edges, i) > base) bridges.push_back(edges[i]);
        }
        std::vector<node> cutpoints;
        for (node v = 0; v < 9; ++v) {
            // Removing v itself drops one node from the count.
            if (g.degree_of(v) > 0 && oracle::components(9, edges, SIZE_MAX, v) > base) cutpoints.push_back(v);
        }
        const BridgeReport report = bridges_and_cutpoints(g);
        EXPECT_EQ(report.bridges, bridges);
        EXPECT_EQ(report.cutpoints, cutpoints);
    }
}

TEST(Topology, TwoTrianglesBridge) {
    const BridgeReport r = bridges_and_cutpoints(oracle::two_triangles());
    EXPECT_EQ(r.bridges, (std::vector<Edge>{{2, 3}}));
    EXPECT_EQ(r.cutpoints, (std::vector<node>{2, 3}));
}

TEST(Topology, ComponentsNumberedBySmallestMember) {
    const Graph g(5, std::vector<Edge>{{3, 4}, {0, 2}});
    const Partition p = connected_components(g);
    EXPECT_EQ(p.membership(), (std::vector<community>{0, 1, 0, 2, 2}));
    EXPECT_EQ(connected_components(oracle::two_triangles()).community_count(), 1u);
}

TEST(Topology, Summary) {
    const GraphSummary s = summarize(oracle::two_triangles());
    EXPECT_EQ(s.node_count, 6u);
    EXPECT_EQ(s.edge_count, 7u);
    EXPECT_NEAR(s.density, 7.0 / 15.0, 1e-12);
    // 7 pairs at one hop, 4 at two (across the bridge), 4 at three: 27 / 15.
    EXPECT_NEAR(s.mean_distance, 27.0 / 15.0, 1e-12);
    EXPECT_EQ(s.component_count, 1u);
}
