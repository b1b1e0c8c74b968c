#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "commkit/error.hpp"
#include "commkit/generators.hpp"
#include "commkit/topology.hpp"
#include "oracles.hpp"

using namespace commkit;

namespace {

// Independent Erdos-Gallai check, written from the textbook statement.
bool erdos_gallai(std::vector<std::size_t> d) {
    std::sort(d.rbegin(), d.rend());
    std::size_t sum = std::accumulate(d.begin(), d.end(), std::size_t{0});
    if (sum % 2) return false;
    for (std::size_t k = 1; k <= d.size(); ++k) {
        std::size_t lhs = 0, rhs = k * (k - 1);
        for (std::size_t i = 0; i < k; ++i) lhs += d[i];
        for (std::size_t i = k; i < d.size(); ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

void expect_simple(const Graph& g) {
    for (node v = 0; v < g.node_count(); ++v) {
        const auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            EXPECT_NE(nb[i], v);
            if (i > 0) {
                EXPECT_LT(nb[i - 1], nb[i]);
            }
        }
    }
}

} // namespace

TEST(Generators, ErdosRenyiDensity) {
    RngStream rng(1);
    const Graph g = erdos_renyi(400, 0.05, rng);
    const double expected = 0.05 * 400 * 399 / 2;
    EXPECT_NEAR(static_cast<double>(g.edge_count()), expected, 4 * std::sqrt(expected));
    EXPECT_EQ(erdos_renyi(10, 0.0, rng).edge_count(), 0u);
    EXPECT_EQ(erdos_renyi(10, 1.0, rng).edge_count(), 45u);
    EXPECT_THROW(erdos_renyi(10, 1.5, rng), ArgumentError);
}

TEST(Generators, ExpectedDegreeGraphMeans) {
    RngStream rng(2);
    std::vector<double> w(300, 6.0);
    for (std::size_t i = 0; i < 30; ++i) w[i] = 20.0;
    double high = 0.0, low = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = expected_degree_graph(w, rng);
        for (node v = 0; v < 30; ++v) high += static_cast<double>(g.degree_of(v));
        for (node v = 30; v < 300; ++v) low += static_cast<double>(g.degree_of(v));
    }
    EXPECT_NEAR(high / (20 * 30), 20.0, 1.0);
    EXPECT_NEAR(low / (20 * 270), 6.0, 0.3);
    const std::vector<double> bad{-1.0, 2.0};
    EXPECT_THROW(expected_degree_graph(bad, rng), ArgumentError);
}

TEST(Generators, GraphicalMatchesErdosGallai) {
    RngStream rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::size_t> d(1 + rng.uniform(8));
        for (auto& k : d) k = rng.uniform(d.size() + 1);
        EXPECT_EQ(is_graphical(d), erdos_gallai(d));
    }
}

TEST(Generators, ConfigurationModelPreservesDegrees) {
    RngStream rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto degrees = powerlaw_degree_sequence(200, 8.0, 40, 2.5, rng);
        const Graph g = configuration_model(degrees, rng);
        expect_simple(g);
        EXPECT_EQ(g.degree_sequence(), degrees);
    }
    const std::vector<std::size_t> odd{1, 1, 1};
    EXPECT_THROW(configuration_model(odd, rng), ArgumentError);
    const std::vector<std::size_t> impossible{3, 3, 1, 1};
    EXPECT_THROW(configuration_model(impossible, rng), ArgumentError);
}

TEST(Generators, BarabasiAlbertCounts) {
    RngStream rng(5);
    const Graph g = barabasi_albert(500, 3, rng);
    expect_simple(g);
    // Seed clique on m + 1 nodes, then m links per newcomer.
    EXPECT_EQ(g.edge_count(), 6u + 3u * (500 - 4));
    for (node v = 0; v < 500; ++v) EXPECT_GE(g.degree_of(v), 3u);
    EXPECT_THROW(barabasi_albert(3, 3, rng), ArgumentError);
}

TEST(Generators, EvolutionaryGrowth) {
    RngStream rng(6);
    const Graph g = evolutionary_pa(400, 4, {}, rng);
    expect_simple(g);
    EXPECT_EQ(g.edge_count(), 10u + 4u * (400 - 5));
    EXPECT_THROW(evolutionary_pa(400, 4, {1.0, 0.5}, rng), ArgumentError);
    EXPECT_THROW(evolutionary_pa(400, 4, {1.5, 1.5}, rng), ArgumentError);
}

TEST(Generators, PowerlawSequenceMeanAndRange) {
    RngStream rng(7);
    const auto d = powerlaw_degree_sequence(20000, 20.0, 50, 3.0, rng);
    const double mean = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
    EXPECT_NEAR(mean, 20.0, 0.5);
    EXPECT_LE(*std::max_element(d.begin(), d.end()), 50u);
    EXPECT_EQ(std::accumulate(d.begin(), d.end(), std::size_t{0}) % 2, 0u);
}

TEST(Generators, DiscretePowerlawMean) {
    // Support {1, 2}, exponent 1: weights 1 and 1/2 -> mean (1 + 1) / 1.5.
    EXPECT_NEAR(discrete_powerlaw_mean(1, 2, 1.0), 2.0 / 1.5, 1e-12);
    EXPECT_NEAR(discrete_powerlaw_mean(5, 5, 2.0), 5.0, 1e-12);
}

TEST(Generators, CommunitySizesSumExactly) {
    RngStream rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const auto sizes = community_sizes(1000, 2.0, 10, 50, rng);
        EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), 1000u);
        for (auto s : sizes) {
            EXPECT_GE(s, 10u);
            EXPECT_LE(s, 50u);
        }
    }
    EXPECT_THROW(community_sizes(5, 2.0, 10, 50, rng), ArgumentError);
}

TEST(Generators, MixingFraction) {
    // Bridge endpoints: 2 of the 14 endpoints leave their community.
    EXPECT_NEAR(mixing_fraction(oracle::two_triangles(), oracle::two_triangles_split()), 2.0 / 14.0, 1e-15);
}

TEST(Generators, GirvanNewmanShape) {
    RngStream rng(9);
    const PlantedNetwork net = girvan_newman(4.0, rng);
    EXPECT_EQ(net.graph.node_count(), 128u);
    EXPECT_EQ(net.planted.community_sizes(), (std::vector<std::size_t>(4, 32)));
    EXPECT_NEAR(net.realized_mu, mixing_fraction(net.graph, net.planted), 1e-15);
    EXPECT_NEAR(net.realized_mu, 0.25, 0.06);
    EXPECT_THROW(girvan_newman(17.0, rng), ArgumentError);
}

TEST(Generators, BagrowRewirePreservesDegreesAndRaisesInternalLinks) {
    RngStream rng(10);
    const Graph g = barabasi_albert(400, 4, rng);
    const RewireReport r = bagrow_rewire(g, 4, 0.8, rng);
    EXPECT_EQ(r.network.graph.degree_sequence(), g.degree_sequence());
    EXPECT_EQ(r.network.planted.community_count(), 4u);
    EXPECT_LT(r.network.realized_mu, 0.5);
    EXPECT_GT(r.realized_fraction, 0.5);
    EXPECT_THROW(bagrow_rewire(g, 1, 0.5, rng), ArgumentError);
}

TEST(Generators, LfrHitsMixingTargetForEverySeedModel) {
    for (SeedModel model : {SeedModel::CM, SeedModel::BA, SeedModel::EV}) {
        for (double mu : {0.1, 0.4, 0.7}) {
            LfrParams p;
            p.n = 500;
            p.mu = mu;
            p.seed_model = model;
            RngStream rng(11);
            const PlantedNetwork net = lfr(p, rng);
            expect_simple(net.graph);
            EXPECT_EQ(net.graph.node_count(), 500u);
            EXPECT_NEAR(net.realized_mu, mu, p.mu_tolerance) << to_string(model);
            EXPECT_NEAR(net.realized_mu, mixing_fraction(net.graph, net.planted), 1e-12);
            for (auto s : net.planted.community_sizes()) EXPECT_LE(s, p.c_max);
        }
    }
}

TEST(Generators, LfrIsDeterministic) {
    LfrParams p;
    p.n = 300;
    RngStream a(12), b(12);
    const PlantedNetwork x = lfr(p, a), y = lfr(p, b);
    EXPECT_EQ(x.graph, y.graph);
    EXPECT_EQ(x.planted, y.planted);
}

TEST(Generators, LfrValidation) {
    LfrParams p;
    p.mu = 1.5;
    EXPECT_THROW(p.validate(), ArgumentError);
    p = LfrParams{};
    p.gamma = 1.0;
    EXPECT_THROW(p.validate(), ArgumentError);
    EXPECT_EQ(parse_seed_model("ev"), SeedModel::EV);
    EXPECT_THROW(parse_seed_model("er"), ArgumentError);
}
