#include <gtest/gtest.h>

#include "commkit/dendrogram.hpp"
#include "commkit/error.hpp"
#include "oracles.hpp"

using namespace commkit;

TEST(Dendrogram, MergeIdsAndCuts) {
    Dendrogram d(4);
    EXPECT_EQ(d.merge(0, 1), 4u);
    EXPECT_EQ(d.merge(2, 3), 5u);
    EXPECT_EQ(d.merge(4, 5), 6u);
    EXPECT_EQ(d.cut(0), Partition::singletons(4));
    EXPECT_EQ(d.cut(1).membership(), (std::vector<community>{0, 0, 1, 2}));
    EXPECT_EQ(d.cut(3), Partition::one_block(4));
    EXPECT_THROW(d.cut(4), ArgumentError);
    EXPECT_THROW(d.merge(4, 4), ArgumentError);
    EXPECT_THROW(d.merge(0, 6), ArgumentError); // 0 is no longer live
}

TEST(Dendrogram, ModularityTrackMatchesOracle) {
    const Graph g = oracle::two_triangles();
    Dendrogram d(6);
    const std::size_t a = d.merge(0, 1);
    const std::size_t b = d.merge(a, 2);
    const std::size_t c = d.merge(3, 4);
    const std::size_t e = d.merge(c, 5);
    d.merge(b, e);
    d.compute_modularity(g);
    ASSERT_EQ(d.modularity().size(), 6u);
    for (std::size_t k = 0; k <= 5; ++k) {
        EXPECT_NEAR(d.modularity()[k], oracle::modularity(g, d.cut(k).membership()), 1e-12) << k;
    }
    EXPECT_EQ(best_modularity_cut(d, g), oracle::two_triangles_split());
}

TEST(Dendrogram, TiesPreferFewerCommunities) {
    // Synthetic track with a tie between the 3- and 2-community cuts.
    const Graph g(4, std::vector<Edge>{{0, 1}, {2, 3}});
    Dendrogram d(4);
    d.merge(0, 1);
    d.merge(2, 3);
    d.merge(4, 5);
    d.set_modularity({0.1, 0.3, 0.3, 0.2});
    EXPECT_EQ(best_modularity_cut(d, g).community_count(), 2u);
}

TEST(Dendrogram, SizeMismatch) {
    Dendrogram d(3);
    EXPECT_THROW(best_modularity_cut(d, oracle::two_triangles()), ArgumentError);
}
