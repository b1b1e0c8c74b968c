#include <gtest/gtest.h>

#include <sstream>

#include "commkit/error.hpp"
#include "commkit/partition.hpp"

using namespace commkit;

TEST(Partition, CanonicalFirstAppearance) {
    const std::vector<std::uint64_t> raw{7, 7, 3, 9, 3};
    const Partition p(raw);
    EXPECT_EQ(p.membership(), (std::vector<community>{0, 0, 1, 2, 1}));
    EXPECT_EQ(p.community_count(), 3u);
    EXPECT_EQ(p.community_sizes(), (std::vector<std::size_t>{2, 2, 1}));
    EXPECT_EQ(p.communities(), (std::vector<std::vector<node>>{{0, 1}, {2, 4}, {3}}));
}

TEST(Partition, EqualityIgnoresLabelNames) {
    EXPECT_EQ(Partition(std::vector<community>{5, 1, 5}), Partition(std::vector<community>{0, 2, 0}));
    EXPECT_NE(Partition(std::vector<community>{0, 1, 0}), Partition(std::vector<community>{0, 0, 1}));
}

TEST(Partition, Extremes) {
    EXPECT_EQ(Partition::singletons(4).community_count(), 4u);
    EXPECT_EQ(Partition::one_block(4).community_count(), 1u);
    EXPECT_EQ(Partition::one_block(0).community_count(), 0u);
}

TEST(Membership, RoundTripAnyOrder) {
    std::istringstream in("# node community\n2 9\n0 4\n1 9\n");
    const Partition p = read_membership(in);
    EXPECT_EQ(p.membership(), (std::vector<community>{0, 1, 1}));
    std::stringstream buffer;
    write_membership(buffer, p);
    EXPECT_EQ(read_membership(buffer), p);
}

TEST(Membership, RejectsGapsAndRepeats) {
    std::istringstream gap("0 1\n2 1\n");
    EXPECT_THROW(read_membership(gap), ArgumentError);
    std::istringstream twice("0 1\n0 2\n1 1\n");
    EXPECT_THROW(read_membership(twice), ArgumentError);
    std::istringstream short_count("0 1\n1 1\n");
    EXPECT_THROW(read_membership(short_count, 3), ArgumentError);
    std::istringstream bad("0\n");
    EXPECT_THROW(read_membership(bad), ArgumentError);
}
