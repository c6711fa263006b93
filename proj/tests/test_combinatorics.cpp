#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "vmp/combinatorics.hpp"

using namespace vmp;

namespace {

// Every set partition of [n] by restricted growth strings.
std::vector<Partition> all_set_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int mx) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(mx + 1);
            for (int j = 0; j < n; ++j) blocks[a[j]].push_back(j + 1);
            if (n == 0) blocks.clear();
            out.push_back(make_partition(n, blocks));
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            a[i] = v;
            rec(i + 1, std::max(mx, v));
        }
    };
    if (n == 0) {
        out.push_back(make_partition(0, {}));
        return out;
    }
    a[0] = 0;
    rec(1, 0);
    return out;
}

}  // namespace

TEST(Partitions, BruteForceFourLegs) {
    int count = 0;
    for (const auto& p : all_set_partitions(4)) count += is_nc2p(p);
    EXPECT_EQ(count, 3);
    EXPECT_EQ(enumerate_nc2p(4).size(), 3u);
}

TEST(Partitions, EnumerationMatchesBruteForce) {
    for (int n = 0; n <= 9; ++n) {
        std::set<Partition> brute;
        for (const auto& p : all_set_partitions(n))
            if (is_nc2p(p)) brute.insert(p);
        const auto e = enumerate_nc2p(n);
        EXPECT_EQ(std::set<Partition>(e.begin(), e.end()), brute) << "n = " << n;
        EXPECT_EQ(e.size(), brute.size());
    }
}

TEST(Partitions, RiordanNumbers) {
    const size_t r[] = {1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213};
    for (int n = 0; n <= 12; ++n) EXPECT_EQ(enumerate_nc2p(n).size(), r[n]) << n;
    EXPECT_EQ(enumerate_nc2p(6, 2).size(), 9u);
    EXPECT_EQ(enumerate_nc2p(6, 3).size(), 5u);
    EXPECT_EQ(enumerate_nc2p(6, 1).size(), 1u);
}

TEST(Partitions, Validation) {
    EXPECT_THROW(make_partition(3, {{1, 2}}), std::invalid_argument);
    EXPECT_THROW(make_partition(2, {{1, 2}, {2}}), std::invalid_argument);
    EXPECT_THROW(make_partition(2, {{1, 3}}), std::invalid_argument);
    EXPECT_FALSE(is_noncrossing(make_partition(4, {{1, 3}, {2, 4}})));
    EXPECT_TRUE(is_noncrossing(make_partition(4, {{1, 4}, {2, 3}})));
    EXPECT_FALSE(is_nc2p(make_partition(3, {{1, 2}, {3}})));
    const auto p = make_partition(5, {{1, 3, 5}, {2, 4}});
    EXPECT_FALSE(is_nc2p(p));
    EXPECT_FALSE(is_nc2p(make_partition(6, {{1, 4, 6}, {2, 3}, {5}})));
    EXPECT_TRUE(is_nc2p(make_partition(5, {{1, 4, 5}, {2, 3}})));
    EXPECT_EQ(middle_legs(make_partition(5, {{1, 3, 5}, {2}, {4}})), 1);
    EXPECT_EQ(to_string(make_partition(4, {{2, 3}, {1, 4}})), "{{1,4},{2,3}}");
}

TEST(Partitions, MiddleLegStripping) {
    const auto p = make_partition(7, {{1, 4, 7}, {2, 3}, {5, 6}});
    EXPECT_EQ(middle_legs(p), 1);
    const auto s = strip_middle_legs(p);
    EXPECT_EQ(s, make_partition(6, {{1, 6}, {2, 3}, {4, 5}}));
    EXPECT_EQ(middle_legs(s), 0);
}

TEST(Partitions, Decomposition) {
    const auto p = make_partition(8, {{1, 4, 6}, {2, 3}, {5}, {7, 8}});
    const auto d = decompose(p);
    EXPECT_EQ(d.first_block, (std::vector<int>{1, 4, 6}));
    ASSERT_EQ(d.gaps.size(), 2u);
    EXPECT_EQ(d.gaps[0], make_partition(2, {{1, 2}}));
    EXPECT_EQ(d.gaps[1], make_partition(1, {{1}}));
    EXPECT_EQ(d.tail, make_partition(2, {{1, 2}}));
}

TEST(VWords, Shape) {
    EXPECT_TRUE(is_v_word({}));
    EXPECT_TRUE(is_v_word({3, 1, 2}));
    EXPECT_TRUE(is_v_word({1, 2, 3}));
    EXPECT_TRUE(is_v_word({3, 2}));
    EXPECT_FALSE(is_v_word({1, 1}));
    EXPECT_FALSE(is_v_word({1, 2, 1}));
}

TEST(NestingForest, ChainsAndLabelings) {
    // {1,6} contains {2,5} which contains {3,4}; {7,8} is a separate root
    const auto p = make_partition(8, {{1, 6}, {2, 5}, {3, 4}, {7, 8}});
    const auto f = nesting_forest(p);
    EXPECT_FALSE(f.parent[0].has_value());
    EXPECT_EQ(f.parent[1], 0);
    EXPECT_EQ(f.parent[2], 1);
    EXPECT_EQ(f.chains.size(), 2u);
    EXPECT_TRUE(is_v_monotone_labeling(p, {3, 1, 2, 1}));
    EXPECT_FALSE(is_v_monotone_labeling(p, {1, 2, 1, 1}));
    EXPECT_TRUE(is_v_monotone_labeling(p, {1, 2, 3, 1}, 2));  // outer 2 > 1 < 2 < 3
    EXPECT_FALSE(is_v_monotone_labeling(p, {2, 3, 4, 1}, 2));
    EXPECT_THROW(is_v_monotone_labeling(p, {1, 2}), std::invalid_argument);
}

TEST(Riordan, BijectionAndValidation) {
    for (int n = 0; n <= 10; ++n) {
        const auto words = enumerate_riordan(n);
        EXPECT_EQ(words.size(), enumerate_nc2p(n).size());
        std::set<Partition> images;
        for (const auto& e : words) {
            EXPECT_TRUE(is_riordan(e));
            const Partition p = riordan_to_partition(e);
            EXPECT_TRUE(is_nc2p(p));
            images.insert(p);
            EXPECT_EQ(partition_to_riordan(p), e);
        }
        EXPECT_EQ(images.size(), words.size());
    }
    EXPECT_EQ(to_string(partition_to_riordan(make_partition(3, {{1, 2, 3}}))), "-o+");
    EXPECT_EQ(parse_eps("-0+"), parse_eps("-o+"));
    EXPECT_FALSE(is_riordan(parse_eps("+-")));
    EXPECT_FALSE(is_riordan(parse_eps("-")));
    EXPECT_FALSE(is_riordan(parse_eps("o")));
    EXPECT_THROW(parse_eps("-x+"), std::invalid_argument);
}

TEST(Labelings, RecurrenceMatchesBruteForce) {
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : enumerate_nc2p(n))
            for (int N = 0; N <= 3; ++N)
                for (int l = 0; l <= N + 1; ++l)
                    EXPECT_EQ(count_v_labelings(p, N, l), count_v_labelings_brute(p, N, l))
                        << to_string(p) << " N=" << N << " l=" << l;
}

TEST(Labelings, PolynomialsInN) {
    const UPoly N = UPoly::monomial(1);
    EXPECT_EQ(vl_polynomial(6, 1), N);
    EXPECT_EQ(vl_polynomial(6, 2), UPoly(9) * N * N - UPoly(6) * N);
    EXPECT_EQ(vl_polynomial(6, 3),
              UPoly(Rational(14, 3)) * N * N * N - UPoly(Rational(11, 2)) * N * N + UPoly(Rational(11, 6)) * N);
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int M = 1; M <= 6; ++M) EXPECT_EQ(vl_polynomial(n, k)(Rational(M)), Rational(vl_count(n, k, M)));
    EXPECT_THROW(count_v_labelings(make_partition(2, {{1}, {2}}), 2, 1), std::invalid_argument);
    EXPECT_THROW(count_v_labelings(make_partition(2, {{1, 2}}), 2, 4), std::invalid_argument);
}

TEST(OrderedPartitions, GoldenCounts) {
    EXPECT_EQ(count_ordered_v(6, 1), 1);
    EXPECT_EQ(count_ordered_v(6, 2), 18);
    EXPECT_EQ(count_ordered_v(6, 3), 28);
    EXPECT_EQ(count_ordered_v(4, 2), 4);
    const auto nest = make_partition(6, {{1, 6}, {2, 5}, {3, 4}});
    EXPECT_EQ(count_ordered_v(nest), 4);  // V-shaped permutations of length 3
    EXPECT_TRUE(is_v_monotone(OrderedPartition{nest, {2, 1, 3}}));
    EXPECT_FALSE(is_v_monotone(OrderedPartition{nest, {1, 3, 2}}));
    EXPECT_THROW(is_v_monotone(OrderedPartition{nest, {1, 1, 2}}), std::invalid_argument);
}

TEST(OrderedPartitions, BoundedByAllOrders) {
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : enumerate_nc2p(n)) {
            const BigInt c = count_ordered_v(p);
            EXPECT_GE(c, 1);
            EXPECT_LE(c, factorial(p.size()));
        }
}

TEST(IntervalPartitions, Counts) {
    EXPECT_EQ(count_interval_2p(6, 2), 3);
    EXPECT_EQ(count_interval_2p(6, 3), 1);
    EXPECT_EQ(count_interval_2p(5, 2), 2);
    EXPECT_EQ(count_interval_2p(0, 0), 1);
    EXPECT_EQ(count_interval_2p(1, 0), 0);
}
