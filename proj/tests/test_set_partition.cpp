#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "roughbound/set_partition.hpp"
#include "roughbound/weights.hpp"

using namespace roughbound;

TEST_CASE("lower approximation keeps blocks inside x") {
    auto p = SetPartition::from_blocks(4, {{1}, {2, 3, 4}});
    CHECK(lower_approx(p, SubsetMask::of(4, {1, 2})) == SubsetMask::of(4, {1}));
    CHECK(lower_approx(p, SubsetMask::full(4)) == SubsetMask::full(4));
    CHECK(lower_approx(p, SubsetMask::empty(4)) == SubsetMask::empty(4));
}

TEST_CASE("upper approximation pulls in every block meeting x") {
    auto p = SetPartition::from_blocks(4, {{1}, {2, 3, 4}});
    CHECK(upper_approx(p, SubsetMask::of(4, {1, 2})) == SubsetMask::full(4));
    CHECK(upper_approx(p, SubsetMask::empty(4)) == SubsetMask::empty(4));
    CHECK(upper_approx(p, SubsetMask::full(4)) == SubsetMask::full(4));
}

TEST_CASE("boundary is the union of split blocks") {
    auto p = SetPartition::from_blocks(4, {{1}, {2, 3, 4}});
    CHECK(boundary(p, SubsetMask::of(4, {1, 2})) == SubsetMask::of(4, {2, 3, 4}));
    CHECK(boundary(p, SubsetMask::empty(4)) == SubsetMask::empty(4));
    // x is a union of blocks, hence crisp
    CHECK(boundary(p, SubsetMask::of(4, {2, 3, 4})) == SubsetMask::empty(4));
}

TEST_CASE("approximation operators reject mismatched ground sets") {
    auto p = SetPartition::from_blocks(4, {{1}, {2, 3, 4}});
    CHECK_THROWS_AS(lower_approx(p, SubsetMask::of(5, {1})), std::invalid_argument);
    CHECK_THROWS_AS(upper_approx(p, SubsetMask::of(3, {1})), std::invalid_argument);
    CHECK_THROWS_AS(boundary(p, SubsetMask::of(5, {1})), std::invalid_argument);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2, 3}, {}}), std::invalid_argument);
}

TEST_CASE("sandwich and complement-symmetry invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> n_pick(1, 10);
        int n = n_pick(rng);
        SetPartition p = random_set_partition(n, rng);
        std::uniform_int_distribution<std::uint64_t> x_pick(0, SubsetMask::full(n).bits);
        SubsetMask x{n, x_pick(rng)};
        SubsetMask lo = lower_approx(p, x), hi = upper_approx(p, x);
        CHECK((lo.bits & x.bits) == lo.bits);
        CHECK((x.bits & hi.bits) == x.bits);
        CHECK(boundary(p, x) == boundary(p, x.complement()));
        CHECK(boundary(p, x).bits == (hi.bits & ~lo.bits));
    }
}

TEST_CASE("exhaustive expectation matches hand-computed example") {
    // only {2,3,4} can split; 12 of the 16 subsets split it, 3 elements each
    auto p = SetPartition::from_blocks(4, {{1}, {2, 3, 4}});
    auto report = expected_boundary_exhaustive(p, 1);
    CHECK(report.f_value == Rational(36));
    CHECK(report.normalizer == Rational(16));
    CHECK(report.mu == rat(36, 16));
    CHECK(report.mu * report.normalizer == report.f_value);
}

TEST_CASE("all-singleton partitions are crisp for every subset") {
    auto p = SetPartition::from_blocks(2, {{1}, {2}});
    for (int j = 1; j <= 3; ++j)
        CHECK(expected_boundary_exhaustive(p, j).f_value == Rational(0));
}

TEST_CASE("exhaustive sum equals the block-size formula") {
    for (int n = 1; n <= 8; ++n) {
        for_each_set_partition(n, [&](const SetPartition& p) {
            for (int j = 1; j <= 3; ++j) {
                CHECK(expected_boundary_exhaustive(p, j).f_value ==
                      f_from_block_sizes(p.block_sizes(), WeightSpec{j, n}));
            }
        });
    }
}

TEST_CASE("block-size formula agrees on random partitions up to n = 12") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> n_pick(1, 12);
        int n = n_pick(rng);
        SetPartition p = random_set_partition(n, rng);
        for (int j = 1; j <= 3; ++j) {
            auto report = expected_boundary_exhaustive(p, j);
            CHECK(report.f_value == f_from_block_sizes(p.block_sizes(), WeightSpec{j, n}));
            CHECK(sign_of(report.mu) >= 0);
            CHECK(report.mu <= Rational(n));
        }
    }
}

TEST_CASE("subset totals are schedule-independent") {
    auto p = SetPartition::from_blocks(
        17, {{1, 5, 9}, {2, 6, 10, 13}, {3, 7, 11, 14, 16}, {4, 8, 12, 15, 17}});
    setenv("ROUGHBOUND_THREADS", "1", 1);
    auto serial = expected_boundary_exhaustive(p, 2);
    setenv("ROUGHBOUND_THREADS", "4", 1);
    auto parallel = expected_boundary_exhaustive(p, 2);
    unsetenv("ROUGHBOUND_THREADS");
    CHECK(serial.f_value == parallel.f_value);
    CHECK(serial.mu == parallel.mu);
}

TEST_CASE("expectation depends only on the block-size multiset") {
    auto a = SetPartition::from_blocks(5, {{1, 2}, {3}, {4, 5}});
    auto b = SetPartition::from_blocks(5, {{1, 4}, {2, 5}, {3}});
    for (int j = 1; j <= 3; ++j)
        CHECK(expected_boundary_exhaustive(a, j).f_value ==
              expected_boundary_exhaustive(b, j).f_value);
}

TEST_CASE("enumeration cap refuses instead of truncating") {
    auto p = SetPartition::from_blocks(6, {{1, 2, 3}, {4, 5, 6}});
    CHECK_THROWS_AS(expected_boundary_exhaustive(p, 1, EnumerationCap{5}), CapExceeded);
    CHECK_THROWS_AS(lower_approx_identity_sum(p, EnumerationCap{5}), CapExceeded);
}

TEST_CASE("lower-approximation identity sums to the block count") {
    CHECK(lower_approx_identity_sum(SetPartition::from_blocks(3, {{1}, {2, 3}})) ==
          Rational(2));
    CHECK(lower_approx_identity_sum(SetPartition::from_blocks(3, {{1}, {2}, {3}})) ==
          Rational(3));
    CHECK(lower_approx_identity_sum(SetPartition::from_blocks(1, {{1}})) == Rational(1));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> n_pick(1, 10);
        SetPartition p = random_set_partition(n_pick(rng), rng);
        CHECK(lower_approx_identity_sum(p) == Rational(p.block_count()));
    }
}

TEST_CASE("AZ identity sums to one") {
    CHECK(az_identity_sum({SubsetMask::of(2, {1})}) == Rational(1));
    CHECK(az_identity_sum({SubsetMask::of(3, {1}), SubsetMask::of(3, {2}),
                           SubsetMask::of(3, {3})}) == Rational(1));
    CHECK(az_identity_sum({SubsetMask::of(1, {1})}) == Rational(1));

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<int> n_pick(1, 10);
        auto family = random_family(n_pick(rng), rng);
        CHECK(az_identity_sum(family) == Rational(1));
    }
}

TEST_CASE("AZ identity rejects empty input") {
    CHECK_THROWS_AS(az_identity_sum({}), std::invalid_argument);
    CHECK_THROWS_AS(az_identity_sum({SubsetMask::empty(3)}), std::invalid_argument);
}

TEST_CASE("set-partition enumeration hits the Bell numbers") {
    long counts[] = {1, 2, 5, 15, 52, 203};
    for (int n = 1; n <= 6; ++n) {
        long seen = 0;
        for_each_set_partition(n, [&](const SetPartition&) { ++seen; });
        CHECK(seen == counts[n - 1]);
    }
}
