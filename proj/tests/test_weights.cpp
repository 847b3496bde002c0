#include <catch2/catch_amalgamated.hpp>

#include "roughbound/weights.hpp"

using namespace roughbound;

TEST_CASE("weight values") {
    CHECK(weight_value({1, 9}, 0) == Rational(1));
    CHECK(weight_value({1, 9}, 7) == Rational(1));
    CHECK(weight_value({2, 9}, 0) == Rational(0));
    CHECK(weight_value({2, 9}, 4) == rat(1, 4));
    CHECK(weight_value({3, 4}, 2) == rat(1, 12));  // 1/(binom(4,2)*2)
    CHECK_THROWS_AS(weight_value({1, 4}, 5), std::invalid_argument);
    CHECK_THROWS_AS(weight_value({4, 4}, 1), std::invalid_argument);
}

TEST_CASE("normalizers") {
    CHECK(normalizer({1, 4}) == Rational(16));
    CHECK(normalizer({2, 2}) == rat(5, 2));   // binom(2,1)/1 + binom(2,2)/2
    CHECK(normalizer({3, 3}) == rat(11, 6));  // 1 + 1/2 + 1/3
}

TEST_CASE("normalizer equals total subset weight for every j") {
    for (int n = 1; n <= 12; ++n) {
        for (int j = 1; j <= 3; ++j) {
            WeightSpec spec{j, n};
            Rational total(0);
            for (int k = 0; k <= n; ++k)
                total += Rational(binom(n, k)) * weight_value(spec, k);
            CHECK(total == normalizer(spec));
        }
    }
}

TEST_CASE("unsplit weight examples") {
    CHECK(unsplit_weight({1, 5}, 2) == Rational(16));   // 2^(n-a+1)
    CHECK(unsplit_weight({3, 3}, 1) == rat(11, 6));     // 1 + 1/2 + 1/3
    CHECK(unsplit_weight({3, 7}, 7) == rat(1, 7));      // empty harmonic tail
}

TEST_CASE("closed forms agree with the definitional sums") {
    CHECK(unsplit_weight_closed({1, 5}, 2) == Rational(16));
    CHECK(unsplit_weight_closed({3, 3}, 1) == rat(11, 6));
    CHECK(unsplit_weight_closed({3, 9}, 9) == rat(1, 9));
    for (int n = 1; n <= 20; ++n)
        for (int a = 1; a <= n; ++a)
            for (int j : {1, 2, 3})
                CHECK(unsplit_weight_closed({j, n}, a) == unsplit_weight({j, n}, a));
}

TEST_CASE("block-size formula basics") {
    CHECK(f_from_block_sizes({1, 3}, {1, 4}) == Rational(36));
    CHECK(f_from_block_sizes({1, 1}, {1, 2}) == Rational(0));
    CHECK_THROWS_AS(f_from_block_sizes({1, 2}, {1, 4}), std::invalid_argument);
}

TEST_CASE("objective profiles") {
    auto p1 = item_objective_profile({1, 8});
    CHECK(p1.at(1) == rat(1, 2));
    CHECK(p1.at(2) == rat(1, 2));
    CHECK(p1.at(3) == rat(3, 8));  // a / 2^a after the 1/2^(n+1) scaling
    CHECK(p1.unscaled_at(2) == Rational(2) * unsplit_weight_closed({1, 8}, 2));

    auto p3 = item_objective_profile({3, 3});
    CHECK(p3.at(3) == Rational(1));  // g(n) = 1, empty tail

    auto p2 = item_objective_profile({2, 6});
    CHECK(p2.at(2) - p2.at(1) == rat(29, 60));
}

TEST_CASE("profile values are positive and the table has length n") {
    for (int j : {1, 2, 3}) {
        for (int n : {2, 7, 15}) {
            auto p = item_objective_profile({j, n});
            CHECK(p.values.size() == static_cast<size_t>(n));
            for (int a = 1; a <= n; ++a) CHECK(sign_of(p.at(a)) > 0);
        }
    }
}

TEST_CASE("j=1 profile is strictly decreasing after the initial plateau") {
    auto p = item_objective_profile({1, 12});
    CHECK(p.at(1) == p.at(2));
    for (int a = 2; a <= 11; ++a) CHECK(p.at(a) > p.at(a + 1));
}

TEST_CASE("j=2 profile rises once then falls, for n >= 6") {
    for (int n = 6; n <= 14; ++n) {
        auto p = item_objective_profile({2, n});
        CHECK(p.at(2) > p.at(1));
        for (int a = 2; a <= n - 1; ++a) CHECK(p.at(a + 1) < p.at(a));
    }
}

TEST_CASE("shape analysis finds the concave-convex threshold") {
    auto s1 = shape_analysis(item_objective_profile({1, 10}));
    CHECK(s1.c == 3);
    CHECK(s1.lin_equality);
    CHECK(s1.valid());

    auto s2 = shape_analysis(item_objective_profile({2, 13}));
    CHECK(s2.c == 4);
    CHECK_FALSE(s2.lin_equality);
    CHECK(s2.valid());

    auto s3 = shape_analysis(item_objective_profile({3, 9}));
    CHECK(s3.c == 9);  // concave throughout: threshold degenerates to n
    CHECK(s3.valid());
}

TEST_CASE("j=3 second differences are exactly -1/a") {
    for (int n : {5, 12, 30}) {
        auto p = item_objective_profile({3, n});
        for (int a = 2; a <= n - 1; ++a)
            CHECK(second_difference(p, a) == -rat(1, a));
    }
}

TEST_CASE("j=1 threshold equality: 2g(3) = g(2) + g(4)") {
    auto p = item_objective_profile({1, 6});
    CHECK(2 * p.at(3) == p.at(2) + p.at(4));
}

TEST_CASE("reciprocal binomial sum and its closed form") {
    CHECK(reciprocal_binomial_sum(0, 2, 3) == rat(1, 6));
    CHECK(reciprocal_binomial_sum(1, 1, 2) == Rational(1));
    CHECK(reciprocal_binomial_sum(2, 1, 3) == Rational(1));
    for (int c = 1; c <= 30; ++c)
        for (int b = 1; b <= c; ++b)
            for (int a = 0; a + b <= c; ++a)
                CHECK(reciprocal_binomial_sum(a, b, c) ==
                      reciprocal_binomial_sum_closed(a, b, c));
    CHECK_THROWS_AS(reciprocal_binomial_sum(3, 1, 2), std::invalid_argument);
}

TEST_CASE("superset transform sum collapses to 1/a") {
    CHECK(w3_superset_sum(3, 2) == rat(1, 2));
    CHECK(w3_superset_sum(6, 6) == rat(1, 6));
    CHECK(w3_superset_sum(5, 1) == Rational(1));
    for (int n = 1; n <= 30; ++n)
        for (int a = 1; a <= n; ++a) CHECK(w3_superset_sum(n, a) == rat(1, a));
}

TEST_CASE("disjoint transform sum collapses to the harmonic tail") {
    CHECK(w3_disjoint_sum(3, 1) == rat(5, 6));
    CHECK(w3_disjoint_sum(7, 7) == Rational(0));
    CHECK(w3_disjoint_sum(4, 2) == rat(7, 12));
    for (int n = 1; n <= 30; ++n)
        for (int a = 1; a <= n; ++a)
            CHECK(w3_disjoint_sum(n, a) == harmonic_tail(n, a));
}
