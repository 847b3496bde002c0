#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "roughbound/polynomial.hpp"

using namespace roughbound;

namespace {
RationalPolynomial poly(const std::vector<long>& c) {
    return RationalPolynomial::from_integers(c);
}
}  // namespace

TEST_CASE("construction trims trailing zeros; zero degree sentinel is -1") {
    CHECK(poly({1, 2, 0, 0}).degree() == 1);
    CHECK(RationalPolynomial{}.degree() == -1);
    CHECK(poly({0}).is_zero());
}

TEST_CASE("binomial powers of (1+t)") {
    CHECK(RationalPolynomial::one_plus_t_pow(2) == poly({1, 2, 1}));
    CHECK(RationalPolynomial::one_plus_t_pow(0) == poly({1}));
}

TEST_CASE("reversal computes t^d p(1/t)") {
    CHECK(poly({2, 3}).reversed(1) == poly({3, 2}));
    CHECK(poly({2, 3}).reversed(3) == poly({0, 0, 3, 2}));
    CHECK_THROWS_AS(poly({1, 1, 1}).reversed(1), std::invalid_argument);
}

TEST_CASE("degree is additive under multiplication") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> a(static_cast<size_t>(deg(rng)) + 1), b(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : a) v = coeff(rng);
        for (auto& v : b) v = coeff(rng);
        a.back() = a.back() == 0 ? 1 : a.back();
        b.back() = b.back() == 0 ? 1 : b.back();
        CHECK((poly(a) * poly(b)).degree() == poly(a).degree() + poly(b).degree());
    }
}

TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long> a(static_cast<size_t>(deg(rng)) + 1), b(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : a) v = coeff(rng);
        for (auto& v : b) v = coeff(rng);
        b.back() = b.back() == 0 ? 2 : b.back();
        auto [q, r] = poly(a).divmod(poly(b));
        CHECK(q * poly(b) + r == poly(a));
        CHECK(r.degree() < poly(b).degree());
    }
}

TEST_CASE("gcd and squarefree part") {
    auto square = poly({-1, 3}) * poly({-1, 3});  // (3t-1)^2
    auto sf = square.squarefree_part();
    CHECK(sf.degree() == 1);
    CHECK(sign_of(sf.eval(rat(1, 3))) == 0);

    auto g = RationalPolynomial::gcd(poly({-1, 0, 1}), poly({1, 1}));  // t^2-1 vs t+1
    CHECK(g == poly({1, 1}));
}

TEST_CASE("exact integration over [0,1]") {
    CHECK(poly({0, 2}).integral_01() == Rational(1));
    CHECK(poly({1, 1, 1}).integral_01() == rat(11, 6));
    CHECK(RationalPolynomial{}.integral_01() == Rational(0));
}

TEST_CASE("Sturm sequence counts distinct roots") {
    // (t - 1/4)(t - 1/2)(t - 3/4) has three roots in (0,1)
    auto p = RationalPolynomial(std::vector<Rational>{rat(-1, 4), Rational(1)}) *
             RationalPolynomial(std::vector<Rational>{rat(-1, 2), Rational(1)}) *
             RationalPolynomial(std::vector<Rational>{rat(-3, 4), Rational(1)});
    auto chain = sturm_sequence(p);
    CHECK(sturm_root_count(chain, Rational(0), Rational(1)) == 3);
    CHECK(sturm_root_count(chain, Rational(0), rat(3, 8)) == 1);

    // no roots inside for t^2 + 1
    auto none = sturm_sequence(poly({1, 0, 1}));
    CHECK(sturm_root_count(none, Rational(0), Rational(1)) == 0);
}

TEST_CASE("root isolation separates and brackets every root") {
    auto p = RationalPolynomial(std::vector<Rational>{rat(-1, 4), Rational(1)}) *
             RationalPolynomial(std::vector<Rational>{rat(-1, 2), Rational(1)}) *
             RationalPolynomial(std::vector<Rational>{rat(-3, 4), Rational(1)});
    auto brackets = isolate_roots_open01(p);
    REQUIRE(brackets.size() == 3);
    Rational roots[] = {rat(1, 4), rat(1, 2), rat(3, 4)};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(brackets[i].first <= roots[i]);
        CHECK(roots[i] <= brackets[i].second);
        if (i > 0) CHECK(brackets[i - 1].second < brackets[i].first);
    }

    // multiplicities are collapsed; endpoint roots are ignored
    auto q = poly({0, 1}) * poly({-1, 1}) * poly({-2, 4}) * poly({-2, 4});  // t(t-1)(4t-2)^2
    auto b2 = isolate_roots_open01(q);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0].first <= rat(1, 2));
    CHECK(rat(1, 2) <= b2[0].second);
}

TEST_CASE("isolation of a polynomial with no interior roots") {
    CHECK(isolate_roots_open01(poly({1, 0, 1})).empty());
    CHECK(isolate_roots_open01(poly({0, 1})).empty());  // root at 0 only
}
