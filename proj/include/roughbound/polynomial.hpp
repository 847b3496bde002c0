#pragma once

// Dense univariate polynomials over exact rationals, plus the root-counting
// machinery (Sturm sequences, interval isolation) used by the sign
// certificates. Degrees stay small (~40), so everything is dense and direct.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "roughbound/rational.hpp"

namespace roughbound {

class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        trim();
    }

    static RationalPolynomial from_integers(const std::vector<long>& coeffs) {
        std::vector<Rational> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.emplace_back(v);
        return RationalPolynomial(std::move(c));
    }

    static RationalPolynomial monomial(int exponent, Rational coeff = Rational(1)) {
        if (exponent < 0) throw std::invalid_argument("negative exponent");
        std::vector<Rational> c(static_cast<size_t>(exponent) + 1, Rational(0));
        c.back() = std::move(coeff);
        return RationalPolynomial(std::move(c));
    }

    // (1+t)^l by binomial coefficients.
    static RationalPolynomial one_plus_t_pow(int l) {
        if (l < 0) throw std::invalid_argument("negative power of (1+t)");
        std::vector<Rational> c;
        c.reserve(static_cast<size_t>(l) + 1);
        for (int i = 0; i <= l; ++i) c.emplace_back(binom(l, i));
        return RationalPolynomial(std::move(c));
    }

    // degree of the zero polynomial reported as -1 (sentinel for "-inf")
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Rational& coeff(int i) const {
        static const Rational zero(0);
        if (i < 0 || i > degree()) return zero;
        return coeffs_[static_cast<size_t>(i)];
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    RationalPolynomial operator+(const RationalPolynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial operator-(const RationalPolynomial& o) const {
        std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial operator-() const {
        std::vector<Rational> c(coeffs_);
        for (auto& v : c) v = -v;
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial operator*(const RationalPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial operator*(const Rational& s) const {
        if (sgn(s) == 0) return {};
        std::vector<Rational> c(coeffs_);
        for (auto& v : c) v *= s;
        return RationalPolynomial(std::move(c));
    }

    bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalPolynomial& o) const { return !(*this == o); }

    // t^shift * p(t)
    RationalPolynomial shifted_up(int shift) const {
        if (shift < 0) throw std::invalid_argument("negative shift");
        if (is_zero()) return {};
        std::vector<Rational> c(static_cast<size_t>(shift), Rational(0));
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return RationalPolynomial(std::move(c));
    }

    // t^d * p(1/t): coefficient reversal padded to length d+1. Needs d >= deg p.
    RationalPolynomial reversed(int d) const {
        if (d < degree())
            throw std::invalid_argument("reversal order below polynomial degree");
        std::vector<Rational> c(static_cast<size_t>(d) + 1, Rational(0));
        for (int i = 0; i <= degree(); ++i)
            c[static_cast<size_t>(d - i)] = coeffs_[static_cast<size_t>(i)];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial derivative() const {
        if (degree() < 1) return {};
        std::vector<Rational> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
        return RationalPolynomial(std::move(c));
    }

    // Exact integral over [0, 1] by the power rule.
    Rational integral_01() const {
        Rational acc(0);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            acc += coeffs_[i] / Rational(static_cast<long>(i) + 1);
        return acc;
    }

    // Euclidean division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<RationalPolynomial, RationalPolynomial> divmod(
        const RationalPolynomial& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
        std::vector<Rational> rem(coeffs_);
        int dd = divisor.degree();
        int dr = static_cast<int>(rem.size()) - 1;
        if (dr < dd) return {RationalPolynomial{}, *this};
        std::vector<Rational> quot(static_cast<size_t>(dr - dd) + 1, Rational(0));
        const Rational& lead = divisor.coeffs_.back();
        for (int k = dr - dd; k >= 0; --k) {
            Rational factor = rem[static_cast<size_t>(k + dd)] / lead;
            quot[static_cast<size_t>(k)] = factor;
            if (sgn(factor) == 0) continue;
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<size_t>(k + i)] -= factor * divisor.coeffs_[static_cast<size_t>(i)];
        }
        return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
    }

    // Monic gcd.
    static RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
        while (!b.is_zero()) {
            RationalPolynomial r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a * (Rational(1) / a.coeffs_.back());
    }

    RationalPolynomial squarefree_part() const {
        if (degree() < 1) return *this;
        RationalPolynomial g = gcd(*this, derivative());
        if (g.degree() < 1) return *this;
        return divmod(g).first;
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// --- Sturm machinery -------------------------------------------------------

// Chain p0 = p, p1 = p', p_{k+1} = -rem(p_{k-1}, p_k). Intermediate
// polynomials are rescaled by positive constants, which preserves sign
// variation counts.
inline std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    RationalPolynomial d = p.derivative();
    while (!d.is_zero()) {
        chain.push_back(d);
        RationalPolynomial rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        d = -rem;
        // normalize magnitude: divide by |leading coefficient|
        Rational lead = d.coeff(d.degree());
        if (sgn(lead) < 0) lead = -lead;
        d = d * (Rational(1) / lead);
    }
    return chain;
}

inline int sign_variations_at(const std::vector<RationalPolynomial>& chain,
                              const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

// Number of distinct roots of squarefree p in (a, b]; requires p(a) != 0.
inline int sturm_root_count(const std::vector<RationalPolynomial>& chain,
                            const Rational& a, const Rational& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

// Isolating intervals for the distinct roots of p in the open interval (0,1).
// Brackets are [lo, hi] with exactly one root each; an exact rational root x
// is reported as the degenerate bracket [x, x]. The input need not be
// squarefree and may vanish at 0 or 1 (those endpoint roots are ignored).
// Guarantees on the result: brackets are sorted and pairwise disjoint,
// interval brackets have sign-changing non-root endpoints, and no bracket
// touches 0 or 1.
inline std::vector<std::pair<Rational, Rational>> isolate_roots_open01(
    const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");

    RationalPolynomial s = p.squarefree_part();
    // deflate roots at the endpoints so Sturm endpoints are clean
    while (sgn(s.eval(Rational(0))) == 0)
        s = s.divmod(RationalPolynomial::from_integers({0, 1})).first;
    while (sgn(s.eval(Rational(1))) == 0)
        s = s.divmod(RationalPolynomial::from_integers({-1, 1})).first;

    using Bracket = std::pair<Rational, Rational>;
    std::vector<Bracket> exact_roots;

    // exact rational roots (found at bisection midpoints) are deflated from s
    // and the scan restarts; intervals accepted later must keep clear of them
    auto contains_exact = [&](const Rational& lo, const Rational& hi) {
        for (const auto& e : exact_roots)
            if (lo <= e.first && e.first <= hi) return true;
        return false;
    };

    std::vector<Bracket> brackets;
    for (;;) {
        bool deflated = false;
        brackets.clear();
        auto chain = sturm_sequence(s);
        std::vector<Bracket> stack;
        if (s.degree() >= 1 && sturm_root_count(chain, Rational(0), Rational(1)) > 0)
            stack.emplace_back(Rational(0), Rational(1));
        while (!stack.empty()) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            int count = sturm_root_count(chain, lo, hi);
            if (count == 0) continue;
            if (count == 1 && sgn(s.eval(lo)) * sgn(s.eval(hi)) < 0 &&
                !contains_exact(lo, hi)) {
                brackets.emplace_back(lo, hi);
                continue;
            }
            Rational mid = (lo + hi) / 2;
            if (sgn(s.eval(mid)) == 0) {
                exact_roots.emplace_back(mid, mid);
                s = s.divmod(RationalPolynomial(std::vector<Rational>{-mid, Rational(1)}))
                        .first;
                deflated = true;
                break;
            }
            stack.emplace_back(lo, mid);
            stack.emplace_back(mid, hi);
        }
        if (!deflated) break;
    }

    // one bisection step on an interval bracket, keeping the root inside
    auto refine = [&](Bracket& b) {
        if (b.first == b.second) return;
        Rational mid = (b.first + b.second) / 2;
        int sm = sgn(s.eval(mid));
        if (sm == 0) {
            b = {mid, mid};
            return;
        }
        if (sgn(s.eval(b.first)) * sm < 0)
            b.second = mid;
        else
            b.first = mid;
    };

    for (auto& e : exact_roots) brackets.push_back(e);
    std::sort(brackets.begin(), brackets.end(),
              [](const Bracket& x, const Bracket& y) { return x.first < y.first; });

    // separate brackets from each other and from the interval endpoints
    for (size_t i = 0; i < brackets.size(); ++i) {
        while (sgn(brackets[i].first) == 0) refine(brackets[i]);
        while (brackets[i].second == 1) refine(brackets[i]);
        while (i > 0 && !(brackets[i - 1].second < brackets[i].first)) {
            if (brackets[i].first != brackets[i].second)
                refine(brackets[i]);
            else
                refine(brackets[i - 1]);
        }
    }
    return brackets;
}

}  // namespace roughbound
