#pragma once

// Machine certification of the j=2 comparison inequalities. A comparison
// sum_i alpha_i * g(a_i) (with g the unscaled j=2 item objective and
// sum_i alpha_i * a_i = 0) equals an exact polynomial integral
//     integral_0^1 (1+t)^(n - a_k) * r(t) dt,
// where r is built from a fixed kernel polynomial. Certifying the sign of r
// on [0,1] (nonnegative, or a single sign change) therefore settles the
// comparison for every n above an explicit threshold. Root counting is
// exact (Sturm sequences over rationals), never sampled.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "roughbound/polynomial.hpp"
#include "roughbound/rational.hpp"
#include "roughbound/weights.hpp"

namespace roughbound {

struct ComparisonSpec {
    std::vector<int> a;      // strictly increasing positive items a_1 < ... < a_k
    std::vector<int> alpha;  // integer coefficients with sum alpha_i * a_i = 0

    void validate() const {
        if (a.empty() || a.size() != alpha.size())
            throw std::invalid_argument("comparison spec needs equal-length nonempty vectors");
        long dot = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 1) throw std::invalid_argument("items must be positive");
            if (i > 0 && a[i] <= a[i - 1])
                throw std::invalid_argument("items must be strictly increasing");
            dot += static_cast<long>(alpha[i]) * a[i];
        }
        if (dot != 0) throw std::invalid_argument("alpha . a must be zero");
    }

    int max_item() const { return a.back(); }

    // sum alpha_i g(a_i) evaluated exactly on the unscaled j=2 profile at n
    Rational exact_value(int n) const {
        WeightSpec spec{2, n};
        Rational acc(0);
        for (size_t i = 0; i < a.size(); ++i)
            acc += Rational(alpha[i]) * Rational(a[i]) * unsplit_weight_closed(spec, a[i]);
        return acc;
    }

    // human-readable claim, e.g. "g(1,7) > g(4,4)"
    std::string claim() const {
        auto side = [&](int sign) {
            std::ostringstream os;
            os << "g(";
            bool first = true;
            for (size_t i = 0; i < a.size(); ++i) {
                int count = sign * alpha[i];
                for (int c = 0; c < count; ++c) {
                    if (!first) os << ',';
                    os << a[i];
                    first = false;
                }
            }
            os << ')';
            return os.str();
        };
        return side(+1) + " > " + side(-1);
    }
};

// Kernel polynomial sum_i alpha_i a_i t^(a_i - a_1) (1+t)^(a_k - a_i).
// The zero-sum constraint kills the top coefficient, so the degree is at
// most a_k - a_1 - 1.
inline RationalPolynomial kernel_polynomial(const ComparisonSpec& spec) {
    spec.validate();
    const int a1 = spec.a.front(), ak = spec.a.back();
    RationalPolynomial acc;
    for (size_t i = 0; i < spec.a.size(); ++i) {
        if (spec.alpha[i] == 0) continue;
        RationalPolynomial term =
            RationalPolynomial::one_plus_t_pow(ak - spec.a[i])
                .shifted_up(spec.a[i] - a1) *
            Rational(static_cast<long>(spec.alpha[i]) * spec.a[i]);
        acc = acc + term;
    }
    return acc;
}

// r(t) = t^(a_k - a_1 - 1) q(1/t) + t^(a_1 - 1) q(t) for the kernel q.
inline RationalPolynomial comparison_integrand(const ComparisonSpec& spec) {
    spec.validate();
    const int a1 = spec.a.front(), ak = spec.a.back();
    if (ak - a1 < 1) throw std::invalid_argument("degenerate comparison: a_k = a_1");
    RationalPolynomial q = kernel_polynomial(spec);
    if (q.degree() > ak - a1 - 1)
        throw std::logic_error("kernel degree exceeds a_k - a_1 - 1");
    return q.reversed(ak - a1 - 1) + q.shifted_up(a1 - 1);
}

// integral_0^1 (1+t)^l r(t) dt, exactly.
inline Rational integrate_01_shifted(const RationalPolynomial& r, int l) {
    if (l < 0) throw std::invalid_argument("negative shift");
    return (RationalPolynomial::one_plus_t_pow(l) * r).integral_01();
}

enum class SignKind {
    nonneg,                // r >= 0 on [0,1], not identically zero
    nonpos,                // r <= 0 on [0,1], not identically zero
    single_crossing_up,    // r < 0 on [0,x0), r > 0 on (x0,1]
    single_crossing_down,  // r > 0 on [0,x0), r < 0 on (x0,1]
    indefinite,
};

inline const char* to_string(SignKind kind) {
    switch (kind) {
        case SignKind::nonneg: return "nonneg";
        case SignKind::nonpos: return "nonpos";
        case SignKind::single_crossing_up: return "single_crossing_up";
        case SignKind::single_crossing_down: return "single_crossing_down";
        default: return "indefinite";
    }
}

struct SignCertificate {
    SignKind kind = SignKind::indefinite;
    // isolating rational interval for x0 (degenerate [x,x] when exact)
    std::optional<std::pair<Rational, Rational>> root_bracket;
    std::optional<int> l;                  // shift used, crossing kinds only
    std::optional<Rational> shifted_integral;  // integral_0^1 (1+t)^l r dt
    int min_n = 0;                         // certified from this n on
};

// Exact sign classification of a nonzero polynomial over [0,1]: square-free
// part, Sturm root isolation in (0,1), then exact sign evaluation on every
// component between roots. The single-crossing kinds are strict: any
// interior zero on the negative (resp. positive) side disqualifies.
inline SignCertificate certify_sign(const RationalPolynomial& r) {
    if (r.is_zero()) throw std::invalid_argument("sign certification of zero polynomial");
    SignCertificate cert;

    const int sign0 = sign_of(r.eval(Rational(0)));
    const int sign1 = sign_of(r.eval(Rational(1)));
    auto brackets = isolate_roots_open01(r);

    // sample points: one inside each open component between consecutive roots
    std::vector<Rational> samples;
    Rational prev_hi(0);
    for (const auto& b : brackets) {
        samples.push_back((prev_hi + b.first) / 2);
        prev_hi = b.second;
    }
    samples.push_back((prev_hi + 1) / 2);

    std::vector<int> signs;
    for (const auto& x : samples) {
        int s = sign_of(r.eval(x));
        if (s == 0) throw std::logic_error("sample point landed on a root");
        signs.push_back(s);
    }

    bool all_pos = sign0 >= 0 && sign1 >= 0;
    bool all_neg = sign0 <= 0 && sign1 <= 0;
    for (int s : signs) {
        all_pos = all_pos && s > 0;
        all_neg = all_neg && s < 0;
    }
    if (all_pos) {
        cert.kind = SignKind::nonneg;
        return cert;
    }
    if (all_neg) {
        cert.kind = SignKind::nonpos;
        return cert;
    }
    if (brackets.size() == 1 && signs.size() == 2) {
        if (signs[0] < 0 && signs[1] > 0 && sign0 < 0 && sign1 > 0) {
            cert.kind = SignKind::single_crossing_up;
            cert.root_bracket = brackets.front();
            return cert;
        }
        if (signs[0] > 0 && signs[1] < 0 && sign0 > 0 && sign1 < 0) {
            cert.kind = SignKind::single_crossing_down;
            cert.root_bracket = brackets.front();
            return cert;
        }
    }
    cert.kind = SignKind::indefinite;
    return cert;
}

enum class CertStatus { certified, inconclusive };

struct ComparisonOutcome {
    CertStatus status = CertStatus::inconclusive;
    int direction = 0;          // +1: sum > 0 certified, -1: sum < 0
    bool applies_at_n = false;  // n >= certificate.min_n
    SignCertificate certificate;
    RationalPolynomial integrand;
    Rational exact_value;       // direct evaluation at the given n
};

// Certifies the sign of sum alpha_i g(a_i) for the j=2 objective. Either
// the integrand keeps one sign on [0,1] (valid for every n >= a_k), or it
// crosses once and a shift l with strictly positive shifted integral is
// searched in 0..l_max (valid for n >= a_k + l). The outcome is always
// cross-checked against the exact profile value at the given n.
inline ComparisonOutcome verify_comparison(const ComparisonSpec& spec, int n,
                                           int l_max = 32) {
    spec.validate();
    if (n < spec.max_item())
        throw std::invalid_argument("n must be at least the largest item");

    ComparisonOutcome outcome;
    outcome.integrand = comparison_integrand(spec);
    outcome.exact_value = spec.exact_value(n);
    outcome.certificate = certify_sign(outcome.integrand);
    auto& cert = outcome.certificate;

    switch (cert.kind) {
        case SignKind::nonneg:
            outcome.status = CertStatus::certified;
            outcome.direction = +1;
            cert.min_n = spec.max_item();
            break;
        case SignKind::nonpos:
            outcome.status = CertStatus::certified;
            outcome.direction = -1;
            cert.min_n = spec.max_item();
            break;
        case SignKind::single_crossing_up:
        case SignKind::single_crossing_down: {
            const int want = cert.kind == SignKind::single_crossing_up ? +1 : -1;
            for (int l = 0; l <= l_max; ++l) {
                Rational value = integrate_01_shifted(outcome.integrand, l);
                if (sign_of(value) == want) {
                    cert.l = l;
                    cert.shifted_integral = value;
                    cert.min_n = spec.max_item() + l;
                    outcome.status = CertStatus::certified;
                    outcome.direction = want;
                    break;
                }
            }
            break;
        }
        case SignKind::indefinite:
            break;
    }

    if (outcome.status == CertStatus::certified) {
        outcome.applies_at_n = n >= cert.min_n;
        if (outcome.applies_at_n &&
            sign_of(outcome.exact_value) != outcome.direction)
            throw std::logic_error("certificate contradicts exact evaluation at n=" +
                                   std::to_string(n));
    }
    return outcome;
}

// Sign of g(a-1) - 2 g(a) + g(a+1) for the j=2 objective, certified through
// the integrand pipeline: concave (negative) at a in {2,3}, convex from
// a = 4 on.
struct SecondDifferenceResult {
    int a = 0;
    int direction = 0;  // -1: concave at a, +1: convex at a
    ComparisonOutcome outcome;
};

inline SecondDifferenceResult verify_second_difference(int a, int n) {
    if (n < 6) throw std::invalid_argument("second-difference certificates need n >= 6");
    if (a < 2 || a > n - 1) throw std::invalid_argument("need 2 <= a <= n-1");
    ComparisonSpec spec{{a - 1, a, a + 1}, {1, -2, 1}};
    SecondDifferenceResult result;
    result.a = a;
    result.outcome = verify_comparison(spec, n);
    if (result.outcome.status != CertStatus::certified || !result.outcome.applies_at_n)
        throw std::logic_error("second difference at a=" + std::to_string(a) +
                               " could not be certified");
    result.direction = result.outcome.direction;
    return result;
}

// --- the built-in comparison catalog ----------------------------------------

struct CatalogRow {
    ComparisonSpec spec;
    ComparisonOutcome outcome;
};

// The nine pair/triple exchange inequalities the j=2 optimality analysis
// rests on. All of them certify direction +1.
inline std::vector<ComparisonSpec> comparison_catalog() {
    return {
        {{1, 4, 7}, {1, -2, 1}},        // g(1,7)   > g(4,4)
        {{1, 4, 5, 8}, {1, -1, -1, 1}}, // g(1,8)   > g(4,5)
        {{1, 2, 3, 4}, {-1, 1, 1, -1}}, // g(2,3)   > g(1,4)
        {{2, 3, 4, 5}, {1, -1, -1, 1}}, // g(2,5)   > g(3,4)
        {{1, 3, 5}, {-1, 2, -1}},       // g(3,3)   > g(1,5)
        {{1, 3, 4, 6}, {-1, 1, 1, -1}}, // g(3,4)   > g(1,6)
        {{1, 4, 5, 6}, {1, -2, -1, 2}}, // g(1,6,6) > g(4,4,5)
        {{2, 3, 5}, {2, -3, 1}},        // g(2,2,5) > g(3,3,3)
        {{1, 4, 5, 6}, {-1, 3, -1, -1}} // g(4,4,4) > g(1,5,6)
    };
}

inline std::vector<CatalogRow> inequality_table(int n = 16) {
    std::vector<CatalogRow> rows;
    for (const auto& spec : comparison_catalog()) {
        CatalogRow row;
        row.spec = spec;
        row.outcome = verify_comparison(spec, n);
        rows.push_back(std::move(row));
    }
    return rows;
}

// --- inequality families proved by induction on the exchange step ----------
//
// Evaluated exactly on the j=2 profile at a concrete n:
//   g(1) + g(2k-1) > 2 g(k)        for k >= 4, 2k <= n,
//   g(1) + g(2k)   > g(k) + g(k+1) for k >= 4, 2k < n,
//   g(2) + g(a+1)  > g(3) + g(a)   for 4 <= a <= n-3.

struct ExchangeChecks {
    int n = 0;
    int odd_family_checked = 0;
    int even_family_checked = 0;
    int shift_family_checked = 0;
    bool all_hold = true;
};

inline ExchangeChecks verify_exchange_inequalities(int n) {
    if (n < 8) throw std::invalid_argument("exchange inequalities need n >= 8");
    ObjectiveProfile g = item_objective_profile(WeightSpec{2, n});
    ExchangeChecks checks;
    checks.n = n;
    if (n >= 11) {
        for (int k = 4; 2 * k <= n; ++k) {
            ++checks.odd_family_checked;
            checks.all_hold =
                checks.all_hold && g.at(1) + g.at(2 * k - 1) > g.at(k) + g.at(k);
        }
        for (int k = 4; 2 * k < n; ++k) {
            ++checks.even_family_checked;
            checks.all_hold =
                checks.all_hold && g.at(1) + g.at(2 * k) > g.at(k) + g.at(k + 1);
        }
    }
    for (int a = 4; a <= n - 3; ++a) {
        ++checks.shift_family_checked;
        checks.all_hold =
            checks.all_hold && g.at(2) + g.at(a + 1) > g.at(3) + g.at(a);
    }
    return checks;
}

// --- monotonicity machinery -------------------------------------------------
//
// The j=2 objective satisfies g(2) > g(1) and g strictly decreasing from 2
// on (for n >= 6). The induction behind that rests on the polynomial
//     step(a, n) = (1+t)^(n-a-1) * ((1 - a t) + t^a (t - a)),
// which is the exact difference of consecutive-n difference integrands:
// nonnegative for a = 1, negative integral for a >= 2; plus the base value
// g(2) - g(1) = 29/60 at n = 6 and the initial comparison at n = a+1.

inline RationalPolynomial monotonicity_step_core(int a) {
    if (a < 1) throw std::invalid_argument("need a >= 1");
    // (1 - a t) + t^a (t - a)
    RationalPolynomial left = RationalPolynomial(
        std::vector<Rational>{Rational(1), Rational(-a)});
    RationalPolynomial right =
        RationalPolynomial(std::vector<Rational>{Rational(-a), Rational(1)})
            .shifted_up(a);
    return left + right;
}

inline RationalPolynomial monotonicity_step(int a, int n) {
    if (n < a + 1) throw std::invalid_argument("need n >= a+1");
    return RationalPolynomial::one_plus_t_pow(n - a - 1) * monotonicity_step_core(a);
}

// Initial difference at n = a+1: -a + t^(a-1) (t - a), strictly negative
// on [0,1].
inline RationalPolynomial monotonicity_initial(int a) {
    if (a < 1) throw std::invalid_argument("need a >= 1");
    return RationalPolynomial(std::vector<Rational>{Rational(-a)}) +
           RationalPolynomial(std::vector<Rational>{Rational(-a), Rational(1)})
               .shifted_up(a - 1);
}

struct MonotonicityChecks {
    bool base_value_ok = false;      // g(2,6) - g(1,6) == 29/60
    bool increasing_step_ok = false; // step core for a=1 certified nonneg
    bool decreasing_steps_ok = false;
    bool initial_values_ok = false;
    bool profile_ok = false;         // g(2) > g(1), g decreasing on {2..n}

    bool all_ok() const {
        return base_value_ok && increasing_step_ok && decreasing_steps_ok &&
               initial_values_ok && profile_ok;
    }
};

inline MonotonicityChecks verify_monotonicity_machinery(int n) {
    if (n < 6) throw std::invalid_argument("monotonicity machinery needs n >= 6");
    MonotonicityChecks checks;

    ObjectiveProfile base = item_objective_profile(WeightSpec{2, 6});
    checks.base_value_ok = base.at(2) - base.at(1) == rat(29, 60);

    checks.increasing_step_ok =
        certify_sign(monotonicity_step_core(1)).kind == SignKind::nonneg;

    checks.decreasing_steps_ok = true;
    checks.initial_values_ok = true;
    for (int a = 2; a <= n - 1; ++a) {
        for (int nn = a + 1; nn <= n; ++nn)
            checks.decreasing_steps_ok =
                checks.decreasing_steps_ok &&
                sign_of(monotonicity_step(a, nn).integral_01()) < 0;
        checks.initial_values_ok =
            checks.initial_values_ok &&
            certify_sign(monotonicity_initial(a)).kind == SignKind::nonpos;
    }

    ObjectiveProfile g = item_objective_profile(WeightSpec{2, n});
    checks.profile_ok = g.at(2) > g.at(1);
    for (int a = 2; a <= n - 1; ++a)
        checks.profile_ok = checks.profile_ok && g.at(a + 1) < g.at(a);

    return checks;
}

}  // namespace roughbound
