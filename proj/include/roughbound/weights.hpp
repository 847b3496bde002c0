#pragma once

// The three subset-weight laws, the per-block-size weight transform and its
// closed forms, the block-size formula for the expected boundary size, the
// per-item objective profile with its concave/convex shape analysis, and the
// exact binomial-reciprocal identities behind the j=3 closed form.

#include <stdexcept>
#include <vector>

#include "roughbound/rational.hpp"

namespace roughbound {

struct WeightSpec {
    int j = 1;  // distribution index, 1..3
    int n = 1;  // ground set size

    void validate() const {
        if (j < 1 || j > 3) throw std::invalid_argument("distribution index must be 1, 2 or 3");
        if (n < 1) throw std::invalid_argument("ground set must be nonempty");
    }
};

// w_j(k): weight of a subset of cardinality k. w_1 = 1, w_2(k) = 1/k,
// w_3(k) = 1/(binom(n,k) k), with w_2(0) = w_3(0) = 0.
inline Rational weight_value(const WeightSpec& spec, int k) {
    spec.validate();
    if (k < 0 || k > spec.n) throw std::invalid_argument("cardinality out of range");
    switch (spec.j) {
        case 1:
            return Rational(1);
        case 2:
            return k == 0 ? Rational(0) : rat(1, k);
        default:
            if (k == 0) return Rational(0);
            return Rational(1) / (Rational(binom(spec.n, k)) * Rational(k));
    }
}

// N_j: total weight of all subsets, i.e. sum_k binom(n,k) w_j(k).
// N_1 = 2^n, N_2 = sum binom(n,k)/k, N_3 = H_n.
inline Rational normalizer(const WeightSpec& spec) {
    spec.validate();
    switch (spec.j) {
        case 1:
            return Rational(pow2(spec.n));
        case 2: {
            Rational acc(0);
            for (int k = 1; k <= spec.n; ++k)
                acc += Rational(binom(spec.n, k)) / Rational(k);
            return acc;
        }
        default: {
            Rational acc(0);
            for (int k = 1; k <= spec.n; ++k) acc += rat(1, k);
            return acc;
        }
    }
}

inline Rational harmonic_tail(int n, int a) {
    Rational acc(0);
    for (int k = a + 1; k <= n; ++k) acc += rat(1, k);
    return acc;
}

// Total weight of the subsets that leave a fixed block of size a unsplit:
// those avoiding the block plus those containing it. Definitional sum
//   sum_k (binom(n-a,k) + binom(n-a,k-a)) w_j(k).
inline Rational unsplit_weight(const WeightSpec& spec, int a) {
    spec.validate();
    if (a < 1 || a > spec.n) throw std::invalid_argument("block size out of range");
    Rational acc(0);
    for (int k = 0; k <= spec.n; ++k) {
        Integer count = binom(spec.n - a, k) + binom(spec.n - a, k - a);
        if (count == 0) continue;
        acc += Rational(count) * weight_value(spec, k);
    }
    return acc;
}

// Closed forms: 2^(n-a+1) for j=1 and 1/a + sum_{k=a+1}^n 1/k for j=3.
// No closed form exists for j=2; the definitional sum is the one numeric
// path there.
inline Rational unsplit_weight_closed(const WeightSpec& spec, int a) {
    spec.validate();
    if (a < 1 || a > spec.n) throw std::invalid_argument("block size out of range");
    switch (spec.j) {
        case 1:
            return Rational(pow2(spec.n - a + 1));
        case 2:
            return unsplit_weight(spec, a);
        default:
            return rat(1, a) + harmonic_tail(spec.n, a);
    }
}

// Expected (unnormalized) boundary weight of any partition with the given
// block sizes: n * N_j - sum_i a_i * unsplit_weight(a_i). Valid for every
// set partition with these sizes; checked against the exhaustive oracle.
inline Rational f_from_block_sizes(const std::vector<int>& sizes, const WeightSpec& spec) {
    spec.validate();
    long total = 0;
    for (int a : sizes) {
        if (a < 1) throw std::invalid_argument("block sizes must be positive");
        total += a;
    }
    if (total != spec.n) throw std::invalid_argument("block sizes do not sum to n");
    Rational acc = Rational(spec.n) * normalizer(spec);
    for (int a : sizes) acc -= Rational(a) * unsplit_weight_closed(spec, a);
    return acc;
}

// Per-item objective g(a) = scale * a * unsplit_weight(a), tabulated for
// a = 1..n. For j=1 the profile is stored pre-scaled by 1/2^(n+1) so that
// g(a) = a/2^a independently of n; argmin/argmax are scale-invariant and
// the unscaled value is recovered via unscaled_at().
struct ObjectiveProfile {
    int j = 1;
    int n = 1;
    Rational scale = Rational(1);
    std::vector<Rational> values;  // values[a-1] = g(a)

    const Rational& at(int a) const {
        if (a < 1 || a > n) throw std::invalid_argument("item out of range");
        return values[static_cast<size_t>(a) - 1];
    }
    Rational unscaled_at(int a) const { return at(a) / scale; }
};

inline ObjectiveProfile item_objective_profile(const WeightSpec& spec) {
    spec.validate();
    if (spec.n < 2) throw std::invalid_argument("profile needs n >= 2");
    ObjectiveProfile profile;
    profile.j = spec.j;
    profile.n = spec.n;
    profile.scale = spec.j == 1 ? Rational(1) / Rational(pow2(spec.n + 1)) : Rational(1);
    profile.values.reserve(static_cast<size_t>(spec.n));
    for (int a = 1; a <= spec.n; ++a)
        profile.values.push_back(profile.scale * Rational(a) *
                                 unsplit_weight_closed(spec, a));
    return profile;
}

// g(a-1) + g(a+1) - 2 g(a); negative means strict concavity at a.
inline Rational second_difference(const ObjectiveProfile& profile, int a) {
    if (a < 2 || a > profile.n - 1)
        throw std::invalid_argument("second difference needs 2 <= a <= n-1");
    return profile.at(a - 1) + profile.at(a + 1) - 2 * profile.at(a);
}

// Shape of the profile: strictly concave below a threshold c, non-concave
// at c, strictly convex above. c is the smallest item where strict
// concavity first fails; if it never fails, c = n and the threshold
// condition is vacuous.
struct ShapeReport {
    int c = 0;
    bool lin_equality = false;   // second difference at c is exactly zero
    bool concave_range_ok = false;
    bool convex_range_ok = false;

    bool valid() const { return concave_range_ok && convex_range_ok && c >= 2; }
};

inline ShapeReport shape_analysis(const ObjectiveProfile& profile) {
    if (profile.n < 3) throw std::invalid_argument("shape analysis needs n >= 3");
    ShapeReport report;
    int c = profile.n;
    for (int a = 2; a <= profile.n - 1; ++a) {
        if (sign_of(second_difference(profile, a)) >= 0) {
            c = a;
            break;
        }
    }
    report.c = c;
    report.concave_range_ok = true;  // by choice of c
    report.lin_equality =
        c <= profile.n - 1 && sign_of(second_difference(profile, c)) == 0;
    report.convex_range_ok = true;
    for (int a = c + 1; a <= profile.n - 1; ++a)
        if (sign_of(second_difference(profile, a)) <= 0) report.convex_range_ok = false;
    return report;
}

// --- exact binomial-reciprocal identities ----------------------------------

// sum_{i=0}^{a} binom(a,i) / ((b+i) binom(c,b+i)), definitional form.
inline Rational reciprocal_binomial_sum(int a, int b, int c) {
    if (a < 0 || b <= 0 || c < a + b)
        throw std::invalid_argument("need a >= 0, b > 0, c >= a+b");
    Rational acc(0);
    for (int i = 0; i <= a; ++i)
        acc += Rational(binom(a, i)) /
               (Rational(b + i) * Rational(binom(c, b + i)));
    return acc;
}

// Closed form of the same sum: 1 / (b binom(c-a, b)).
inline Rational reciprocal_binomial_sum_closed(int a, int b, int c) {
    if (a < 0 || b <= 0 || c < a + b)
        throw std::invalid_argument("need a >= 0, b > 0, c >= a+b");
    return Rational(1) / (Rational(b) * Rational(binom(c - a, b)));
}

// sum_k binom(n-a,k-a) / (binom(n,k) k): the containing-subset half of the
// j=3 transform; identically 1/a.
inline Rational w3_superset_sum(int n, int a) {
    if (a < 1 || a > n) throw std::invalid_argument("need 1 <= a <= n");
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
        Integer top = binom(n - a, k - a);
        if (top == 0) continue;
        acc += Rational(top) / (Rational(binom(n, k)) * Rational(k));
    }
    return acc;
}

// sum_k binom(n-a,k) / (binom(n,k) k): the avoiding-subset half; equals the
// harmonic tail sum_{k=a+1}^n 1/k.
inline Rational w3_disjoint_sum(int n, int a) {
    if (a < 1 || a > n) throw std::invalid_argument("need 1 <= a <= n");
    Rational acc(0);
    for (int k = 1; k <= n; ++k) {
        Integer top = binom(n - a, k);
        if (top == 0) continue;
        acc += Rational(top) / (Rational(binom(n, k)) * Rational(k));
    }
    return acc;
}

}  // namespace roughbound
