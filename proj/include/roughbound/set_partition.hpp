#pragma once

// Set partitions of {1..n}, lower/upper approximations and boundary regions,
// and the exhaustive 2^n expectation sums that serve as the independent
// oracle for the block-size formulas. Subsets are integer bitmasks, so n is
// limited by the configurable enumeration cap (default 20, hard limit 62).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "roughbound/rational.hpp"
#include "roughbound/weights.hpp"

namespace roughbound {

struct EnumerationCap {
    int max_n = 20;
};

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int n, int cap)
        : std::runtime_error("subset enumeration refused: n=" + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap) +
                             " (cost 2^n)") {}
};

struct SubsetMask {
    int n = 0;
    std::uint64_t bits = 0;

    static SubsetMask full(int n) {
        check_n(n);
        return {n, n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
    }
    static SubsetMask empty(int n) {
        check_n(n);
        return {n, 0};
    }
    // elements are 1-based
    static SubsetMask of(int n, const std::vector<int>& members) {
        check_n(n);
        SubsetMask m{n, 0};
        for (int e : members) {
            if (e < 1 || e > n) throw std::invalid_argument("element out of range");
            m.bits |= std::uint64_t{1} << (e - 1);
        }
        return m;
    }

    int count() const { return __builtin_popcountll(bits); }
    bool contains(int e) const { return (bits >> (e - 1)) & 1; }
    SubsetMask complement() const { return {n, bits ^ full(n).bits}; }
    std::vector<int> members() const {
        std::vector<int> out;
        for (int e = 1; e <= n; ++e)
            if (contains(e)) out.push_back(e);
        return out;
    }
    bool operator==(const SubsetMask&) const = default;

private:
    static void check_n(int n) {
        if (n < 0 || n > 62) throw std::invalid_argument("ground set size out of range");
    }
};

class SetPartition {
public:
    // Blocks must be disjoint, nonempty, and cover {1..n}. Stored sorted by
    // least element for canonical equality and stable serialization.
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
        if (n < 1 || n > 62) throw std::invalid_argument("ground set size out of range");
        SetPartition p;
        p.n_ = n;
        std::uint64_t seen = 0;
        for (const auto& block : blocks) {
            if (block.empty()) throw std::invalid_argument("empty block");
            SubsetMask m = SubsetMask::of(n, block);
            if (seen & m.bits) throw std::invalid_argument("blocks not disjoint");
            seen |= m.bits;
            p.block_masks_.push_back(m.bits);
        }
        if (seen != SubsetMask::full(n).bits)
            throw std::invalid_argument("blocks do not cover the ground set");
        std::sort(p.block_masks_.begin(), p.block_masks_.end(),
                  [](std::uint64_t a, std::uint64_t b) {
                      return (a & -a) < (b & -b);  // by least element
                  });
        return p;
    }

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(block_masks_.size()); }
    const std::vector<std::uint64_t>& block_masks() const { return block_masks_; }

    std::vector<int> block_sizes() const {
        std::vector<int> sizes;
        sizes.reserve(block_masks_.size());
        for (auto b : block_masks_) sizes.push_back(__builtin_popcountll(b));
        return sizes;
    }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out;
        for (auto b : block_masks_) out.push_back(SubsetMask{n_, b}.members());
        return out;
    }

    bool operator==(const SetPartition&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> block_masks_;
};

struct ExpectationReport {
    int j = 0;
    Rational f_value;
    Rational normalizer;
    Rational mu;  // f_value / normalizer
};

namespace detail {

inline void require_same_ground_set(const SetPartition& p, const SubsetMask& x) {
    if (p.n() != x.n) throw std::invalid_argument("ground set size mismatch");
}

inline void require_within_cap(int n, const EnumerationCap& cap) {
    if (n > cap.max_n) throw CapExceeded(n, cap.max_n);
}

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("ROUGHBOUND_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Per-cardinality totals sum[k] = sum over |X| = k of measure(X), where
// measure is an integer-valued function of the subset mask. Integer
// accumulation makes the chunked parallel reduction bit-identical for any
// schedule.
template <class Measure>
std::vector<std::int64_t> subset_totals_by_size(int n, Measure&& measure) {
    std::vector<std::int64_t> totals(static_cast<size_t>(n) + 1, 0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    unsigned workers = worker_count();
    if (workers <= 1 || n < 16) {
        for (std::uint64_t x = 0; x < limit; ++x)
            totals[static_cast<size_t>(__builtin_popcountll(x))] += measure(x);
        return totals;
    }
    std::vector<std::vector<std::int64_t>> partial(
        workers, std::vector<std::int64_t>(static_cast<size_t>(n) + 1, 0));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (limit + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min(limit, lo + chunk);
            auto& mine = partial[w];
            for (std::uint64_t x = lo; x < hi; ++x)
                mine[static_cast<size_t>(__builtin_popcountll(x))] += measure(x);
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& part : partial)
        for (size_t k = 0; k < totals.size(); ++k) totals[k] += part[k];
    return totals;
}

}  // namespace detail

// Union of blocks entirely contained in x.
inline SubsetMask lower_approx(const SetPartition& p, const SubsetMask& x) {
    detail::require_same_ground_set(p, x);
    std::uint64_t acc = 0;
    for (auto b : p.block_masks())
        if ((b & x.bits) == b) acc |= b;
    return {p.n(), acc};
}

// Union of blocks meeting x.
inline SubsetMask upper_approx(const SetPartition& p, const SubsetMask& x) {
    detail::require_same_ground_set(p, x);
    std::uint64_t acc = 0;
    for (auto b : p.block_masks())
        if (b & x.bits) acc |= b;
    return {p.n(), acc};
}

// Union of blocks split by x: those meeting both x and its complement.
inline SubsetMask boundary(const SetPartition& p, const SubsetMask& x) {
    detail::require_same_ground_set(p, x);
    std::uint64_t acc = 0;
    for (auto b : p.block_masks()) {
        std::uint64_t inside = b & x.bits;
        if (inside != 0 && inside != b) acc |= b;
    }
    return {p.n(), acc};
}

// Brute-force expected boundary size: iterates all 2^n subsets exactly.
// This is the oracle the closed-form path is checked against.
inline ExpectationReport expected_boundary_exhaustive(const SetPartition& p, int j,
                                                      const EnumerationCap& cap = {}) {
    WeightSpec spec{j, p.n()};
    spec.validate();
    detail::require_within_cap(p.n(), cap);
    const auto& blocks = p.block_masks();
    auto totals = detail::subset_totals_by_size(p.n(), [&](std::uint64_t x) {
        std::int64_t size = 0;
        for (auto b : blocks) {
            std::uint64_t inside = b & x;
            if (inside != 0 && inside != b) size += __builtin_popcountll(b);
        }
        return size;
    });
    Rational f(0);
    for (int k = 0; k <= p.n(); ++k) {
        if (totals[static_cast<size_t>(k)] == 0) continue;
        f += weight_value(spec, k) * Rational(totals[static_cast<size_t>(k)]);
    }
    ExpectationReport report;
    report.j = j;
    report.f_value = f;
    report.normalizer = normalizer(spec);
    report.mu = report.f_value / report.normalizer;
    return report;
}

// Sum over nonempty X of |lower_approx(X)| / (binom(n,|X|) |X|); equals the
// number of blocks for every partition.
inline Rational lower_approx_identity_sum(const SetPartition& p,
                                          const EnumerationCap& cap = {}) {
    detail::require_within_cap(p.n(), cap);
    const auto& blocks = p.block_masks();
    auto totals = detail::subset_totals_by_size(p.n(), [&](std::uint64_t x) {
        std::int64_t size = 0;
        for (auto b : blocks)
            if ((b & x) == b) size += __builtin_popcountll(b);
        return size;
    });
    Rational acc(0);
    for (int k = 1; k <= p.n(); ++k)
        acc += Rational(totals[static_cast<size_t>(k)]) /
               (Rational(binom(p.n(), k)) * Rational(k));
    return acc;
}

// Ahlswede-Zhang identity sum for a family F of nonempty subsets:
//   sum over nonempty X of |F(X)| / (binom(n,|X|) |X|)  with
//   F(X) = intersection of the members contained in X (empty if none).
// Always equals 1.
inline Rational az_identity_sum(const std::vector<SubsetMask>& family,
                                const EnumerationCap& cap = {}) {
    if (family.empty()) throw std::invalid_argument("empty family");
    int n = family.front().n;
    for (const auto& a : family) {
        if (a.n != n) throw std::invalid_argument("ground set size mismatch in family");
        if (a.bits == 0) throw std::invalid_argument("empty family member");
    }
    detail::require_within_cap(n, cap);
    auto totals = detail::subset_totals_by_size(n, [&](std::uint64_t x) {
        std::uint64_t meet = 0;
        bool any = false;
        for (const auto& a : family) {
            if ((a.bits & x) == a.bits) {
                meet = any ? (meet & a.bits) : a.bits;
                any = true;
            }
        }
        return static_cast<std::int64_t>(any ? __builtin_popcountll(meet) : 0);
    });
    Rational acc(0);
    for (int k = 1; k <= n; ++k)
        acc += Rational(totals[static_cast<size_t>(k)]) /
               (Rational(binom(n, k)) * Rational(k));
    return acc;
}

// Visits every set partition of {1..n} once, encoded as restricted growth
// strings: label[0] = 0 and label[i] <= 1 + max(label[0..i-1]).
template <class Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
    if (n < 1) throw std::invalid_argument("ground set must be nonempty");
    std::vector<int> label(static_cast<size_t>(n), 0);
    std::function<void(int, int)> recurse = [&](int i, int max_used) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(static_cast<size_t>(max_used) + 1);
            for (int e = 0; e < n; ++e)
                blocks[static_cast<size_t>(label[static_cast<size_t>(e)])].push_back(e + 1);
            visit(SetPartition::from_blocks(n, blocks));
            return;
        }
        for (int v = 0; v <= max_used + 1; ++v) {
            label[static_cast<size_t>(i)] = v;
            recurse(i + 1, std::max(max_used, v));
        }
    };
    label[0] = 0;
    recurse(1, 0);
}

// Random partition via a random restricted growth string (all partitions
// reachable, not uniform; fine for identity sweeps).
template <class Rng>
SetPartition random_set_partition(int n, Rng& rng) {
    std::vector<int> label(static_cast<size_t>(n), 0);
    int max_used = 0;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, max_used + 1);
        label[static_cast<size_t>(i)] = pick(rng);
        max_used = std::max(max_used, label[static_cast<size_t>(i)]);
    }
    std::vector<std::vector<int>> blocks(static_cast<size_t>(max_used) + 1);
    for (int e = 0; e < n; ++e)
        blocks[static_cast<size_t>(label[static_cast<size_t>(e)])].push_back(e + 1);
    return SetPartition::from_blocks(n, blocks);
}

template <class Rng>
std::vector<SubsetMask> random_family(int n, Rng& rng) {
    std::uniform_int_distribution<int> size_pick(1, 5);
    std::uniform_int_distribution<std::uint64_t> bits_pick(1, SubsetMask::full(n).bits);
    int count = size_pick(rng);
    std::vector<SubsetMask> family;
    for (int i = 0; i < count; ++i) {
        SubsetMask m{n, bits_pick(rng)};
        bool dup = false;
        for (const auto& f : family) dup = dup || f == m;
        if (!dup) family.push_back(m);
    }
    return family;
}

}  // namespace roughbound
