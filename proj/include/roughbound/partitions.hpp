#pragma once

// Integer partitions of n into m parts: streaming enumeration, exact
// objective evaluation, brute-force optima with complete tie sets, the
// closed-form optimal constructions for each distribution, the structural
// filter implied by a concave-convex objective shape, and the set-level
// optimum with its min/max flip.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roughbound/rational.hpp"
#include "roughbound/weights.hpp"

namespace roughbound {

enum class Sense { min, max };

inline const char* to_string(Sense s) { return s == Sense::min ? "min" : "max"; }

class IntegerPartition {
public:
    IntegerPartition() = default;

    explicit IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("parts must be positive");
        if (parts_.empty()) throw std::invalid_argument("partition must have parts");
        std::sort(parts_.rbegin(), parts_.rend());
    }

    // multiplicity form: item i with multiplicity lambda_i, e.g. {{1,5},{5,5}}
    static IntegerPartition from_multiplicities(const std::vector<std::pair<int, int>>& items) {
        std::vector<int> parts;
        for (auto [item, count] : items) {
            if (count < 0) throw std::invalid_argument("negative multiplicity");
            for (int i = 0; i < count; ++i) parts.push_back(item);
        }
        return IntegerPartition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }  // non-increasing
    int n() const {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }
    int m() const { return static_cast<int>(parts_.size()); }

    // lambda[i] = number of parts equal to i, for i = 1..max part
    std::vector<int> multiplicities() const {
        std::vector<int> lambda(parts_.empty() ? 0 : static_cast<size_t>(parts_.front()) + 1, 0);
        for (int p : parts_) ++lambda[static_cast<size_t>(p)];
        return lambda;
    }

    // "1^1 3^1" style rendering; items with multiplicity zero are omitted.
    std::string multiplicity_form() const {
        auto lambda = multiplicities();
        std::ostringstream os;
        bool first = true;
        for (size_t i = 1; i < lambda.size(); ++i) {
            if (lambda[i] == 0) continue;
            if (!first) os << ' ';
            os << i << '^' << lambda[i];
            first = false;
        }
        return os.str();
    }

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

// Number of partitions of n into exactly m parts.
inline Integer count_partitions(int n, int m) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative arguments");
    if (m == 0) return Integer(n == 0 ? 1 : 0);
    if (m > n) return Integer(0);
    static std::map<std::pair<int, int>, Integer> memo;
    auto key = std::make_pair(n, m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer value = count_partitions(n - 1, m - 1) + count_partitions(n - m, m);
    memo.emplace(key, value);
    return value;
}

namespace detail {

template <class Visitor>
void emit_partitions(int remaining, int slots, int max_part, std::vector<int>& buffer,
                     Visitor& visit) {
    if (slots == 1) {
        if (remaining >= 1 && remaining <= max_part) {
            buffer.push_back(remaining);
            visit(const_cast<const std::vector<int>&>(buffer));
            buffer.pop_back();
        }
        return;
    }
    // first part between ceil(remaining/slots) and min(max_part, remaining-slots+1),
    // descending, which yields decreasing lexicographic order overall
    int lo = (remaining + slots - 1) / slots;
    int hi = std::min(max_part, remaining - slots + 1);
    for (int part = hi; part >= lo; --part) {
        buffer.push_back(part);
        emit_partitions(remaining - part, slots - 1, part, buffer, visit);
        buffer.pop_back();
    }
}

}  // namespace detail

// Yields each partition of n into m parts exactly once, as a non-increasing
// part buffer, in decreasing lexicographic order. O(m) state per emission.
template <class Visitor>
void for_each_partition(int n, int m, Visitor&& visit) {
    if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    std::vector<int> buffer;
    buffer.reserve(static_cast<size_t>(m));
    detail::emit_partitions(n, m, n, buffer, visit);
}

inline std::vector<IntegerPartition> all_partitions(int n, int m) {
    std::vector<IntegerPartition> out;
    for_each_partition(n, m, [&](const std::vector<int>& parts) {
        out.emplace_back(parts);
    });
    return out;
}

// sum_i a_i * unsplit_weight(a_i): the quantity whose optimum over
// partitions determines the extremal expected boundary sizes.
inline Rational partition_objective(const IntegerPartition& p, const WeightSpec& spec) {
    if (p.n() != spec.n) throw std::invalid_argument("partition does not sum to n");
    Rational acc(0);
    for (int a : p.parts()) acc += Rational(a) * unsplit_weight_closed(spec, a);
    return acc;
}

struct OptResult {
    int j = 0;
    Sense sense = Sense::min;
    Rational value;
    std::vector<IntegerPartition> argopt;  // complete set of optima

    bool contains(const IntegerPartition& p) const {
        return std::find(argopt.begin(), argopt.end(), p) != argopt.end();
    }
};

struct PartitionBudget {
    long max_partitions = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const Integer& count, long budget)
        : std::runtime_error("partition scan refused: |P(n,m)| = " + count.get_str() +
                             " exceeds budget " + std::to_string(budget)) {}
};

// Exhaustive scan over P(n,m). Returns the exact optimum and ALL optimal
// partitions; the closed forms are checked for membership, never uniqueness.
inline OptResult brute_force_optima(int n, int m, const WeightSpec& spec, Sense sense,
                                    const PartitionBudget& budget = {}) {
    spec.validate();
    if (n != spec.n) throw std::invalid_argument("n does not match weight spec");
    if (m < 1 || m > n) throw std::invalid_argument("need 1 <= m <= n");
    Integer count = count_partitions(n, m);
    if (count > budget.max_partitions) throw BudgetExceeded(count, budget.max_partitions);

    // per-item contributions cached once
    std::vector<Rational> item(static_cast<size_t>(n) + 1, Rational(0));
    for (int a = 1; a <= n; ++a)
        item[static_cast<size_t>(a)] = Rational(a) * unsplit_weight_closed(spec, a);

    OptResult result;
    result.j = spec.j;
    result.sense = sense;
    bool have = false;
    for_each_partition(n, m, [&](const std::vector<int>& parts) {
        Rational value(0);
        for (int a : parts) value += item[static_cast<size_t>(a)];
        int rel = have ? cmp(value, result.value) : 0;
        if (!have || (sense == Sense::min ? rel < 0 : rel > 0)) {
            result.value = value;
            result.argopt.clear();
            result.argopt.emplace_back(parts);
            have = true;
        } else if (have && rel == 0) {
            result.argopt.emplace_back(parts);
        }
    });
    return result;
}

class UnsupportedCase : public std::runtime_error {
public:
    explicit UnsupportedCase(const std::string& what) : std::runtime_error(what) {}
};

// Closed-form optimal partition for each distribution and sense. The guard
// order follows the case analysis the optimality proofs establish; a sweep
// test asserts the guards are mutually exhaustive for 2 <= m < n. For j=2
// the forms are only established for n >= 13; below that the caller must
// fall back to brute force.
inline IntegerPartition closed_form_optimal(int n, int m, const WeightSpec& spec,
                                            Sense sense) {
    spec.validate();
    if (n != spec.n) throw std::invalid_argument("n does not match weight spec");
    if (m < 2 || m >= n) throw std::invalid_argument("need 2 <= m < n");
    if (spec.j == 2 && n < 13)
        throw UnsupportedCase("no closed form for j=2 with n < 13; use brute force");

    auto balanced = [&]() {
        int q = n / m, r = n % m;
        return IntegerPartition::from_multiplicities({{q, m - r}, {q + 1, r}});
    };
    auto one_big = [&]() {
        return IntegerPartition::from_multiplicities({{1, m - 1}, {n - m + 1, 1}});
    };

    if (spec.j == 3)
        return sense == Sense::min ? one_big() : balanced();

    // j = 1 and j = 2 share the minimal form
    if (sense == Sense::min) {
        int d = n - m;
        if (d <= 5) return one_big();
        if (n > 5 * m) return balanced();
        switch (((m - n) % 4 + 4) % 4) {
            case 0:
                return IntegerPartition::from_multiplicities({{1, m - d / 4}, {5, d / 4}});
            case 1:
                return IntegerPartition::from_multiplicities(
                    {{1, m - (d + 1) / 4}, {4, 1}, {5, (d - 3) / 4}});
            case 2:
                return IntegerPartition::from_multiplicities(
                    {{1, m - (d + 2) / 4}, {4, 2}, {5, (d - 6) / 4}});
            default:
                return IntegerPartition::from_multiplicities(
                    {{1, m - (d - 1) / 4}, {5, (d - 5) / 4}, {6, 1}});
        }
    }

    auto all_small = [&]() {
        return IntegerPartition::from_multiplicities({{1, 2 * m - n}, {2, n - m}});
    };
    auto twos_and_one_big = [&]() {
        return IntegerPartition::from_multiplicities({{2, m - 1}, {n - 2 * m + 2, 1}});
    };
    if (spec.j == 1)
        return n >= 2 * m ? twos_and_one_big() : all_small();

    // j = 2 maximal
    if (n > 2 * m + 2) return twos_and_one_big();
    if (n == 2 * m + 2) return IntegerPartition::from_multiplicities({{2, m - 2}, {3, 2}});
    if (n == 2 * m + 1) return IntegerPartition::from_multiplicities({{2, m - 1}, {3, 1}});
    return all_small();
}

// Structural necessary conditions on optimal partitions when the item
// objective is strictly concave below c and strictly convex above:
//   minimizing: no two parts in {c-1..n} differing by >= 2 (the pair
//   {c-1, c+1} is allowed when the threshold inequality is an equality),
//   and no two parts in {2..c-1};
//   maximizing: no two parts in {1..c} differing by >= 2, and no two parts
//   in {c..n-1} (two parts equal to c allowed under threshold equality).
inline bool shape_filter(const IntegerPartition& p, const ShapeReport& shape, Sense sense) {
    if (!shape.valid()) throw std::invalid_argument("shape report has no valid threshold");
    const auto& parts = p.parts();
    const int c = shape.c;
    const int n = p.n();
    if (sense == Sense::min) {
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t k = i + 1; k < parts.size(); ++k) {
                int hi = parts[i], lo = parts[k];
                if (lo >= c - 1 && hi <= n && hi - lo >= 2) {
                    bool allowed_pair = shape.lin_equality && lo == c - 1 && hi == c + 1;
                    if (!allowed_pair) return false;
                }
                if (lo >= 2 && hi <= c - 1) return false;
            }
        }
    } else {
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t k = i + 1; k < parts.size(); ++k) {
                int hi = parts[i], lo = parts[k];
                if (hi <= c && hi - lo >= 2) return false;
                if (lo >= c && hi <= n - 1) {
                    bool allowed_pair = shape.lin_equality && lo == c && hi == c;
                    if (!allowed_pair) return false;
                }
            }
        }
    }
    return true;
}

// Set-partition-level optimum of the expected boundary weight for fixed
// (n, m, j). Minimal expected boundary corresponds to the MAXIMAL partition
// objective and vice versa:
//   optimum = n * N_j -+ opt_{P(n,m)} sum a_i unsplit_weight(a_i).
// Returns the optimal value together with witnessing block sizes. Uses the
// closed form when covered, otherwise brute force.
inline std::pair<Rational, IntegerPartition> set_level_optimum(
    int n, int m, const WeightSpec& spec, Sense sense, const PartitionBudget& budget = {}) {
    spec.validate();
    if (m < 2 || m > n) throw std::invalid_argument("need 2 <= m <= n");
    Sense flipped = sense == Sense::min ? Sense::max : Sense::min;
    IntegerPartition witness;
    if (m == n) {
        witness = IntegerPartition(std::vector<int>(static_cast<size_t>(m), 1));
    } else {
        try {
            witness = closed_form_optimal(n, m, spec, flipped);
        } catch (const UnsupportedCase&) {
            witness = brute_force_optima(n, m, spec, flipped, budget).argopt.front();
        }
    }
    Rational value = Rational(n) * normalizer(spec) - partition_objective(witness, spec);
    return {value, witness};
}

}  // namespace roughbound
