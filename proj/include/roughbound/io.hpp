#pragma once

// JSON and CSV wire formats. Rationals travel as "p/q" strings in lowest
// terms; set partitions as {"n": int, "blocks": [[int,...],...]}.

#include <string>
#include <vector>

#include "json.hpp"
#include "roughbound/certificates.hpp"
#include "roughbound/partitions.hpp"
#include "roughbound/rational.hpp"
#include "roughbound/set_partition.hpp"
#include "roughbound/weights.hpp"

namespace roughbound {

using nlohmann::json;

inline json to_json(const Rational& r) { return to_fraction_string(r); }

inline json to_json(const SetPartition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks()) blocks.push_back(block);
    return json{{"n", p.n()}, {"blocks", blocks}};
}

inline SetPartition set_partition_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("blocks"))
        throw std::invalid_argument("partition JSON needs \"n\" and \"blocks\"");
    return SetPartition::from_blocks(j.at("n").get<int>(),
                                     j.at("blocks").get<std::vector<std::vector<int>>>());
}

inline json to_json(const IntegerPartition& p) {
    return json{{"parts", p.parts()}, {"multiplicity_form", p.multiplicity_form()}};
}

inline IntegerPartition integer_partition_from_json(const json& j) {
    return IntegerPartition(j.at("parts").get<std::vector<int>>());
}

inline json to_json(const OptResult& r) {
    json argopt = json::array();
    for (const auto& p : r.argopt) argopt.push_back(to_json(p));
    return json{{"j", r.j},
                {"sense", to_string(r.sense)},
                {"value", to_fraction_string(r.value)},
                {"argopt", argopt}};
}

inline json to_json(const ExpectationReport& r) {
    return json{{"j", r.j},
                {"f_value", to_fraction_string(r.f_value)},
                {"normalizer", to_fraction_string(r.normalizer)},
                {"mu", to_fraction_string(r.mu)},
                {"mu_decimal", to_decimal_string(r.mu)}};
}

// Certificate report: {"alpha": [...], "a": [...], "r_coeffs": ["p/q",...],
// "kind": "...", "l": int|null, "integral": "p/q"|null, "min_n": int}.
// r_coeffs are listed by ascending degree.
inline json to_json(const ComparisonSpec& spec, const ComparisonOutcome& outcome) {
    json r_coeffs = json::array();
    for (const auto& c : outcome.integrand.coefficients())
        r_coeffs.push_back(to_fraction_string(c));
    json out{{"a", spec.a},
             {"alpha", spec.alpha},
             {"claim", spec.claim()},
             {"r_coeffs", r_coeffs},
             {"kind", to_string(outcome.certificate.kind)},
             {"min_n", outcome.certificate.min_n}};
    out["l"] = outcome.certificate.l ? json(*outcome.certificate.l) : json(nullptr);
    out["integral"] = outcome.certificate.shifted_integral
                          ? json(to_fraction_string(*outcome.certificate.shifted_integral))
                          : json(nullptr);
    return out;
}

// CSV rows (a, g(a) as "p/q", g(a) as decimal) for human inspection.
inline std::string profile_to_csv(const ObjectiveProfile& profile) {
    std::string out = "a,value,decimal\n";
    for (int a = 1; a <= profile.n; ++a) {
        out += std::to_string(a) + "," + to_fraction_string(profile.at(a)) + "," +
               to_decimal_string(profile.at(a)) + "\n";
    }
    return out;
}

}  // namespace roughbound
