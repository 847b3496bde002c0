// Command-line front end: exact boundary-expectation reports, optimal
// partitions (closed form and brute force), sweep verification, certificate
// reproduction, and identity sweeps. Exit status is 0 iff all requested
// verifications pass.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roughbound/roughbound.hpp"

using namespace roughbound;
using nlohmann::json;

namespace {

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw CLI::ValidationError("range must look like a..b");
    Range r;
    r.lo = std::stoi(text.substr(0, sep));
    r.hi = std::stoi(text.substr(sep + 2));
    if (r.lo > r.hi) throw CLI::ValidationError("range must be nondecreasing");
    return r;
}

Sense parse_sense(const std::string& s) {
    if (s == "min") return Sense::min;
    if (s == "max") return Sense::max;
    throw CLI::ValidationError("sense must be min or max");
}

void emit(const json& payload, const std::string& format) {
    if (format == "json")
        std::cout << payload.dump(2) << "\n";
}

// --- optimal ----------------------------------------------------------------

int cmd_optimal(int n, int m, int j, const std::string& sense_text,
                const std::string& level, const std::string& format,
                long cap_partitions) {
    WeightSpec spec{j, n};
    Sense sense = parse_sense(sense_text);
    PartitionBudget budget{cap_partitions};
    json out;
    out["n"] = n;
    out["m"] = m;
    out["j"] = j;
    out["sense"] = sense_text;

    std::optional<IntegerPartition> closed;
    std::string closed_note;
    try {
        closed = closed_form_optimal(n, m, spec, sense);
    } catch (const UnsupportedCase& e) {
        closed_note = e.what();
    }

    std::optional<OptResult> brute;
    std::string brute_note;
    try {
        brute = brute_force_optima(n, m, spec, sense, budget);
    } catch (const BudgetExceeded& e) {
        brute_note = e.what();
    }

    if (!closed && !brute) {
        std::cerr << "error: no closed form (" << closed_note
                  << ") and brute force unavailable (" << brute_note << ")\n";
        return 1;
    }

    bool agree = true;
    json integer_level;
    if (closed) {
        integer_level["closed_form"] = to_json(*closed);
        integer_level["closed_form"]["value"] =
            to_fraction_string(partition_objective(*closed, spec));
    } else {
        integer_level["closed_form"] = nullptr;
        integer_level["closed_form_note"] = closed_note;
    }
    if (brute) {
        integer_level["brute_force"] = to_json(*brute);
        if (closed) {
            agree = brute->contains(*closed) &&
                    partition_objective(*closed, spec) == brute->value;
            integer_level["agreement"] = agree;
        }
    } else {
        integer_level["brute_force"] = nullptr;
        integer_level["brute_force_note"] = brute_note;
    }
    out["integer_level"] = integer_level;

    // set level: minimal expected boundary <-> maximal part objective
    auto [set_value, set_witness] = set_level_optimum(n, m, spec, sense, budget);
    json set_level;
    set_level["value"] = to_fraction_string(set_value);
    set_level["value_decimal"] = to_decimal_string(set_value);
    set_level["block_sizes"] = to_json(set_witness);
    set_level["normalized"] = to_fraction_string(set_value / normalizer(spec));
    out["set_level"] = set_level;

    if (format == "json") {
        if (level == "integer") out.erase("set_level");
        if (level == "set") out.erase("integer_level");
        emit(out, format);
    } else {
        std::cout << "objective: sense " << sense_text
                  << " of sum a_i * F_" << j << "(a_i) over partitions of " << n
                  << " into " << m << " parts\n";
        if (closed)
            std::cout << "  closed form:  " << closed->multiplicity_form() << "   value "
                      << to_fraction_string(partition_objective(*closed, spec)) << "\n";
        else
            std::cout << "  closed form:  unavailable (" << closed_note << ")\n";
        if (brute) {
            std::cout << "  brute force:  value " << to_fraction_string(brute->value)
                      << "   optima: ";
            for (size_t i = 0; i < brute->argopt.size(); ++i)
                std::cout << (i ? ", " : "") << brute->argopt[i].multiplicity_form();
            std::cout << "\n";
            if (closed)
                std::cout << "  agreement:    "
                          << (agree ? "closed form is brute-force optimal" : "MISMATCH")
                          << "\n";
        } else {
            std::cout << "  brute force:  unavailable (" << brute_note << ")\n";
        }
        std::cout << "set level: " << sense_text
                  << " expected boundary weight = n*N_j - "
                  << (sense == Sense::min ? "max" : "min")
                  << " part objective (note the min/max flip between levels)\n";
        std::cout << "  value " << to_fraction_string(set_value) << " = "
                  << to_decimal_string(set_value) << ", block sizes "
                  << set_witness.multiplicity_form() << ", mu = "
                  << to_fraction_string(set_value / normalizer(spec)) << "\n";
    }
    return agree ? 0 : 1;
}

// --- expect -----------------------------------------------------------------

int cmd_expect(const std::string& partition_json, int j, int cap_subsets,
               const std::string& format) {
    SetPartition p = set_partition_from_json(json::parse(partition_json));
    EnumerationCap cap{cap_subsets};
    ExpectationReport report = expected_boundary_exhaustive(p, j, cap);
    Rational via_sizes = f_from_block_sizes(p.block_sizes(), WeightSpec{j, p.n()});
    bool cross_checked = p.n() <= 12;
    bool cross_ok = !cross_checked || via_sizes == report.f_value;

    if (format == "json") {
        json out = to_json(report);
        out["partition"] = to_json(p);
        out["f_from_block_sizes"] = to_fraction_string(via_sizes);
        out["cross_check"] = cross_checked ? json(cross_ok) : json(nullptr);
        emit(out, format);
    } else {
        std::cout << "partition: n=" << p.n() << " blocks=" << p.block_count() << " sizes=";
        for (int s : p.block_sizes()) std::cout << s << " ";
        std::cout << "\n";
        std::cout << "f_" << j << " = " << to_fraction_string(report.f_value) << " = "
                  << to_decimal_string(report.f_value) << "\n";
        std::cout << "N_" << j << " = " << to_fraction_string(report.normalizer) << " = "
                  << to_decimal_string(report.normalizer) << "\n";
        std::cout << "mu_" << j << " = " << to_fraction_string(report.mu) << " = "
                  << to_decimal_string(report.mu) << "\n";
        if (cross_checked)
            std::cout << "cross-check against block-size formula: "
                      << (cross_ok ? "ok" : "MISMATCH") << "\n";
    }
    return cross_ok ? 0 : 1;
}

// --- sweep ------------------------------------------------------------------

int cmd_sweep(const Range& n_range, const Range& m_range, int j_filter,
              const std::string& sense_text, const std::string& format,
              long cap_partitions) {
    PartitionBudget budget{cap_partitions};
    std::vector<int> js;
    if (j_filter == 0)
        js = {1, 2, 3};
    else
        js = {j_filter};
    std::vector<Sense> senses;
    if (sense_text == "both")
        senses = {Sense::min, Sense::max};
    else
        senses = {parse_sense(sense_text)};

    int passed = 0, failed = 0, skipped = 0;
    json rows = json::array();
    if (format == "csv")
        std::cout << "n,m,j,sense,status,closed_form,closed_value,brute_value,detail\n";
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int m = m_range.lo; m <= m_range.hi; ++m) {
            if (!(2 <= m && m < n)) continue;
            for (int j : js) {
                WeightSpec spec{j, n};
                for (Sense sense : senses) {
                    std::string status, detail, closed_form, closed_value, brute_value;
                    try {
                        IntegerPartition closed = closed_form_optimal(n, m, spec, sense);
                        closed_form = closed.multiplicity_form();
                        closed_value = to_fraction_string(partition_objective(closed, spec));
                        OptResult brute = brute_force_optima(n, m, spec, sense, budget);
                        brute_value = to_fraction_string(brute.value);
                        bool ok = brute.contains(closed) &&
                                  partition_objective(closed, spec) == brute.value;
                        if (ok) {
                            status = "pass";
                            ++passed;
                        } else {
                            status = "fail";
                            ++failed;
                            detail = "closed " + closed_form + " value " + closed_value +
                                     " vs brute " + brute_value + " optima: ";
                            for (size_t i = 0; i < brute.argopt.size(); ++i)
                                detail += (i ? ", " : "") + brute.argopt[i].multiplicity_form();
                        }
                    } catch (const UnsupportedCase& e) {
                        status = "skipped";
                        detail = e.what();
                        ++skipped;
                    } catch (const BudgetExceeded& e) {
                        status = "skipped";
                        detail = e.what();
                        ++skipped;
                    }
                    if (format == "csv") {
                        std::cout << n << ',' << m << ',' << j << ',' << to_string(sense)
                                  << ',' << status << ',' << closed_form << ','
                                  << closed_value << ',' << brute_value << ",\""
                                  << detail << "\"\n";
                    } else if (format == "json") {
                        rows.push_back(json{{"n", n},
                                            {"m", m},
                                            {"j", j},
                                            {"sense", to_string(sense)},
                                            {"status", status},
                                            {"detail", detail}});
                    } else if (status != "pass") {
                        std::cout << "n=" << n << " m=" << m << " j=" << j << " sense="
                                  << to_string(sense) << ": " << status
                                  << (detail.empty() ? "" : "  (" + detail + ")") << "\n";
                    }
                }
            }
        }
    }
    if (format == "json") {
        emit(json{{"rows", rows},
                  {"passed", passed},
                  {"failed", failed},
                  {"skipped", skipped}},
             format);
    } else if (format != "csv") {
        std::cout << "sweep: " << passed << " passed, " << failed << " failed, "
                  << skipped << " skipped\n";
    }
    return failed == 0 ? 0 : 1;
}

// --- certify ----------------------------------------------------------------

struct ReferenceRow {
    const char* r_coeffs;  // ascending degree, comma separated
    const char* kind;
    int l;                 // -1 when not applicable
    const char* integral;  // empty when not applicable
    int min_n;
};

// expected certificate facts for the built-in comparison catalog
const ReferenceRow kReferenceRows[] = {
    {"-17,-3,27,27,-3,-17", "single_crossing_up", 4, "1639/360", 11},
    {"-23,-11,35,62,35,-11,-23", "single_crossing_up", 0, "23/42", 8},
    {"3,-2,3", "nonneg", -1, "", 4},
    {"-4,5,5,-4", "single_crossing_up", 3, "37/70", 8},
    {"7,-4,-4,7", "nonneg", -1, "", 5},
    {"11,-2,-14,-2,11", "nonneg", -1, "", 6},
    {"-15,7,20,7,-15", "single_crossing_up", 7, "247/660", 13},
    {"-6,7,7,-6", "single_crossing_up", 5, "443/168", 10},
    {"13,-3,-20,-3,13", "nonneg", -1, "", 6},
};

std::vector<Rational> parse_coeff_list(const std::string& text) {
    std::vector<Rational> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(fraction_from_string(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

bool row_matches_reference(const CatalogRow& row, const ReferenceRow& ref) {
    if (RationalPolynomial(parse_coeff_list(ref.r_coeffs)) != row.outcome.integrand)
        return false;
    if (std::string(ref.kind) != to_string(row.outcome.certificate.kind)) return false;
    if (ref.l >= 0) {
        if (!row.outcome.certificate.l || *row.outcome.certificate.l != ref.l) return false;
        if (!row.outcome.certificate.shifted_integral ||
            *row.outcome.certificate.shifted_integral != fraction_from_string(ref.integral))
            return false;
    } else if (row.outcome.certificate.l) {
        return false;
    }
    return row.outcome.certificate.min_n == ref.min_n;
}

int cmd_certify(int n, const std::string& format) {
    bool all_ok = true;
    json out;

    auto rows = inequality_table(n);
    json row_reports = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
        bool ok = row_matches_reference(rows[i], kReferenceRows[i]);
        // representation identity at this n: exact sum equals shifted integral
        int ak = rows[i].spec.max_item();
        ok = ok && rows[i].spec.exact_value(n) ==
                       integrate_01_shifted(rows[i].outcome.integrand, n - ak);
        all_ok = all_ok && ok;
        json report = to_json(rows[i].spec, rows[i].outcome);
        report["matches_reference"] = ok;
        row_reports.push_back(report);
        if (format == "text")
            std::cout << (ok ? "[ok]   " : "[FAIL] ") << rows[i].spec.claim() << "  r(t)="
                      << [&] {
                             std::string s;
                             for (const auto& c : rows[i].outcome.integrand.coefficients())
                                 s += to_fraction_string(c) + " ";
                             return s;
                         }()
                      << " kind=" << to_string(rows[i].outcome.certificate.kind)
                      << " min_n=" << rows[i].outcome.certificate.min_n << "\n";
    }
    out["comparison_rows"] = row_reports;

    // second differences for the j=2 objective
    json second_diffs = json::array();
    bool sd_ok = true;
    for (int a = 2; a <= n - 1; ++a) {
        auto result = verify_second_difference(a, n);
        int expected = a <= 3 ? -1 : +1;
        bool ok = result.direction == expected;
        sd_ok = sd_ok && ok;
        second_diffs.push_back(json{{"a", a}, {"direction", result.direction}, {"ok", ok}});
    }
    all_ok = all_ok && sd_ok;
    out["second_differences_j2"] = second_diffs;
    if (format == "text")
        std::cout << (sd_ok ? "[ok]   " : "[FAIL] ")
                  << "j=2 second differences at n=" << n
                  << ": concave on {2,3}, convex on {4.." << n - 1 << "}\n";

    // j=3 second differences are exactly -1/a
    bool j3_ok = true;
    ObjectiveProfile p3 = item_objective_profile(WeightSpec{3, n});
    for (int a = 2; a <= n - 1; ++a)
        j3_ok = j3_ok && second_difference(p3, a) == -rat(1, a);
    all_ok = all_ok && j3_ok;
    out["second_differences_j3_exact"] = j3_ok;
    if (format == "text")
        std::cout << (j3_ok ? "[ok]   " : "[FAIL] ")
                  << "j=3 second differences equal -1/a\n";

    // j=1 shape: threshold 3 with exact equality 2g(3) = g(2) + g(4)
    ObjectiveProfile p1 = item_objective_profile(WeightSpec{1, n});
    ShapeReport s1 = shape_analysis(p1);
    bool shape_ok = s1.c == 3 && s1.lin_equality && s1.convex_range_ok;
    all_ok = all_ok && shape_ok;
    out["j1_shape"] = json{{"c", s1.c}, {"lin_equality", s1.lin_equality}};
    if (format == "text")
        std::cout << (shape_ok ? "[ok]   " : "[FAIL] ")
                  << "j=1 shape: c=3 with threshold equality\n";

    auto mono = verify_monotonicity_machinery(n);
    all_ok = all_ok && mono.all_ok();
    out["monotonicity"] = json{{"base_29_60", mono.base_value_ok},
                               {"increasing_step", mono.increasing_step_ok},
                               {"decreasing_steps", mono.decreasing_steps_ok},
                               {"initial_values", mono.initial_values_ok},
                               {"profile", mono.profile_ok}};
    if (format == "text")
        std::cout << (mono.all_ok() ? "[ok]   " : "[FAIL] ")
                  << "j=2 monotonicity machinery (base value 29/60, step signs)\n";

    if (n >= 8) {
        auto ex = verify_exchange_inequalities(n);
        all_ok = all_ok && ex.all_hold;
        out["exchange_inequalities"] = ex.all_hold;
        if (format == "text")
            std::cout << (ex.all_hold ? "[ok]   " : "[FAIL] ")
                      << "exchange inequality families at n=" << n << "\n";
    }

    out["all_ok"] = all_ok;
    emit(out, format);
    if (format == "text")
        std::cout << (all_ok ? "certify: all checks passed\n" : "certify: FAILURES\n");
    return all_ok ? 0 : 1;
}

// --- identities ---------------------------------------------------------------

int cmd_identities(int c_max, int n_max, int trials, int random_n_max,
                   unsigned long seed, const std::string& format) {
    long checked = 0, deviations = 0;

    for (int c = 1; c <= c_max; ++c)
        for (int b = 1; b <= c; ++b)
            for (int a = 0; a + b <= c; ++a) {
                ++checked;
                if (reciprocal_binomial_sum(a, b, c) !=
                    reciprocal_binomial_sum_closed(a, b, c))
                    ++deviations;
            }
    long thu_checked = checked;

    for (int n = 1; n <= n_max; ++n)
        for (int a = 1; a <= n; ++a) {
            checked += 2;
            if (w3_superset_sum(n, a) != rat(1, a)) ++deviations;
            if (w3_disjoint_sum(n, a) != harmonic_tail(n, a)) ++deviations;
        }

    std::mt19937_64 rng(seed);
    long analogon_checked = 0, az_checked = 0;
    for (int t = 0; t < trials; ++t) {
        std::uniform_int_distribution<int> n_pick(1, random_n_max);
        int n = n_pick(rng);
        SetPartition p = random_set_partition(n, rng);
        ++checked;
        ++analogon_checked;
        if (lower_approx_identity_sum(p) != Rational(p.block_count())) ++deviations;
        auto family = random_family(n, rng);
        ++checked;
        ++az_checked;
        if (az_identity_sum(family) != Rational(1)) ++deviations;
    }

    if (format == "json") {
        emit(json{{"checked", checked},
                  {"deviations", deviations},
                  {"reciprocal_binomial_checked", thu_checked},
                  {"lower_identity_checked", analogon_checked},
                  {"az_identity_checked", az_checked}},
             format);
    } else {
        std::cout << "identity sweep: " << checked << " identities checked, max deviation "
                  << (deviations == 0 ? "0 (exact)" : std::to_string(deviations) + " DEVIATIONS")
                  << "\n";
        std::cout << "  reciprocal binomial sums:      " << thu_checked << "\n";
        std::cout << "  lower-approximation identity:  " << analogon_checked
                  << " random partitions\n";
        std::cout << "  AZ identity:                   " << az_checked
                  << " random families\n";
    }
    return deviations == 0 ? 0 : 1;
}

// --- profile -----------------------------------------------------------------

int cmd_profile(int n, int j, const std::string& format) {
    ObjectiveProfile profile = item_objective_profile(WeightSpec{j, n});
    if (format == "csv") {
        std::cout << profile_to_csv(profile);
    } else if (format == "json") {
        json values = json::array();
        for (int a = 1; a <= n; ++a)
            values.push_back(json{{"a", a},
                                  {"value", to_fraction_string(profile.at(a))},
                                  {"decimal", to_decimal_string(profile.at(a))}});
        emit(json{{"j", j}, {"n", n},
                  {"scale", to_fraction_string(profile.scale)},
                  {"values", values}},
             format);
    } else {
        std::cout << "per-item objective, j=" << j << " n=" << n
                  << " (scale " << to_fraction_string(profile.scale) << ")\n";
        for (int a = 1; a <= n; ++a)
            std::cout << "  g(" << a << ") = " << to_fraction_string(profile.at(a))
                      << " = " << to_decimal_string(profile.at(a)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact boundary-region optimization for partition-induced rough sets"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    int n = 0, m = 0, j = 1;
    std::string sense = "min", level = "integer", partition_json;
    std::string n_range_text, m_range_text;
    int cap_subsets = 20;
    long cap_partitions = 10'000'000;

    auto* optimal = app.add_subcommand("optimal", "optimal partitions for fixed n, m, j");
    optimal->add_option("--n", n, "ground set size")->required();
    optimal->add_option("--m", m, "number of blocks")->required();
    optimal->add_option("--j", j, "distribution index")->check(CLI::Range(1, 3))->required();
    optimal->add_option("--sense", sense, "min or max")->check(CLI::IsMember({"min", "max"}));
    optimal->add_option("--level", level, "integer or set")
        ->check(CLI::IsMember({"integer", "set"}));
    optimal->add_option("--cap-partitions", cap_partitions, "brute-force budget");

    auto* expect = app.add_subcommand("expect", "exact expected boundary size of a partition");
    expect->add_option("--partition", partition_json,
                       "JSON {\"n\": int, \"blocks\": [[...],...]}")->required();
    expect->add_option("--j", j, "distribution index")->check(CLI::Range(1, 3))->required();
    expect->add_option("--cap-subsets", cap_subsets, "max n for 2^n enumeration");

    auto* sweep = app.add_subcommand("sweep", "verify closed forms against brute force");
    sweep->add_option("--n-range", n_range_text, "a..b")->required();
    sweep->add_option("--m-range", m_range_text, "a..b")->required();
    int sweep_j = 0;
    sweep->add_option("--j", sweep_j, "distribution index (0 = all)")->check(CLI::Range(0, 3));
    std::string sweep_sense = "both";
    sweep->add_option("--sense", sweep_sense, "min, max or both")
        ->check(CLI::IsMember({"min", "max", "both"}));
    sweep->add_option("--cap-partitions", cap_partitions, "brute-force budget");

    auto* certify = app.add_subcommand("certify", "reproduce the built-in certificates");
    int certify_n = 13;
    certify->add_option("--n", certify_n, "ground set size for the exact cross-checks")
        ->check(CLI::Range(8, 64));

    auto* identities = app.add_subcommand("identities", "exact identity sweeps");
    int c_max = 20, n_max = 25, trials = 100, random_n_max = 10;
    unsigned long seed = 20240915;
    identities->add_option("--c-max", c_max, "reciprocal binomial sweep bound");
    identities->add_option("--n-max", n_max, "transform identity sweep bound");
    identities->add_option("--trials", trials, "random partition/family trials");
    identities->add_option("--random-n-max", random_n_max, "max n for random trials");
    identities->add_option("--seed", seed, "RNG seed");

    auto* profile = app.add_subcommand("profile", "dump the per-item objective table");
    profile->add_option("--n", n, "ground set size")->required();
    profile->add_option("--j", j, "distribution index")->check(CLI::Range(1, 3))->required();

    // allow --format after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (optimal->parsed()) {
            if (!(n > m && m >= 2)) {
                std::cerr << "error: need n > m >= 2\n";
                return 1;
            }
            return cmd_optimal(n, m, j, sense, level, format, cap_partitions);
        }
        if (expect->parsed()) return cmd_expect(partition_json, j, cap_subsets, format);
        if (sweep->parsed())
            return cmd_sweep(parse_range(n_range_text), parse_range(m_range_text), sweep_j,
                             sweep_sense, format, cap_partitions);
        if (certify->parsed()) return cmd_certify(certify_n, format);
        if (identities->parsed())
            return cmd_identities(c_max, n_max, trials, random_n_max, seed, format);
        if (profile->parsed()) return cmd_profile(n, j, format);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
