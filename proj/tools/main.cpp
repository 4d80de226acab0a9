#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "padicsum/bernoulli.hpp"
#include "padicsum/errors.hpp"
#include "padicsum/invariant.hpp"
#include "padicsum/selfcheck.hpp"
#include "padicsum/series.hpp"

namespace {

using namespace padicsum;
using nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;
constexpr int kExitVerification = 4;
constexpr int kExitInternal = 5;

struct Options {
    int k = 1;
    int n = 0;
    int big_n = 10; // --N
    int m = 4;
    unsigned long p = 2;
    std::string x;
    std::string format = "text";
    std::string out;
};

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + opt.out + "'");
    file << payload;
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (opt.format == f) return;
    throw std::invalid_argument("format '" + opt.format + "' not supported here");
}

std::string comparison_text(const ComparisonReport& report) {
    std::string out = "published-table comparison:\n";
    for (const ComparisonEntry& e : report.entries) {
        out += "  " + e.quantity + ": " + (e.match ? "match" : "mismatch") + "\n";
        if (!e.match) {
            out += "    published: " + e.paper_value + "\n";
            out += "    generated: " + e.generated_value + "\n";
        }
    }
    return out;
}

int cmd_polys(const Options& opt) {
    require_format(opt, {"text", "json"});
    if (opt.k < 1) throw std::invalid_argument("--k must be >= 1");
    if (opt.k > 12) throw std::invalid_argument("--k is capped at 12 for this command");
    const UTable u(opt.k);
    const ATable a(opt.k);
    const ComparisonReport report = compare_published_tables(opt.k);
    if (opt.format == "json") {
        ordered_json u_entries = ordered_json::array();
        for (int k = 1; k <= opt.k; ++k)
            u_entries.push_back({{"label", "U_" + std::to_string(k)},
                                 {"k", k},
                                 {"text", to_text(u.at(k))},
                                 {"coefficients", coefficient_strings(u.at(k))}});
        ordered_json a_entries = ordered_json::array();
        for (int k = 1; k <= opt.k; ++k)
            a_entries.push_back({{"label", "A_" + std::to_string(k - 1)},
                                 {"k", k},
                                 {"text", to_text(a.at(k))},
                                 {"coefficients", coefficient_strings(a.at(k))}});
        const ordered_json doc = {{"k_max", opt.k},
                                  {"U", std::move(u_entries)},
                                  {"A", std::move(a_entries)},
                                  {"paper_comparison", to_json(report)}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::string out;
        for (int k = 1; k <= opt.k; ++k)
            out += "U_" + std::to_string(k) + " = " + to_text(u.at(k)) + "\n";
        for (int k = 1; k <= opt.k; ++k)
            out += "A_" + std::to_string(k - 1) + " = " + to_text(a.at(k)) + "\n";
        out += comparison_text(report);
        emit(opt, out);
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    require_format(opt, {"text", "json"});
    if (opt.k < 1) throw std::invalid_argument("--k must be >= 1");
    if (opt.big_n < 1) throw std::invalid_argument("--N must be >= 1");
    const UTable u(opt.k);
    const ATable a(opt.k);
    bool all_hold = true;
    ordered_json symbolic = ordered_json::array();
    std::string text;
    for (int terms = 1; terms <= opt.big_n; ++terms) {
        const PolyIdentityCheck check = summation_identity_check(opt.k, terms, u, a);
        all_hold = all_hold && check.holds;
        symbolic.push_back({{"N", terms},
                            {"holds", check.holds},
                            {"residual", to_text(check.residual)}});
        text += "k=" + std::to_string(opt.k) + " N=" + std::to_string(terms) +
                ": " + (check.holds ? "residual 0" : "residual " + to_text(check.residual)) +
                "\n";
    }
    ordered_json numeric = ordered_json::array();
    if (!opt.x.empty()) {
        const Rational x = parse_rational(opt.x);
        for (int terms = 1; terms <= opt.big_n; ++terms) {
            const Rational direct = sum_direct(opt.k, terms, x);
            const Rational recurrence = sum_by_recurrence(opt.k, terms, x);
            const Rational closed = sum_closed_form(opt.k, terms, x, u, a);
            const bool agree = direct == recurrence && recurrence == closed;
            all_hold = all_hold && agree;
            numeric.push_back({{"N", terms},
                               {"value", rational_to_fraction_string(direct)},
                               {"agree", agree}});
            text += "numeric x=" + opt.x + " N=" + std::to_string(terms) + ": " +
                    (agree ? "routes agree (" + rational_to_text(direct) + ")"
                           : "routes disagree") +
                    "\n";
        }
    }
    text += all_hold ? "all identities hold\n" : "verification failed\n";
    if (opt.format == "json") {
        ordered_json doc = {{"k", opt.k}, {"N_max", opt.big_n}, {"symbolic", symbolic}};
        if (!opt.x.empty()) {
            doc["x"] = opt.x;
            doc["numeric"] = numeric;
        }
        doc["all_hold"] = all_hold;
        emit(opt, doc.dump(2) + "\n");
    } else {
        emit(opt, text);
    }
    return all_hold ? 0 : kExitVerification;
}

int cmd_series(const Options& opt) {
    require_format(opt, {"text", "json", "csv"});
    if (opt.k < 1) throw std::invalid_argument("--k must be >= 1");
    if (opt.big_n < 1) throw std::invalid_argument("--N must be >= 1");
    if (opt.x.empty()) throw std::invalid_argument("--x is required");
    const Rational x = parse_rational(opt.x);
    const Prime p(opt.p);
    const UTable u(opt.k);
    const ATable a(opt.k);
    const ConvergencePoint point = classify_convergence_point(x, p);
    const ValuationTrace trace = invariant_sum_trace(opt.k, x, p, opt.big_n, u, a);
    if (opt.format == "csv") {
        // warnings go to stderr so the CSV stream stays clean
        for (const std::string& w : trace.warnings) std::cerr << "warning: " << w << "\n";
        emit(opt, trace_to_csv(trace));
    } else if (opt.format == "json") {
        ordered_json doc = {{"k", opt.k},
                            {"x", rational_to_fraction_string(x)},
                            {"p", opt.p},
                            {"domain",
                             {{"in_domain", point.in_domain}, {"reasons", point.reasons}}},
                            {"trace", trace_to_json(trace)}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::string out = "x = " + rational_to_text(x) + ", p = " + std::to_string(opt.p) +
                          ": " +
                          (point.in_domain ? "inside the stated convergence domain"
                                           : "outside the stated convergence domain") +
                          "\n";
        emit(opt, out + trace_to_text(trace));
    }
    return 0;
}

int cmd_bernoulli_numbers(const Options& opt) {
    require_format(opt, {"text", "json"});
    if (opt.n < 0) throw std::invalid_argument("--n must be >= 0");
    const BernoulliTable table(opt.n);
    if (opt.format == "json") {
        std::vector<std::string> values;
        for (int i = 0; i <= opt.n; ++i)
            values.push_back(rational_to_fraction_string(table.number(i)));
        const ordered_json doc = {{"n_max", opt.n}, {"values", values}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::string out;
        for (int i = 0; i <= opt.n; ++i)
            out += "B_" + std::to_string(i) + " = " + rational_to_text(table.number(i)) + "\n";
        emit(opt, out);
    }
    return 0;
}

int cmd_bernoulli_poly(const Options& opt) {
    require_format(opt, {"text", "json"});
    if (opt.n < 0) throw std::invalid_argument("--n must be >= 0");
    const BernoulliTable table(opt.n);
    const Polynomial b = bernoulli_polynomial(opt.n, table);
    if (opt.format == "json") {
        const ordered_json doc = {{"n", opt.n},
                                  {"text", to_text(b)},
                                  {"coefficients", coefficient_strings(b)}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        emit(opt, "B_" + std::to_string(opt.n) + "(x) = " + to_text(b) + "\n");
    }
    return 0;
}

int cmd_bernoulli_relation(const Options& opt, bool difference_blocks) {
    require_format(opt, {"text", "json"});
    if (opt.k < 1) throw std::invalid_argument("--k must be >= 1");
    const UTable u(opt.k);
    if (difference_blocks) {
        const BernoulliPolyRelation relation = polynomial_relation(opt.k, u);
        if (opt.format == "json")
            emit(opt, to_json(relation).dump(2) + "\n");
        else
            emit(opt, "sum_n C(2n,n) [ " + relation_to_text(relation) + " ] = 0\n");
    } else {
        const BernoulliRelation relation = number_relation(opt.k, u);
        if (opt.format == "json")
            emit(opt, to_json(relation).dump(2) + "\n");
        else
            emit(opt, "sum_n C(2n,n) [ " + relation_to_text(relation) + " ] = 0\n");
    }
    return 0;
}

int cmd_bernoulli_volkenborn(const Options& opt) {
    require_format(opt, {"text", "json", "csv"});
    if (opt.n < 0) throw std::invalid_argument("--n must be >= 0");
    if (opt.m < 1) throw std::invalid_argument("--m must be >= 1");
    const Prime p(opt.p);
    const BernoulliTable table(opt.n + 1);
    const ValuationTrace trace = volkenborn_trace(opt.n, p, opt.m, table);
    if (opt.format == "csv") {
        emit(opt, trace_to_csv(trace));
    } else if (opt.format == "json") {
        const ordered_json doc = {{"n", opt.n},
                                  {"p", opt.p},
                                  {"m_max", opt.m},
                                  {"B_n", rational_to_fraction_string(table.number(opt.n))},
                                  {"trace", trace_to_json(trace)}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        emit(opt, "B_" + std::to_string(opt.n) + " = " +
                      rational_to_text(table.number(opt.n)) + "\n" + trace_to_text(trace));
    }
    return 0;
}

int cmd_selfcheck(const Options& opt) {
    require_format(opt, {"text", "json"});
    const SelfcheckReport report = run_selfcheck();
    if (opt.format == "json")
        emit(opt, selfcheck_to_json(report).dump(2) + "\n");
    else
        emit(opt, selfcheck_to_text(report));
    if (!report.all_passed()) {
        std::string failing;
        for (const CriterionResult& c : report.criteria)
            if (!c.passed) failing += (failing.empty() ? "" : ", ") + std::to_string(c.id);
        std::cerr << "error: verification_failed: criteria " << failing << "\n";
        return kExitVerification;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact regeneration and verification of p-adic central-binomial "
                 "summation identities"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd, std::initializer_list<const char*> formats) {
        std::string format_help = "output format:";
        for (const char* f : formats) format_help += std::string(" ") + f;
        cmd->add_option("--format", opt.format, format_help)->capture_default_str();
        cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
    };

    CLI::App* polys = app.add_subcommand(
        "polys", "emit generated U_k / A_{k-1} tables and the published-table comparison");
    polys->add_option("--k", opt.k, "largest k to generate")->required();
    add_common(polys, {"text", "json"});

    CLI::App* verify = app.add_subcommand(
        "verify", "check the finite summation identity symbolically (and numerically at --x)");
    verify->add_option("--k", opt.k, "power of n in the summand")->required();
    verify->add_option("--N", opt.big_n, "check partial sums up to this length")->required();
    verify->add_option("--x", opt.x, "optional rational argument a/b for numeric checks");
    add_common(verify, {"text", "json"});

    CLI::App* series = app.add_subcommand(
        "series", "valuation trace of the invariant-series partial sums");
    series->add_option("--k", opt.k, "power of n in the summand")->required();
    series->add_option("--x", opt.x, "rational argument a/b")->required();
    series->add_option("--p", opt.p, "prime for valuations")->required();
    series->add_option("--N", opt.big_n, "trace partial sums up to this length")->required();
    add_common(series, {"text", "json", "csv"});

    CLI::App* bernoulli = app.add_subcommand("bernoulli", "Bernoulli-side commands");
    bernoulli->require_subcommand(1);

    CLI::App* numbers = bernoulli->add_subcommand("numbers", "B_0..B_n by the recurrence");
    numbers->add_option("--n", opt.n, "largest index")->required();
    add_common(numbers, {"text", "json"});

    CLI::App* poly = bernoulli->add_subcommand("poly", "the Bernoulli polynomial B_n(x)");
    poly->add_option("--n", opt.n, "degree")->required();
    add_common(poly, {"text", "json"});

    CLI::App* relation = bernoulli->add_subcommand(
        "relation", "generated Bernoulli-number relation for one k");
    relation->add_option("--k", opt.k, "relation index")->required();
    add_common(relation, {"text", "json"});

    CLI::App* poly_relation = bernoulli->add_subcommand(
        "poly-relation", "generated Bernoulli-polynomial relation for one k");
    poly_relation->add_option("--k", opt.k, "relation index")->required();
    add_common(poly_relation, {"text", "json"});

    CLI::App* volkenborn = bernoulli->add_subcommand(
        "volkenborn", "Volkenborn approximation trace for x^n");
    volkenborn->add_option("--n", opt.n, "power of x")->required();
    volkenborn->add_option("--p", opt.p, "prime")->required();
    volkenborn->add_option("--m", opt.m, "largest depth p^m")->required();
    add_common(volkenborn, {"text", "json", "csv"});

    CLI::App* selfcheck = app.add_subcommand(
        "selfcheck", "run the full verification suite; exit 0 iff every criterion passes");
    add_common(selfcheck, {"text", "json"});
    bool selfcheck_json = false;
    selfcheck->add_flag("--json", selfcheck_json, "shorthand for --format json");

    try {
        app.parse(argc, argv);
        if (polys->parsed()) return cmd_polys(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (series->parsed()) return cmd_series(opt);
        if (numbers->parsed()) return cmd_bernoulli_numbers(opt);
        if (poly->parsed()) return cmd_bernoulli_poly(opt);
        if (relation->parsed()) return cmd_bernoulli_relation(opt, false);
        if (poly_relation->parsed()) return cmd_bernoulli_relation(opt, true);
        if (volkenborn->parsed()) return cmd_bernoulli_volkenborn(opt);
        if (selfcheck->parsed()) {
            if (selfcheck_json) opt.format = "json";
            return cmd_selfcheck(opt);
        }
        std::cerr << "error: usage: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const padicsum::SingularPoint& e) {
        std::cerr << "error: singular_point: " << e.what() << "\n";
        return kExitSingular;
    } catch (const padicsum::NonExactDivision& e) {
        std::cerr << "error: internal_inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const padicsum::DivisionByZeroPolynomial& e) {
        std::cerr << "error: internal_inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: internal_inconsistency: " << e.what() << "\n";
        return kExitInternal;
    }
}
