#include "padicsum/bernoulli.hpp"

#include <array>
#include <utility>

#include "padicsum/errors.hpp"

namespace padicsum {

BernoulliTable::BernoulliTable(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("BernoulliTable: n_max must be >= 0");
    values_.reserve(static_cast<std::size_t>(n_max) + 1);
    values_.push_back(Rational(1));
    for (int m = 1; m <= n_max; ++m) {
        Rational acc(0);
        for (int i = 0; i < m; ++i)
            acc += Rational(binomial(static_cast<unsigned long>(m) + 1,
                                     static_cast<unsigned long>(i))) *
                   values_[static_cast<std::size_t>(i)];
        values_.push_back(-acc / Rational(static_cast<unsigned long>(m) + 1));
    }
}

const Rational& BernoulliTable::number(int n) const {
    if (n < 0 || n > n_max())
        throw std::out_of_range("BernoulliTable: index out of range");
    return values_[static_cast<std::size_t>(n)];
}

Polynomial bernoulli_polynomial(int n, const BernoulliTable& table) {
    if (n < 0 || n > table.n_max())
        throw std::out_of_range("bernoulli_polynomial: n out of table range");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        coeffs[static_cast<std::size_t>(n - j)] =
            Rational(binomial(static_cast<unsigned long>(n),
                              static_cast<unsigned long>(j))) *
            table.number(j);
    return Polynomial::from_coefficients(std::move(coeffs));
}

PolyIdentityCheck difference_identity_check(int n, const BernoulliTable& table) {
    if (n < 1)
        throw std::invalid_argument("difference_identity_check: n must be >= 1");
    const Polynomial b = bernoulli_polynomial(n, table);
    const Polynomial x_plus_1 = Polynomial::from_coefficients({Rational(1), Rational(1)});
    Polynomial residual = substitute(b, x_plus_1) - b -
                          Polynomial::monomial(Rational(static_cast<long>(n)),
                                               static_cast<std::size_t>(n - 1));
    const bool holds = residual.is_zero();
    return {holds, std::move(residual)};
}

Rational volkenborn_sum(int n, Prime p, int m, const BernoulliTable& table) {
    if (n < 0 || m < 1)
        throw std::invalid_argument("volkenborn_sum: need n >= 0 and m >= 1");
    if (n + 1 > table.n_max())
        throw std::out_of_range("volkenborn_sum: table too small (need n+1)");
    const Rational modulus(int_pow(Int(p.value()), static_cast<unsigned long>(m)));
    const Rational power_sum =
        (evaluate(bernoulli_polynomial(n + 1, table), modulus) - table.number(n + 1)) /
        Rational(static_cast<unsigned long>(n) + 1);
    return power_sum / modulus;
}

ValuationTrace volkenborn_trace(int n, Prime p, int m_max, const BernoulliTable& table) {
    if (m_max < 1)
        throw std::invalid_argument("volkenborn_trace: m_max must be >= 1");
    ValuationTrace trace{"m", "difference", {}, {}};
    for (int m = 1; m <= m_max; ++m) {
        const Rational diff = volkenborn_sum(n, p, m, table) - table.number(n);
        trace.rows.push_back({m, diff, rational_valuation(diff, p)});
    }
    return trace;
}

namespace {

const Polynomial& four_x_minus_1() {
    static const Polynomial p = Polynomial::from_coefficients({Rational(-1), Rational(4)});
    return p;
}

// n^k (4x-1)^k + U_k(x) as a polynomial in x with n-polynomial coefficients.
BiPolynomial integrand(int k, const UTable& u) {
    const BiPolynomial n_to_k(NPolynomial::monomial(Rational(1), static_cast<std::size_t>(k)));
    return n_to_k * lift_to_bipoly(poly_pow(four_x_minus_1(), static_cast<unsigned long>(k))) +
           lift_to_bipoly(u.at(k));
}

// Rewrite verification at concrete n: the difference blocks must reproduce
// the plain powers of x term by term.
void verify_polynomial_relation(const BernoulliPolyRelation& relation) {
    const int check_depth = 8;
    int top_offset = 0;
    for (const auto& term : relation.terms) top_offset = std::max(top_offset, term.offset);
    const BernoulliTable table(check_depth + top_offset + 1);
    const Polynomial x_plus_1 = Polynomial::from_coefficients({Rational(1), Rational(1)});
    for (int n = 0; n <= check_depth; ++n) {
        Polynomial lhs, rhs;
        for (const auto& term : relation.terms) {
            const Rational c = evaluate(term.numerator, Rational(n));
            const Rational d = evaluate(term.denominator, Rational(n));
            const int degree = n + term.offset + 1;
            const Polynomial b = bernoulli_polynomial(degree, table);
            lhs = lhs + (c / d) * (substitute(b, x_plus_1) - b);
            rhs = rhs + Polynomial::monomial(c, static_cast<std::size_t>(n + term.offset));
        }
        if (!(lhs == rhs))
            throw std::logic_error(
                "polynomial_relation: rewrite does not reproduce the integrand");
    }
}

} // namespace

BernoulliRelation number_relation(int k, const UTable& u) {
    if (k < 1)
        throw std::invalid_argument("number_relation: k must be >= 1");
    const BiPolynomial q = integrand(k, u);
    BernoulliRelation relation{k, {}};
    const auto& coeffs = q.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero())
            relation.terms.push_back({static_cast<int>(j), coeffs[j]});
    return relation;
}

BernoulliPolyRelation polynomial_relation(int k, const UTable& u) {
    const BernoulliRelation base = number_relation(k, u);
    BernoulliPolyRelation relation{k, {}};
    for (const RelationTerm& term : base.terms) {
        const NPolynomial denominator = NPolynomial::from_coefficients(
            {Rational(term.offset + 1), Rational(1)}); // n + j + 1
        relation.terms.push_back({term.offset, term.coefficient, denominator});
    }
    verify_polynomial_relation(relation);
    return relation;
}

BernoulliRelation reduce_to_number_relation(const BernoulliPolyRelation& relation) {
    BernoulliRelation reduced{relation.k, {}};
    for (const PolyRelationTerm& term : relation.terms)
        reduced.terms.push_back({term.offset, term.numerator});
    return reduced;
}

ValuationTrace relation_partial_sum_trace(int k, Prime p, int n_max, const UTable& u) {
    if (n_max < 1)
        throw std::invalid_argument("relation_partial_sum_trace: n_max must be >= 1");
    const BernoulliRelation relation = number_relation(k, u);
    const BernoulliTable table(n_max - 1 + k);
    ValuationTrace trace{"N", "partial_sum", {}, {}};
    Rational sum(0);
    for (int n = 0; n < n_max; ++n) {
        Rational inner(0);
        for (const RelationTerm& term : relation.terms)
            inner += evaluate(term.coefficient, Rational(n)) * table.number(n + term.offset);
        sum += Rational(binomial(2ul * static_cast<unsigned long>(n),
                                 static_cast<unsigned long>(n))) *
               inner;
        trace.rows.push_back({n + 1, sum, rational_valuation(sum, p)});
    }
    return trace;
}

namespace {

// "(4n+2)" for composites, "4n^2", "-n" for monomials; sign returned separately.
std::pair<int, std::string> coefficient_display(const NPolynomial& c) {
    int nonzero = 0;
    for (const Rational& q : c.coefficients())
        if (!coeff_is_zero(q)) ++nonzero;
    const bool negative = sgn(c.leading_coefficient()) < 0;
    const NPolynomial shown = negative ? NPolynomial(-c) : c;
    std::string body = to_text(shown);
    if (nonzero > 1) body = "(" + body + ")";
    return {negative ? -1 : +1, body};
}

std::string bernoulli_symbol(int offset) {
    return offset == 0 ? "B[n]" : "B[n+" + std::to_string(offset) + "]";
}

} // namespace

std::string relation_to_text(const BernoulliRelation& relation) {
    std::string out;
    for (auto it = relation.terms.rbegin(); it != relation.terms.rend(); ++it) {
        auto [sign, body] = coefficient_display(it->coefficient);
        if (sign < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        out += body + bernoulli_symbol(it->offset);
    }
    return out.empty() ? "0" : out;
}

std::string relation_to_text(const BernoulliPolyRelation& relation) {
    std::string out;
    for (auto it = relation.terms.rbegin(); it != relation.terms.rend(); ++it) {
        auto [sign, body] = coefficient_display(it->numerator);
        if (sign < 0)
            out += '-';
        else if (!out.empty())
            out += '+';
        out += body + "/(" + to_text(it->denominator) + ")dB" +
               bernoulli_symbol(it->offset + 1).substr(1);
    }
    return out.empty() ? "0" : out;
}

nlohmann::ordered_json to_json(const BernoulliRelation& relation) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const RelationTerm& term : relation.terms)
        terms.push_back({{"offset", term.offset},
                         {"n_polynomial", to_text(term.coefficient)},
                         {"coefficients", coefficient_strings(term.coefficient)}});
    return {{"k", relation.k}, {"terms", std::move(terms)}};
}

nlohmann::ordered_json to_json(const BernoulliPolyRelation& relation) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const PolyRelationTerm& term : relation.terms)
        terms.push_back({{"offset", term.offset},
                         {"numerator", to_text(term.numerator)},
                         {"denominator", to_text(term.denominator)},
                         {"coefficients", coefficient_strings(term.numerator)}});
    return {{"k", relation.k}, {"terms", std::move(terms)}};
}

namespace {

using Fixture = std::vector<std::pair<int, const char*>>;

// Published relations, transcribed verbatim as (offset, coefficient) pairs.
const std::array<Fixture, 6> kPublishedNumberRelations = {{
    {{1, "4n+2"}, {0, "-n"}},
    {{2, "16n^2+12"}, {1, "-8n^2+2"}, {0, "-n^2"}},
    {{3, "64n^3+8"}, {2, "-48n^3+20"}, {1, "12n^3+2"}, {0, "-n^3"}},
    {{4, "256n^4-16"}, {3, "-256n^4-144"}, {2, "96n^4-60"}, {1, "-16n^4-2"}, {0, "n^4"}},
    {{5, "1024n^5+800"},
     {4, "-1280n^5+352"},
     {3, "640n^5-1176"},
     {2, "-160n^5-136"},
     {1, "20n^5+2"},
     {0, "-n^5"}},
    {{6, "4096n^6-4032"},
     {5, "-6144n^6-3616"},
     {4, "3840n^6-32992"},
     {3, "-1280n^6-2244"},
     {2, "240n^6-332"},
     {1, "-24n^6-2"},
     {0, "n^6"}},
}};

// Numerator families of the published difference-block relations; the
// denominator against offset j is always n + j + 1.
const std::array<Fixture, 3> kPublishedPolyRelations = {{
    {{1, "4n+2"}, {0, "-n"}},
    {{2, "16n^2-4"}, {1, "-8n^2-2"}, {0, "n^2"}},
    {{3, "64n^3+8"}, {2, "-48n^3+20"}, {1, "12n^3+2"}, {0, "-n^3"}},
}};

BernoulliRelation fixture_to_relation(int k, const Fixture& fixture) {
    BernoulliRelation relation{k, {}};
    for (const auto& [offset, text] : fixture)
        relation.terms.push_back({offset, parse_npolynomial(text)});
    // ascending offset, matching the generated layout
    std::sort(relation.terms.begin(), relation.terms.end(),
              [](const RelationTerm& a, const RelationTerm& b) { return a.offset < b.offset; });
    return relation;
}

bool same_terms(const BernoulliRelation& a, const BernoulliRelation& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].offset != b.terms[i].offset ||
            !(a.terms[i].coefficient == b.terms[i].coefficient))
            return false;
    return true;
}

} // namespace

ComparisonReport compare_published_relations() {
    const UTable u(6);
    ComparisonReport report;
    for (int k = 1; k <= 6; ++k) {
        const BernoulliRelation generated = number_relation(k, u);
        const BernoulliRelation published =
            fixture_to_relation(k, kPublishedNumberRelations[static_cast<std::size_t>(k - 1)]);
        report.entries.push_back({k, "number_relation_k" + std::to_string(k),
                                  same_terms(generated, published),
                                  relation_to_text(published), relation_to_text(generated)});
    }
    for (int k = 1; k <= 3; ++k) {
        const BernoulliPolyRelation generated = polynomial_relation(k, u);
        const BernoulliRelation published =
            fixture_to_relation(k, kPublishedPolyRelations[static_cast<std::size_t>(k - 1)]);
        const BernoulliRelation reduced = reduce_to_number_relation(generated);
        report.entries.push_back({k, "polynomial_relation_k" + std::to_string(k),
                                  same_terms(reduced, published),
                                  relation_to_text(published), relation_to_text(reduced)});
    }
    return report;
}

} // namespace padicsum
