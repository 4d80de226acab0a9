#include <doctest.h>

#include "padicsum/bernoulli.hpp"

using namespace padicsum;

namespace {

// Direct power-sum oracle for small p^m, with 0^0 = 1.
Rational direct_volkenborn(int n, unsigned long p, int m) {
    Int modulus = int_pow(Int(p), static_cast<unsigned long>(m));
    Rational sum(0);
    for (Int j = 0; j < modulus; ++j)
        sum += Rational(j == 0 ? Int(n == 0 ? 1 : 0)
                               : int_pow(j, static_cast<unsigned long>(n)));
    return sum / Rational(modulus);
}

bool relations_equal(const BernoulliRelation& a, const BernoulliRelation& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].offset != b.terms[i].offset ||
            !(a.terms[i].coefficient == b.terms[i].coefficient))
            return false;
    return true;
}

} // namespace

TEST_SUITE("bernoulli") {

TEST_CASE("first numbers from the recurrence") {
    const BernoulliTable table(12);
    CHECK(table.number(0) == 1);
    CHECK(table.number(1) == make_rational(-1, 2));
    CHECK(table.number(2) == make_rational(1, 6));
    CHECK(table.number(3) == 0);
    CHECK(table.number(4) == make_rational(-1, 30));
    CHECK(table.number(12) == make_rational(-691, 2730));
}

TEST_CASE("recurrence residual vanishes across the table") {
    const BernoulliTable table(50);
    for (int m = 1; m < 50; ++m) {
        Rational acc(0);
        for (int i = 0; i <= m; ++i)
            acc += Rational(binomial(static_cast<unsigned long>(m) + 1,
                                     static_cast<unsigned long>(i))) *
                   table.number(i);
        CHECK(acc == 0);
    }
}

TEST_CASE("denominators carry at most one factor of any prime") {
    const BernoulliTable table(50);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
        const Prime prime(p);
        for (int n = 0; n <= 50; ++n) {
            const Valuation v = rational_valuation(table.number(n), prime);
            if (!v.is_infinite()) CHECK(v >= Valuation::finite(-1));
        }
    }
}

TEST_CASE("bernoulli polynomials") {
    const BernoulliTable table(8);
    CHECK(bernoulli_polynomial(0, table) == Polynomial(1));
    CHECK(to_text(bernoulli_polynomial(1, table)) == "x-1/2");
    CHECK(to_text(bernoulli_polynomial(2, table)) == "x^2-x+1/6");
    for (int n = 0; n <= 8; ++n)
        CHECK(evaluate(bernoulli_polynomial(n, table), Rational(0)) == table.number(n));
}

TEST_CASE("forward difference identity") {
    const BernoulliTable table(20);
    CHECK(difference_identity_check(1, table).holds);
    CHECK(difference_identity_check(2, table).holds);
    for (int n = 1; n <= 20; ++n) {
        const PolyIdentityCheck check = difference_identity_check(n, table);
        CHECK(check.holds);
        CHECK(check.residual.is_zero());
    }
}

TEST_CASE("volkenborn sums, closed form against direct summation") {
    const BernoulliTable table(8);
    CHECK(volkenborn_sum(0, Prime(3), 4, table) == 1);
    CHECK(volkenborn_sum(2, Prime(3), 1, table) == make_rational(5, 3));
    for (int n = 0; n <= 6; ++n)
        for (unsigned long p : {2ul, 3ul})
            for (int m = 1; m <= 5; ++m)
                CHECK(volkenborn_sum(n, Prime(p), m, table) == direct_volkenborn(n, p, m));
    // closed form scales to primes where iteration would be unpleasant
    CHECK(volkenborn_sum(3, Prime(101), 2, table) == direct_volkenborn(3, 101, 2));
    CHECK(rational_valuation(volkenborn_sum(1, Prime(1000003), 1, table) -
                                 table.number(1),
                             Prime(1000003)) == Valuation::finite(1));
}

TEST_CASE("volkenborn convergence traces") {
    const BernoulliTable table(8);
    SUBCASE("n = 1, p = 5: error is 5^m / 2, valuation exactly m") {
        const ValuationTrace trace = volkenborn_trace(1, Prime(5), 6, table);
        for (const TraceRow& row : trace.rows) {
            CHECK(row.value == Rational(int_pow(Int(5), static_cast<unsigned long>(row.index))) /
                                   Rational(2));
            CHECK(row.valuation == Valuation::finite(row.index));
        }
    }
    SUBCASE("n = 2, p = 3: difference at m = 1 is 3/2") {
        const ValuationTrace trace = volkenborn_trace(2, Prime(3), 8, table);
        CHECK(trace.rows.front().value == make_rational(3, 2));
        CHECK(trace.rows.front().valuation == Valuation::finite(1));
        for (std::size_t i = 1; i < trace.rows.size(); ++i)
            CHECK(trace.rows[i].valuation > trace.rows[i - 1].valuation);
    }
    SUBCASE("n = 0: the approximation is exact at every depth") {
        const ValuationTrace trace = volkenborn_trace(0, Prime(2), 4, table);
        for (const TraceRow& row : trace.rows) {
            CHECK(row.value == 0);
            CHECK(row.valuation.is_infinite());
        }
    }
}

TEST_CASE("generated number relations") {
    const UTable u(3);
    SUBCASE("k = 1 matches the published relation") {
        const BernoulliRelation r = number_relation(1, u);
        REQUIRE(r.terms.size() == 2);
        CHECK(r.terms[0].offset == 0);
        CHECK(r.terms[0].coefficient == parse_npolynomial("-n"));
        CHECK(r.terms[1].offset == 1);
        CHECK(r.terms[1].coefficient == parse_npolynomial("4n+2"));
        CHECK(relation_to_text(r) == "(4n+2)B[n+1]-nB[n]");
    }
    SUBCASE("k = 2, derived by expansion") {
        const BernoulliRelation r = number_relation(2, u);
        REQUIRE(r.terms.size() == 3);
        CHECK(r.terms[0].coefficient == parse_npolynomial("n^2"));
        CHECK(r.terms[1].coefficient == parse_npolynomial("-8n^2-2"));
        CHECK(r.terms[2].coefficient == parse_npolynomial("16n^2-4"));
    }
    SUBCASE("k = 3 follows from the generated companion polynomial") {
        const BernoulliRelation r = number_relation(3, u);
        REQUIRE(r.terms.size() == 4);
        CHECK(r.terms[0].coefficient == parse_npolynomial("-n^3"));
        CHECK(r.terms[1].coefficient == parse_npolynomial("12n^3+2"));
        CHECK(r.terms[2].coefficient == parse_npolynomial("-48n^3+20"));
        CHECK(r.terms[3].coefficient == parse_npolynomial("64n^3+8"));
    }
}

TEST_CASE("generated polynomial relations and their reduction") {
    const UTable u(6);
    SUBCASE("k = 1 numerators and denominators") {
        const BernoulliPolyRelation r = polynomial_relation(1, u);
        REQUIRE(r.terms.size() == 2);
        CHECK(r.terms[0].numerator == parse_npolynomial("-n"));
        CHECK(r.terms[0].denominator == parse_npolynomial("n+1"));
        CHECK(r.terms[1].numerator == parse_npolynomial("4n+2"));
        CHECK(r.terms[1].denominator == parse_npolynomial("n+2"));
        CHECK(relation_to_text(r) == "(4n+2)/(n+2)dB[n+2]-n/(n+1)dB[n+1]");
    }
    SUBCASE("k = 2 numerators") {
        const BernoulliPolyRelation r = polynomial_relation(2, u);
        REQUIRE(r.terms.size() == 3);
        CHECK(r.terms[2].numerator == parse_npolynomial("16n^2-4"));
        CHECK(r.terms[2].denominator == parse_npolynomial("n+3"));
        CHECK(r.terms[1].numerator == parse_npolynomial("-8n^2-2"));
        CHECK(r.terms[0].numerator == parse_npolynomial("n^2"));
    }
    SUBCASE("reduction recovers the number relation for k <= 6") {
        for (int k = 1; k <= 6; ++k)
            CHECK(relations_equal(reduce_to_number_relation(polynomial_relation(k, u)),
                                  number_relation(k, u)));
    }
}

TEST_CASE("difference blocks vanish at x = 0 except the forced bottom term") {
    // B_m(1) - B_m(0) = m * 0^(m-1): zero for m >= 2, one for m = 1
    const BernoulliTable table(10);
    for (int m = 2; m <= 10; ++m) {
        const Polynomial b = bernoulli_polynomial(m, table);
        CHECK(evaluate(b, Rational(1)) - evaluate(b, Rational(0)) == 0);
    }
    const Polynomial b1 = bernoulli_polynomial(1, table);
    CHECK(evaluate(b1, Rational(1)) - evaluate(b1, Rational(0)) == 1);
}

TEST_CASE("relation partial sums: the k = 1 series telescopes") {
    // C(2n,n)(4n+2) = C(2n+2,n+1)(n+1), so the N-term partial sum collapses
    // to C(2N,N) N B_N; odd N >= 3 therefore gives exactly zero.
    const UTable u(2);
    const BernoulliTable table(32);
    const ValuationTrace trace = relation_partial_sum_trace(1, Prime(2), 30, u);
    for (const TraceRow& row : trace.rows) {
        const long n = row.index;
        const Rational expected =
            Rational(binomial(2ul * static_cast<unsigned long>(n),
                              static_cast<unsigned long>(n))) *
            Rational(n) * table.number(static_cast<int>(n));
        CHECK(row.value == expected);
    }
    CHECK(trace.rows[2].value == 0);
    CHECK(trace.rows[2].valuation.is_infinite());
    CHECK(trace.rows[1].valuation == Valuation::finite(1)); // C(4,2)*2*B_2 = 2
}

TEST_CASE("relation partial sums at other parameters match frozen prefixes") {
    const UTable u(2);
    const ValuationTrace p5 = relation_partial_sum_trace(1, Prime(5), 8, u);
    const char* frozen5[] = {"0", "0", "inf", "0", "inf", "0", "inf", "0"};
    for (int i = 0; i < 8; ++i)
        CHECK(valuation_to_text(p5.rows[static_cast<std::size_t>(i)].valuation) == frozen5[i]);
    const ValuationTrace p3 = relation_partial_sum_trace(2, Prime(3), 8, u);
    const char* frozen3[] = {"-1", "0", "1", "-1", "1", "2", "0", "1"};
    for (int i = 0; i < 8; ++i)
        CHECK(valuation_to_text(p3.rows[static_cast<std::size_t>(i)].valuation) == frozen3[i]);
}

TEST_CASE("published-relation comparison statuses") {
    const ComparisonReport report = compare_published_relations();
    const auto status = [&report](const std::string& quantity) {
        const ComparisonEntry* e = report.find(quantity);
        REQUIRE(e != nullptr);
        return e->match;
    };
    CHECK(status("number_relation_k1"));
    CHECK_FALSE(status("number_relation_k2")); // published form fails the expansion
    CHECK(status("number_relation_k3"));
    CHECK(status("number_relation_k4"));
    CHECK_FALSE(status("number_relation_k5"));
    CHECK_FALSE(status("number_relation_k6"));
    CHECK(status("polynomial_relation_k1"));
    CHECK(status("polynomial_relation_k2"));
    CHECK(status("polynomial_relation_k3"));
    const ComparisonEntry* k2 = report.find("number_relation_k2");
    CHECK(k2->paper_value == "(16n^2+12)B[n+2]-(8n^2-2)B[n+1]-n^2B[n]");
    CHECK(k2->generated_value == "(16n^2-4)B[n+2]-(8n^2+2)B[n+1]+n^2B[n]");
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(BernoulliTable(-1), std::invalid_argument);
    const BernoulliTable table(4);
    CHECK_THROWS_AS(table.number(5), std::out_of_range);
    CHECK_THROWS_AS(volkenborn_sum(4, Prime(3), 2, table), std::out_of_range);
    const UTable u(1);
    CHECK_THROWS_AS(number_relation(0, u), std::invalid_argument);
}

} // TEST_SUITE
