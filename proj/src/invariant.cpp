#include "padicsum/invariant.hpp"

#include <array>

#include "padicsum/errors.hpp"

namespace padicsum {

namespace {

const Polynomial& four_x_minus_1() {
    static const Polynomial p = Polynomial::from_coefficients({Rational(-1), Rational(4)});
    return p;
}

Rational binom(int n, int k) {
    return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}

} // namespace

UTable::UTable(int k_max) {
    if (k_max < 1)
        throw std::invalid_argument("UTable: k_max must be >= 1");
    const Polynomial& base = four_x_minus_1();
    const Polynomial two_x = Polynomial::monomial(Rational(2), 1);
    const Polynomial four_x = Polynomial::monomial(Rational(4), 1);
    entries_.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        // Isolate U_k: the u=k term of the recurrence contributes 4x U_k,
        // so (4x-1) U_k collects everything else; division must be exact.
        Polynomial rhs = two_x * poly_pow(base, static_cast<unsigned long>(k));
        for (int u = 1; u < k; ++u)
            rhs = rhs - binom(k, u) * (four_x * poly_pow(base, static_cast<unsigned long>(k - u)) *
                                       entries_[static_cast<std::size_t>(u - 1)]);
        for (int v = 1; v < k; ++v)
            rhs = rhs + binom(k - 1, v) * (two_x * poly_pow(base, static_cast<unsigned long>(k - v)) *
                                           entries_[static_cast<std::size_t>(v - 1)]);
        Polynomial u_k = divide_exact(rhs, base);
        if (u_k.degree() != k || !coeff_is_zero(u_k.coefficient(0)))
            throw std::logic_error("UTable: generated U_k violates its shape invariants");
        entries_.push_back(std::move(u_k));
    }
    if (entries_[0] != Polynomial::monomial(Rational(2), 1))
        throw std::logic_error("UTable: U_1 != 2x");
}

const Polynomial& UTable::at(int k) const {
    if (k < 1 || k > k_max())
        throw std::out_of_range("UTable: k out of range");
    return entries_[static_cast<std::size_t>(k - 1)];
}

ATable::ATable(int k_max) {
    if (k_max < 1)
        throw std::invalid_argument("ATable: k_max must be >= 1");
    const Polynomial& base = four_x_minus_1();
    const BiPolynomial base_b = lift_to_bipoly(base);
    const Polynomial two_x = Polynomial::monomial(Rational(2), 1);
    const Polynomial four_x = Polynomial::monomial(Rational(4), 1);
    entries_.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        const BiPolynomial n_to_k(NPolynomial::monomial(Rational(1), static_cast<std::size_t>(k)));
        BiPolynomial rhs = n_to_k * lift_to_bipoly(poly_pow(base, static_cast<unsigned long>(k)));
        for (int u = 1; u < k; ++u)
            rhs = rhs - binom(k, u) * (lift_to_bipoly(four_x * poly_pow(base, static_cast<unsigned long>(k - u))) *
                                       entries_[static_cast<std::size_t>(u - 1)]);
        for (int v = 1; v < k; ++v)
            rhs = rhs + binom(k - 1, v) * (lift_to_bipoly(two_x * poly_pow(base, static_cast<unsigned long>(k - v))) *
                                           entries_[static_cast<std::size_t>(v - 1)]);
        BiPolynomial a_k = divide_exact(rhs, base_b);
        if (a_k.degree() != k - 1)
            throw std::logic_error("ATable: generated A_{k-1} has wrong x-degree");
        for (const NPolynomial& c : a_k.coefficients())
            if (!coeff_is_zero(c.coefficient(0)))
                throw std::logic_error("ATable: A_{k-1}(0,x) != 0");
        if (a_k.leading_coefficient().degree() != k)
            throw std::logic_error("ATable: top x-coefficient has wrong n-degree");
        entries_.push_back(std::move(a_k));
    }
}

const BiPolynomial& ATable::at(int k) const {
    if (k < 1 || k > k_max())
        throw std::out_of_range("ATable: k out of range");
    return entries_[static_cast<std::size_t>(k - 1)];
}

Polynomial u_polynomial(int k) { return UTable(k).at(k); }
BiPolynomial a_polynomial(int k) { return ATable(k).at(k); }

Rational sum_direct(int k, int terms, const Rational& x) {
    if (k < 0 || terms < 1)
        throw std::invalid_argument("sum_direct: need k >= 0 and terms >= 1");
    Rational sum(0);
    Rational x_power(1);
    for (int n = 0; n < terms; ++n) {
        // 0^0 = 1, so the n=0 term of S_0 is 1.
        const Int n_to_k = (n == 0) ? Int(k == 0 ? 1 : 0)
                                    : int_pow(Int(n), static_cast<unsigned long>(k));
        if (n_to_k != 0)
            sum += Rational(binomial(2ul * static_cast<unsigned long>(n),
                                     static_cast<unsigned long>(n)) * n_to_k) * x_power;
        x_power *= x;
    }
    return sum;
}

Rational sum_by_recurrence(int k, int terms, const Rational& x) {
    if (k < 1 || terms < 1)
        throw std::invalid_argument("sum_by_recurrence: need k >= 1 and terms >= 1");
    if (x == make_rational(1, 4))
        throw SingularPoint("sum_by_recurrence: x = 1/4 is excluded");
    const Rational one_minus_4x = Rational(1) - Rational(4) * x;
    const Rational tail_factor =
        Rational(binomial(2ul * static_cast<unsigned long>(terms),
                          static_cast<unsigned long>(terms))) *
        rational_pow(x, terms);
    std::vector<Rational> s(static_cast<std::size_t>(k) + 1);
    s[0] = sum_direct(0, terms, x);
    for (int j = 1; j <= k; ++j) {
        Rational rhs = Rational(2) * x * s[0];
        for (int u = 1; u < j; ++u)
            rhs += (Rational(4) * binom(j, u) - Rational(2) * binom(j - 1, u)) * x *
                   s[static_cast<std::size_t>(u)];
        rhs -= tail_factor * Rational(int_pow(Int(terms), static_cast<unsigned long>(j)));
        s[static_cast<std::size_t>(j)] = rhs / one_minus_4x;
    }
    return s[static_cast<std::size_t>(k)];
}

Rational sum_closed_form(int k, int terms, const Rational& x, const UTable& u,
                         const ATable& a) {
    if (k < 1 || terms < 1)
        throw std::invalid_argument("sum_closed_form: need k >= 1 and terms >= 1");
    if (x == make_rational(1, 4))
        throw SingularPoint("sum_closed_form: x = 1/4 is excluded");
    const Rational base = Rational(4) * x - Rational(1);
    const Rational s0 = sum_direct(0, terms, x);
    const Rational remainder =
        Rational(binomial(2ul * static_cast<unsigned long>(terms),
                          static_cast<unsigned long>(terms))) *
        rational_pow(x, terms) * evaluate(bipoly_eval_n(a.at(k), Int(terms)), x);
    return (remainder - evaluate(u.at(k), x) * s0) / rational_pow(base, k);
}

PolyIdentityCheck summation_identity_check(int k, int terms, const UTable& u,
                                           const ATable& a) {
    if (k < 1 || terms < 1)
        throw std::invalid_argument("summation_identity_check: need k >= 1 and terms >= 1");
    const Polynomial base_k = poly_pow(four_x_minus_1(), static_cast<unsigned long>(k));
    Polynomial lhs;
    for (int n = 0; n < terms; ++n) {
        const Rational n_to_k(n == 0 ? Int(0) : int_pow(Int(n), static_cast<unsigned long>(k)));
        const Polynomial bracket = n_to_k * base_k + u.at(k);
        const Rational central(binomial(2ul * static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(n)));
        lhs = lhs + (central * bracket).times_power(static_cast<std::size_t>(n));
    }
    const Rational central_tail(binomial(2ul * static_cast<unsigned long>(terms),
                                         static_cast<unsigned long>(terms)));
    const Polynomial rhs =
        (central_tail * bipoly_eval_n(a.at(k), Int(terms))).times_power(static_cast<std::size_t>(terms));
    Polynomial residual = lhs - rhs;
    const bool holds = residual.is_zero();
    return {holds, std::move(residual)};
}

namespace {

// Published table, transcribed verbatim. Two of the A entries omit one '+'
// between continued lines in the source; the sign alternation fixes those.
constexpr std::array<const char*, 6> kPublishedU = {
    "2x",
    "-2x-4x^2",
    "8x^3+20x^2+2x",
    "-16x^4-144x^3-60x^2-2x",
    "800x^5+352x^4+1176x^3+136x^2+2x",
    "-4032x^6-3616x^5-32992x^4-2244x^3-332x^2-2x",
};

constexpr std::array<const char*, 6> kPublishedA = {
    "n",
    "(4n^2-4n)x-n^2",
    "(16n^3-40n^2+72n)x^2-(8n^3-10n^2+8n)x+n^3",
    "(64n^4-224n^3+272n^2-880n)x^3-(48n^4-112n^3-4n^2-120n)x^2"
    "+(12n^4-14n^3-18n^2-10n)x-n^4",
    "(256n^5-1152n^4+1984n^3-1568n^2+7648n)x^4-(256n^5-864n^4+480n^3+1216n^2-3008n)x^3"
    "+(96n^5-216n^4-132n^3+308n^2-108n)x^2-(16n^5-18n^4-32n^3-28n^2-12n)x+n^5",
    "(1024n^6-5632n^5+12544n^4-384n^3-2630n^2-147686n)x^5"
    "-(128n^6-5632n^5+6208n^4-15684n^3+8688n^2+28304n)x^4"
    "+(640n^6-2112n^5-19552n^4+6408n^3-384n^2-2792n)x^3"
    "-(160n^6-352n^5-404n^4+444n^3+2436n^2-280n)x^2"
    "+(20n^6-22n^5-50n^4-60n^3-40n^2-14n)x-n^6",
};

} // namespace

ComparisonReport compare_published_tables(int k_max) {
    if (k_max < 1)
        throw std::invalid_argument("compare_published_tables: k_max must be >= 1");
    const int extent = std::min(k_max, static_cast<int>(kPublishedU.size()));
    const UTable u(extent);
    const ATable a(extent);
    ComparisonReport report;
    for (int k = 1; k <= extent; ++k) {
        const std::string published = kPublishedU[static_cast<std::size_t>(k - 1)];
        const Polynomial& generated = u.at(k);
        report.entries.push_back({k, "U_" + std::to_string(k),
                                  parse_polynomial(published) == generated, published,
                                  to_text(generated)});
    }
    for (int k = 1; k <= extent; ++k) {
        const std::string published = kPublishedA[static_cast<std::size_t>(k - 1)];
        const BiPolynomial& generated = a.at(k);
        report.entries.push_back({k, "A_" + std::to_string(k - 1),
                                  parse_bipolynomial(published) == generated, published,
                                  to_text(generated)});
    }
    return report;
}

} // namespace padicsum
