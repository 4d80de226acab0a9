#include "padicsum/series.hpp"

#include "padicsum/errors.hpp"

namespace padicsum {

namespace {

void reject_singular(const Rational& x, const char* who) {
    if (x == make_rational(1, 4))
        throw SingularPoint(std::string(who) + ": x = 1/4 is excluded");
}

// One literal series term C(2n,n) [n^k (4x-1)^k + U_k(x)] x^n.
Rational series_term(int k, const Rational& x, int n, const Rational& u_at_x,
                     const Rational& base_to_k, const Rational& x_power) {
    const Int n_to_k = n == 0 ? Int(0) : int_pow(Int(n), static_cast<unsigned long>(k));
    const Rational bracket = Rational(n_to_k) * base_to_k + u_at_x;
    return Rational(binomial(2ul * static_cast<unsigned long>(n),
                             static_cast<unsigned long>(n))) *
           bracket * x_power;
}

Rational closed_remainder(int k, const Rational& x, int terms, const ATable& a) {
    return Rational(binomial(2ul * static_cast<unsigned long>(terms),
                             static_cast<unsigned long>(terms))) *
           rational_pow(x, terms) * evaluate(bipoly_eval_n(a.at(k), Int(terms)), x);
}

} // namespace

ConvergencePoint classify_convergence_point(const Rational& x, Prime p) {
    ConvergencePoint point{x, p.value(), true, {}};
    const Int& u = x.get_num();
    const Int& v = x.get_den();
    if (mpz_cmpabs(u.get_mpz_t(), v.get_mpz_t()) > 0) {
        point.in_domain = false;
        point.reasons.push_back("|u| > |v|");
    }
    if (mpz_divisible_ui_p(u.get_mpz_t(), p.value()) == 0) {
        point.in_domain = false;
        point.reasons.push_back("p does not divide u");
    }
    if (mpz_divisible_ui_p(v.get_mpz_t(), p.value()) != 0) {
        point.in_domain = false;
        point.reasons.push_back("p divides v");
    }
    return point;
}

Rational invariant_partial_sum(int k, const Rational& x, int terms,
                               const UTable& u, const ATable& a) {
    if (k < 1 || terms < 1)
        throw std::invalid_argument("invariant_partial_sum: need k >= 1 and terms >= 1");
    reject_singular(x, "invariant_partial_sum");
    const Rational u_at_x = evaluate(u.at(k), x);
    const Rational base_to_k = rational_pow(Rational(4) * x - 1, k);
    Rational sum(0);
    Rational x_power(1);
    for (int n = 0; n < terms; ++n) {
        sum += series_term(k, x, n, u_at_x, base_to_k, x_power);
        x_power *= x;
    }
    if (sum != closed_remainder(k, x, terms, a))
        throw std::logic_error(
            "invariant_partial_sum: literal sum disagrees with the remainder form");
    return sum;
}

Rational invariant_combination_partial_sum(const std::vector<Rational>& weights,
                                           const Rational& x, int terms,
                                           const UTable& u) {
    if (weights.empty() || terms < 1)
        throw std::invalid_argument(
            "invariant_combination_partial_sum: need weights and terms >= 1");
    const int k_top = static_cast<int>(weights.size());
    if (u.k_max() < k_top)
        throw std::invalid_argument("invariant_combination_partial_sum: table too small");
    reject_singular(x, "invariant_combination_partial_sum");
    const Rational base = Rational(4) * x - 1;
    std::vector<Rational> u_at_x;
    for (int j = 1; j <= k_top; ++j) u_at_x.push_back(evaluate(u.at(j), x));
    Rational sum(0);
    Rational x_power(1);
    for (int n = 0; n < terms; ++n) {
        Rational bracket(0);
        Rational base_power = base;
        for (int j = 1; j <= k_top; ++j) {
            const Int n_to_j = n == 0 ? Int(0) : int_pow(Int(n), static_cast<unsigned long>(j));
            bracket += weights[static_cast<std::size_t>(j - 1)] *
                       (Rational(n_to_j) * base_power + u_at_x[static_cast<std::size_t>(j - 1)]);
            base_power *= base;
        }
        sum += Rational(binomial(2ul * static_cast<unsigned long>(n),
                                 static_cast<unsigned long>(n))) *
               bracket * x_power;
        x_power *= x;
    }
    return sum;
}

ValuationTrace invariant_sum_trace(int k, const Rational& x, Prime p, int n_max,
                                   const UTable& u, const ATable& a) {
    if (k < 1 || n_max < 1)
        throw std::invalid_argument("invariant_sum_trace: need k >= 1 and N_max >= 1");
    reject_singular(x, "invariant_sum_trace");
    ValuationTrace trace{"N", "partial_sum", {}, {}};
    const ConvergencePoint point = classify_convergence_point(x, p);
    if (!point.in_domain) {
        std::string why;
        for (const std::string& r : point.reasons) {
            if (!why.empty()) why += "; ";
            why += r;
        }
        trace.warnings.push_back("x outside the stated convergence domain (" + why + ")");
    }
    const Rational u_at_x = evaluate(u.at(k), x);
    const Rational base_to_k = rational_pow(Rational(4) * x - 1, k);
    Rational sum(0);
    Rational x_power(1);
    for (int n = 0; n < n_max; ++n) {
        sum += series_term(k, x, n, u_at_x, base_to_k, x_power);
        x_power *= x;
        const int terms = n + 1;
        if (sum != closed_remainder(k, x, terms, a))
            throw std::logic_error(
                "invariant_sum_trace: literal sum disagrees with the remainder form");
        trace.rows.push_back({terms, sum, rational_valuation(sum, p)});
    }
    return trace;
}

TermValuation term_valuation_bound(long n, const Rational& x, Prime p) {
    if (n < 0)
        throw std::domain_error("term_valuation_bound: n must be nonnegative");
    const Valuation binomial_part = integer_valuation(
        binomial(2ul * static_cast<unsigned long>(n), static_cast<unsigned long>(n)), p);
    // x^0 = 1 regardless of x, so n = 0 contributes valuation 0.
    const Valuation x_part =
        n == 0 ? Valuation::finite(0)
               : (rational_valuation(x, p).is_infinite()
                      ? Valuation::infinity()
                      : Valuation::finite(n * rational_valuation(x, p).finite_value()));
    return {x_part, binomial_part, x_part + binomial_part};
}

long max_denominator_valuation(const BiPolynomial& a, Prime p) {
    long worst = 0;
    for (const NPolynomial& c : a.coefficients())
        for (const Rational& q : c.coefficients()) {
            if (coeff_is_zero(q)) continue;
            const long v = integer_valuation(q.get_den(), p).finite_value();
            worst = std::max(worst, v);
        }
    return worst;
}

} // namespace padicsum
