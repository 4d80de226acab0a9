#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "padicsum/errors.hpp"
#include "padicsum/rational.hpp"

namespace padicsum {

inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational coeff_exact_div(const Rational& a, const Rational& b) {
    return a / b; // b is a leading coefficient, never zero
}

// Dense univariate polynomial over an exact coefficient ring. Trailing zero
// coefficients are trimmed after every operation, so operator== is both
// structural and mathematical equality. The zero polynomial has an empty
// coefficient list; degree() marks it with -1.
//
// Var is only a display/type tag: polynomials in x and in n are distinct
// types, and a polynomial in x whose coefficients are polynomials in n gives
// the two-level values A_{k-1}(n,x).
template <class C, char Var>
class BasicPoly {
public:
    using coefficient_type = C;
    static constexpr char variable = Var;

    BasicPoly() = default;
    BasicPoly(const C& constant) { // implicit: constants promote to polynomials
        if (!coeff_is_zero(constant)) coeffs_.push_back(constant);
    }
    BasicPoly(long constant) : BasicPoly(C(constant)) {}

    static BasicPoly from_coefficients(std::vector<C> coeffs) {
        BasicPoly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static BasicPoly monomial(const C& c, std::size_t exponent) {
        BasicPoly p;
        if (!coeff_is_zero(c)) {
            p.coeffs_.assign(exponent + 1, C{});
            p.coeffs_.back() = c;
        }
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<C>& coefficients() const noexcept { return coeffs_; }

    C coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : C{};
    }

    const C& leading_coefficient() const {
        if (is_zero())
            throw std::logic_error("leading_coefficient of zero polynomial");
        return coeffs_.back();
    }

    // Multiplication by Var^e.
    BasicPoly times_power(std::size_t e) const {
        if (is_zero() || e == 0) {
            BasicPoly p = *this;
            return p;
        }
        BasicPoly p;
        p.coeffs_.assign(e, C{});
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
        std::vector<C> sum(std::max(a.coeffs_.size(), b.coeffs_.size()), C{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) sum[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) sum[i] = sum[i] + b.coeffs_[i];
        return from_coefficients(std::move(sum));
    }

    friend BasicPoly operator-(const BasicPoly& a) {
        std::vector<C> neg;
        neg.reserve(a.coeffs_.size());
        for (const C& c : a.coeffs_) neg.push_back(C{} - c);
        return from_coefficients(std::move(neg));
    }

    friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
        return a + (-b);
    }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return BasicPoly{};
        std::vector<C> prod(a.coeffs_.size() + b.coeffs_.size() - 1, C{});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] = prod[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return from_coefficients(std::move(prod));
    }

    // Scalar scaling; coefficients of both levels scale through recursively.
    friend BasicPoly operator*(const BasicPoly& a, const Rational& s) {
        std::vector<C> scaled;
        scaled.reserve(a.coeffs_.size());
        for (const C& c : a.coeffs_) scaled.push_back(c * s);
        return from_coefficients(std::move(scaled));
    }
    friend BasicPoly operator*(const Rational& s, const BasicPoly& a) { return a * s; }

private:
    void trim() {
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using Polynomial = BasicPoly<Rational, 'x'>;
using NPolynomial = BasicPoly<Rational, 'n'>;
using BiPolynomial = BasicPoly<NPolynomial, 'x'>;

template <class C, char Var>
bool coeff_is_zero(const BasicPoly<C, Var>& p) {
    return p.is_zero();
}

template <class C, char Var>
BasicPoly<C, Var> poly_pow(const BasicPoly<C, Var>& base, unsigned long exponent) {
    BasicPoly<C, Var> result(1);
    for (unsigned long i = 0; i < exponent; ++i) result = result * base;
    return result;
}

// Classical long division requiring a zero remainder. A nonzero remainder is
// reported as NonExactDivision; callers in the table recurrences treat that
// as an internal inconsistency.
template <class C, char Var>
BasicPoly<C, Var> divide_exact(const BasicPoly<C, Var>& num,
                               const BasicPoly<C, Var>& den) {
    if (den.is_zero())
        throw DivisionByZeroPolynomial("divide_exact: zero divisor");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw NonExactDivision("divide_exact: divisor degree exceeds dividend");
    std::vector<C> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, C{});
    BasicPoly<C, Var> rem = num;
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - den.degree());
        C c = coeff_exact_div(rem.leading_coefficient(), den.leading_coefficient());
        quot[shift] = c;
        rem = rem - BasicPoly<C, Var>::monomial(c, shift) * den;
    }
    if (!rem.is_zero())
        throw NonExactDivision("divide_exact: nonzero remainder");
    return BasicPoly<C, Var>::from_coefficients(std::move(quot));
}

template <class C, char Var>
BasicPoly<C, Var> coeff_exact_div(const BasicPoly<C, Var>& a,
                                  const BasicPoly<C, Var>& b) {
    return divide_exact(a, b);
}

// Exact Horner evaluation.
template <char Var>
Rational evaluate(const BasicPoly<Rational, Var>& p, const Rational& at) {
    Rational acc(0);
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * at + *it;
    return acc;
}

// p(inner), by Horner with polynomial arithmetic.
template <class C, char Var>
BasicPoly<C, Var> substitute(const BasicPoly<C, Var>& p,
                             const BasicPoly<C, Var>& inner) {
    BasicPoly<C, Var> acc;
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        acc = acc * inner + BasicPoly<C, Var>(*it);
    return acc;
}

// A_{k-1}(n0, x): substitute the integer into every n-coefficient.
Polynomial bipoly_eval_n(const BiPolynomial& a, const Int& n);

// A_{k-1}(n, x0): Horner in x, leaving a polynomial in n.
NPolynomial bipoly_eval_x(const BiPolynomial& a, const Rational& x);

// Lift a polynomial in x to the two-level type (constant n-coefficients).
BiPolynomial lift_to_bipoly(const Polynomial& p);

// --- canonical text form -------------------------------------------------
//
// "8x^3+20x^2+2x", "x-1/2", "-4x^2-2x"; the two-level form parenthesizes
// composite coefficients: "(4n^2-6n)x-n^2". Round-trips exactly.

std::string to_text(const Polynomial& p);
std::string to_text(const NPolynomial& p);
std::string to_text(const BiPolynomial& p);

Polynomial parse_polynomial(const std::string& text);
NPolynomial parse_npolynomial(const std::string& text);
BiPolynomial parse_bipolynomial(const std::string& text);

// --- structured form ------------------------------------------------------
//
// Coefficient lists index i = coefficient of Var^i, every entry "a/b".

std::vector<std::string> coefficient_strings(const Polynomial& p);
std::vector<std::string> coefficient_strings(const NPolynomial& p);
std::vector<std::vector<std::string>> coefficient_strings(const BiPolynomial& p);

Polynomial polynomial_from_strings(const std::vector<std::string>& coeffs);
NPolynomial npolynomial_from_strings(const std::vector<std::string>& coeffs);
BiPolynomial bipolynomial_from_strings(const std::vector<std::vector<std::string>>& coeffs);

} // namespace padicsum
