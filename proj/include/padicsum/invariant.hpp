#pragma once

#include "padicsum/poly.hpp"
#include "padicsum/report.hpp"

namespace padicsum {

// Companion polynomials U_k: the degree-k polynomials that make
// C(2n,n)[n^k(4x-1)^k + U_k(x)] x^n summable in closed form. Built bottom-up
// from the recurrence; the table is immutable once constructed.
class UTable {
public:
    explicit UTable(int k_max);
    int k_max() const noexcept { return static_cast<int>(entries_.size()); }
    const Polynomial& at(int k) const; // U_k, 1 <= k <= k_max

private:
    std::vector<Polynomial> entries_;
};

// Remainder polynomials A_{k-1}(n,x): the partial sum over n < N equals
// C(2N,N) x^N A_{k-1}(N,x). x-degree k-1, coefficients polynomial in n.
class ATable {
public:
    explicit ATable(int k_max);
    int k_max() const noexcept { return static_cast<int>(entries_.size()); }
    const BiPolynomial& at(int k) const; // A_{k-1}, 1 <= k <= k_max

private:
    std::vector<BiPolynomial> entries_;
};

Polynomial u_polynomial(int k);
BiPolynomial a_polynomial(int k);

// S_k(N,x) = sum_{n=0}^{N-1} C(2n,n) n^k x^n, three independent routes.
// The direct sum is the oracle for the other two.
Rational sum_direct(int k, int terms, const Rational& x);

// Solves the triangular recurrence for S_1..S_k in terms of S_0.
// Throws SingularPoint at x = 1/4, where the solve divides by 1-4x.
Rational sum_by_recurrence(int k, int terms, const Rational& x);

// S_k = (4x-1)^{-k} [ -U_k(x) S_0 + C(2N,N) x^N A_{k-1}(N,x) ].
Rational sum_closed_form(int k, int terms, const Rational& x, const UTable& u,
                         const ATable& a);

struct PolyIdentityCheck {
    bool holds;
    Polynomial residual;
};

// Forms LHS - RHS of the finite summation identity as a polynomial in x and
// reports whether it vanishes identically.
PolyIdentityCheck summation_identity_check(int k, int terms, const UTable& u,
                                           const ATable& a);

// Regenerates U_1..U_6 and A_0..A_5 and compares them against the published
// table, entry by entry. Matching is not required anywhere; internal
// consistency is what the build trusts.
ComparisonReport compare_published_tables(int k_max = 6);

} // namespace padicsum
