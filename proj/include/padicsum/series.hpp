#pragma once

#include "padicsum/invariant.hpp"
#include "padicsum/padic.hpp"
#include "padicsum/trace.hpp"

namespace padicsum {

// Membership in the sufficient p-adic convergence domain: x = u/v reduced
// with |u| <= |v|, p | u and p does not divide v. The domain is sufficient,
// not claimed maximal, so callers outside it get warnings rather than errors.
struct ConvergencePoint {
    Rational x;
    unsigned long p;
    bool in_domain;
    std::vector<std::string> reasons; // failed conditions, empty when in domain
};

ConvergencePoint classify_convergence_point(const Rational& x, Prime p);

// T_N = sum_{n=0}^{N-1} C(2n,n) [n^k (4x-1)^k + U_k(x)] x^n, exact.
// Computed literally and via the closed remainder form C(2N,N) x^N A_{k-1}(N,x)
// with equality asserted; a mismatch means the tables are corrupted.
Rational invariant_partial_sum(int k, const Rational& x, int terms,
                               const UTable& u, const ATable& a);

// Partial sums of the weighted combination sum_j w_j [n^j(4x-1)^j + U_j(x)];
// weights[j-1] multiplies the j-th bracket.
Rational invariant_combination_partial_sum(const std::vector<Rational>& weights,
                                           const Rational& x, int terms,
                                           const UTable& u);

// (N, T_N, v_p(T_N)) for N = 1..N_max, with a warning when x lies outside
// the stated convergence domain.
ValuationTrace invariant_sum_trace(int k, const Rational& x, Prime p, int n_max,
                                   const UTable& u, const ATable& a);

// Valuation lower bound for the n-th series term: v_p(C(2n,n) x^n) split into
// its two exact parts. The full term respects the bound whenever the
// polynomial factor has nonnegative valuation.
struct TermValuation {
    Valuation x_part;        // n * v_p(x)
    Valuation binomial_part; // v_p(C(2n,n))
    Valuation bound;         // their sum
};

TermValuation term_valuation_bound(long n, const Rational& x, Prime p);

// Largest p-valuation of a coefficient denominator across A_{k-1}; the
// divergence offset d_k in v_p(T_N) >= N v_p(x) - d_k.
long max_denominator_valuation(const BiPolynomial& a, Prime p);

} // namespace padicsum
