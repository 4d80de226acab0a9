#pragma once

#include "padicsum/invariant.hpp"
#include "padicsum/padic.hpp"
#include "padicsum/trace.hpp"

namespace padicsum {

// B_0..B_{n_max} from the defining recurrence
// sum_{i=0}^{m} C(m+1,i) B_i = 0, B_0 = 1; so B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(int n_max);
    int n_max() const noexcept { return static_cast<int>(values_.size()) - 1; }
    const Rational& number(int n) const;

private:
    std::vector<Rational> values_;
};

// B_n(x) = sum_j C(n,j) B_j x^(n-j); B_n(0) = B_n.
Polynomial bernoulli_polynomial(int n, const BernoulliTable& table);

// Residual of B_n(x+1) - B_n(x) - n x^(n-1), which must vanish identically.
PolyIdentityCheck difference_identity_check(int n, const BernoulliTable& table);

// (1/p^m) sum_{j=0}^{p^m-1} j^n, exactly, via the Faulhaber closed form
// (B_{n+1}(p^m) - B_{n+1}) / (n+1); converges p-adically to B_n.
Rational volkenborn_sum(int n, Prime p, int m, const BernoulliTable& table);

// (m, approximation - B_n, valuation) for m = 1..m_max.
ValuationTrace volkenborn_trace(int n, Prime p, int m_max, const BernoulliTable& table);

// sum_n C(2n,n) sum_j c_j(n) B_{n+j} = 0, obtained by expanding
// n^k(4x-1)^k + U_k(x) in powers of x and mapping x^{n+j} to B_{n+j}.
struct RelationTerm {
    int offset;              // j
    NPolynomial coefficient; // c_j(n)
};

struct BernoulliRelation {
    int k;
    std::vector<RelationTerm> terms; // ascending offset, zero terms omitted
};

BernoulliRelation number_relation(int k, const UTable& u);

// The same series rewritten through x^m = (B_{m+1}(x+1) - B_{m+1}(x))/(m+1):
// term j carries c_j(n)/(n+j+1) against B_{n+j+1}(x+1) - B_{n+j+1}(x).
// Construction verifies, at concrete n, that the rewrite reproduces the
// original integrand exactly.
struct PolyRelationTerm {
    int offset;
    NPolynomial numerator;   // c_j(n)
    NPolynomial denominator; // n + j + 1
};

struct BernoulliPolyRelation {
    int k;
    std::vector<PolyRelationTerm> terms;
};

BernoulliPolyRelation polynomial_relation(int k, const UTable& u);

// Maps every difference block back through the power identity, recovering
// the plain number relation; the x = 0 specialization of the rewrite.
BernoulliRelation reduce_to_number_relation(const BernoulliPolyRelation& relation);

// Exact partial sums of the number relation with their p-adic valuations.
// Purely empirical: no convergence claim is attached to these series.
ValuationTrace relation_partial_sum_trace(int k, Prime p, int n_max, const UTable& u);

std::string relation_to_text(const BernoulliRelation& relation);
std::string relation_to_text(const BernoulliPolyRelation& relation);

nlohmann::ordered_json to_json(const BernoulliRelation& relation);
nlohmann::ordered_json to_json(const BernoulliPolyRelation& relation);

// Generated relations against the published ones, both forms rendered.
ComparisonReport compare_published_relations();

} // namespace padicsum
