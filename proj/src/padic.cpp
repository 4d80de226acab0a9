#include "padicsum/padic.hpp"

namespace padicsum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u128>(a) * b % m; }

u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Witness set deterministic for all 64-bit inputs.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : kWitnesses) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::string valuation_to_text(Valuation v) {
    return v.is_infinite() ? "inf" : std::to_string(v.finite_value());
}

std::vector<unsigned long> base_digits(const Int& n, Prime p) {
    if (n < 0)
        throw std::domain_error("base_digits: n must be nonnegative");
    std::vector<unsigned long> digits;
    Int rest = n;
    while (rest != 0) {
        digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p.value()));
    }
    return digits;
}

Int digit_sum(const Int& n, Prime p) {
    Int sum = 0;
    for (unsigned long d : base_digits(n, p)) sum += d;
    return sum;
}

Valuation integer_valuation(const Int& n, Prime p) {
    if (n == 0) return Valuation::infinity();
    Int reduced;
    const Int prime(p.value());
    const auto count =
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t());
    return Valuation::finite(static_cast<long>(count));
}

namespace {

// (numerator)/(p-1), which the digit formulas guarantee to be an exact
// nonnegative integer; a failed division here means corrupted inputs.
Valuation legendre_quotient(const Int& numerator, Prime p, const char* who) {
    Int q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(),
                   p.value() - 1);
    if (r != 0 || q < 0)
        throw std::logic_error(std::string(who) + ": digit formula not integral");
    if (!q.fits_slong_p())
        throw std::overflow_error(std::string(who) + ": valuation out of range");
    return Valuation::finite(q.get_si());
}

} // namespace

Valuation factorial_valuation(const Int& n, Prime p) {
    if (n < 0)
        throw std::domain_error("factorial_valuation: n must be nonnegative");
    return legendre_quotient(n - digit_sum(n, p), p, "factorial_valuation");
}

Valuation binomial_valuation_by_digits(const Int& n, const Int& m, Prime p) {
    if (m < 0 || n < 0)
        throw std::domain_error("binomial_valuation_by_digits: negative input");
    if (m > n)
        throw std::domain_error("binomial_valuation_by_digits: m > n");
    return legendre_quotient(digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p),
                             p, "binomial_valuation_by_digits");
}

Valuation binomial_valuation_by_carries(const Int& n, const Int& m, Prime p) {
    if (m < 0 || n < 0)
        throw std::domain_error("binomial_valuation_by_carries: negative input");
    if (m > n)
        throw std::domain_error("binomial_valuation_by_carries: m > n");
    const auto a = base_digits(m, p);
    const auto b = base_digits(n - m, p);
    const std::size_t width = std::max(a.size(), b.size());
    long carries = 0;
    unsigned long carry = 0;
    for (std::size_t i = 0; i < width; ++i) {
        // Digit sums can reach 2p-1, which overflows 64 bits for large p.
        const u128 s = static_cast<u128>(i < a.size() ? a[i] : 0) +
                       (i < b.size() ? b[i] : 0) + carry;
        if (s >= p.value()) {
            carry = 1;
            ++carries;
        } else {
            carry = 0;
        }
    }
    return Valuation::finite(carries);
}

Valuation rational_valuation(const Rational& x, Prime p) {
    if (x == 0) return Valuation::infinity();
    const long num = integer_valuation(x.get_num(), p).finite_value();
    const long den = integer_valuation(x.get_den(), p).finite_value();
    return Valuation::finite(num - den);
}

PadicNorm padic_norm(Valuation v, Prime p) {
    if (v.is_infinite())
        return PadicNorm{p.value(), v, Rational(0)};
    const long e = v.finite_value();
    const Int power = int_pow(Int(p.value()),
                              static_cast<unsigned long>(e < 0 ? -e : e));
    Rational value = e >= 0 ? make_rational(Int(1), power) : Rational(power);
    return PadicNorm{p.value(), v, value};
}

} // namespace padicsum
