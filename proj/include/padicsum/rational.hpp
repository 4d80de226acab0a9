#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace padicsum {

// Every quantity in this library is exact. Integers and rationals are GMP
// values; rationals are kept canonical (reduced, positive denominator) so that
// structural equality coincides with mathematical equality.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

// Parses "a", "-a" or "a/b" with optional sign on the numerator.
Rational parse_rational(const std::string& text);

// Human form: "a" when the denominator is 1, otherwise "a/b".
std::string rational_to_text(const Rational& q);

// Schema form: always "a/b", including "a/1".
std::string rational_to_fraction_string(const Rational& q);

inline Int binomial(unsigned long n, unsigned long k) {
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

inline Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0)
        return Rational(1);
    if (base == 0 && exp < 0)
        throw std::domain_error("rational_pow: zero base with negative exponent");
    const unsigned long e = exp > 0 ? static_cast<unsigned long>(exp)
                                    : static_cast<unsigned long>(-exp);
    Rational r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    if (exp < 0) {
        if (r == 0)
            throw std::domain_error("rational_pow: zero base with negative exponent");
        r = Rational(1) / r;
    }
    return r;
}

} // namespace padicsum
