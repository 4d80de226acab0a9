#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "padicsum/rational.hpp"

namespace padicsum {

// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// A validated prime. Construction of a composite (or 0, 1) throws, so every
// downstream formula can rely on p actually being prime.
class Prime {
public:
    explicit Prime(unsigned long value) : value_(value) {
        if (!is_prime_u64(value))
            throw std::invalid_argument("Prime: " + std::to_string(value) +
                                        " is not prime");
    }
    unsigned long value() const noexcept { return value_; }
    friend bool operator==(Prime, Prime) = default;

private:
    unsigned long value_;
};

// A p-adic valuation: either a finite integer (possibly negative) or the
// valuation of zero, which compares greater than every finite value.
class Valuation {
public:
    static Valuation finite(long v) { return Valuation(false, v); }
    static Valuation infinity() { return Valuation(true, 0); }

    bool is_infinite() const noexcept { return infinite_; }
    long finite_value() const {
        if (infinite_)
            throw std::logic_error("Valuation: infinite has no finite value");
        return value_;
    }

    friend bool operator==(Valuation a, Valuation b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    // Additive with the absorbing convention v + inf = inf.
    friend Valuation operator+(Valuation a, Valuation b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return finite(a.value_ + b.value_);
    }

private:
    Valuation(bool inf, long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    long value_;
};

std::string valuation_to_text(Valuation v); // "inf" or decimal

// Base-p digits of n >= 0, least significant first; 0 has no digits.
std::vector<unsigned long> base_digits(const Int& n, Prime p);

// delta_p(n): the digit sum of n in base p.
Int digit_sum(const Int& n, Prime p);

// v_p(n) for an integer, by exact factor removal; infinite for n = 0.
Valuation integer_valuation(const Int& n, Prime p);

// v_p(n!) = (n - delta_p(n)) / (p - 1).
Valuation factorial_valuation(const Int& n, Prime p);

// v_p(C(n,m)) = (delta_p(m) + delta_p(n-m) - delta_p(n)) / (p - 1).
Valuation binomial_valuation_by_digits(const Int& n, const Int& m, Prime p);

// v_p(C(n,m)) as the number of carries when adding m and n-m in base p.
Valuation binomial_valuation_by_carries(const Int& n, const Int& m, Prime p);

// v_p extended to the rationals; infinite for 0.
Valuation rational_valuation(const Rational& x, Prime p);

// |.|_p = p^(-v), kept in exact form alongside the defining pair (p, v).
struct PadicNorm {
    unsigned long base;
    Valuation exponent; // the valuation v with |x|_p = p^(-v)
    Rational value;     // exact; 0 when the valuation is infinite
};

PadicNorm padic_norm(Valuation v, Prime p);

} // namespace padicsum
