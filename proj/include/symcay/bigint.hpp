#pragma once

#include <gmpxx.h>

#include <string>

namespace symcay {

/// Exact arbitrary-precision nonnegative count.  Group orders in this
/// library routinely exceed 2^64 (an alternating group of degree 39 has
/// order 39!/2), so every order, index and element count is carried
/// exactly rather than in a machine word.
using BigCount = mpz_class;

/// mpz_class lacks a long long constructor; counts and caps in this
/// codebase are nonnegative and fit a 64-bit long on every supported ABI.
inline BigCount big_of(long long v) { return BigCount(static_cast<long>(v)); }

inline BigCount big_factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// True when d divides n.  Requires d > 0.
inline bool big_divides(const BigCount& d, const BigCount& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigCount big_lcm(const BigCount& a, const BigCount& b) {
    BigCount r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigCount big_pow(const BigCount& base, unsigned long exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigCount big_gcd(const BigCount& a, const BigCount& b) {
    BigCount r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// True when v is a power of two (2^0 = 1 counts).
inline bool big_is_power_of_two(const BigCount& v) {
    if (v <= 0) return false;
    return mpz_popcount(v.get_mpz_t()) == 1;
}

inline std::string big_str(const BigCount& v) { return v.get_str(); }

}  // namespace symcay
