#pragma once

#include <gmpxx.h>
#include <string>

namespace hypercycle {

// Arbitrary-precision integer and rational scalars. Rationals are kept
// canonical (reduced, positive denominator) by GMP; construct through
// make_rat when numerator/denominator are given separately.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Int int_pow(unsigned long base, unsigned long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline std::string to_decimal(const Int& v) { return v.get_str(); }
inline std::string to_decimal(const Rat& q) { return q.get_str(); }

} // namespace hypercycle
