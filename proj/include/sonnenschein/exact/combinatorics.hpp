#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace sonnenschein {

inline big_int factorial(unsigned long n) {
    big_int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Generalized binomial coefficient, total over signed arguments:
/// zero for j < 0, one for j = 0, and m(m-1)...(m-j+1)/j! otherwise.
/// binomial(-1, j) = (-1)^j, binomial(3, 5) = 0.
inline Rational binomial(std::int64_t m, std::int64_t j) {
    if (j < 0) return Rational{};
    if (j == 0) return Rational{1};
    if (m >= 0) {
        if (m < j) return Rational{};
        big_int r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
        return Rational(r);
    }
    // C(m, j) = (-1)^j C(j - m - 1, j) for negative m.
    big_int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(j - m - 1), static_cast<unsigned long>(j));
    if (j % 2 != 0) r = -r;
    return Rational(r);
}

/// x^n for n >= 0 in any multiplicative monoid with unit T{1}; 0^0 = 1.
template <typename T>
T ipow(T base, unsigned long n) {
    T result{1};
    while (n != 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n != 0) base *= base;
    }
    return result;
}

/// Bernoulli number B_n by the explicit double sum
///
///   B_n = sum_{k=0}^{n} 1/(k+1) sum_{r=0}^{k} (-1)^r C(k,r) r^n,
///
/// with 0^0 = 1. This yields the B_1 = -1/2 convention.
/// O(n^2) big-integer operations.
inline Rational bernoulli(unsigned n) {
    Rational total;
    big_int power;
    for (unsigned long k = 0; k <= n; ++k) {
        big_int inner = 0;
        big_int choose = 1;  // C(k, r), updated incrementally
        for (unsigned long r = 0; r <= k; ++r) {
            mpz_ui_pow_ui(power.get_mpz_t(), r, n);  // GMP gives 0^0 = 1
            if (r % 2 == 0)
                inner += choose * power;
            else
                inner -= choose * power;
            choose = choose * (k - r) / (r + 1);
        }
        total += Rational(inner, big_int(static_cast<unsigned long>(k + 1)));
    }
    return total;
}

/// Bernoulli numbers B_0..B_n by the recurrence
/// B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j, B_0 = 1. Same convention as bernoulli().
inline std::vector<Rational> bernoulli_table(unsigned n) {
    std::vector<Rational> b;
    b.reserve(n + 1);
    b.emplace_back(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[j];
        b.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
    return b;
}

inline Rational bernoulli_recurrence(unsigned n) { return bernoulli_table(n).back(); }

} // namespace sonnenschein
