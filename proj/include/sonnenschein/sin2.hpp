#pragma once

#include <cstddef>
#include <vector>

#include "exact/combinatorics.hpp"
#include "exact/pi_graded.hpp"
#include "matrix.hpp"
#include "series.hpp"

namespace sonnenschein {

inline GeneratorInfo sin2_info() { return {"sin2", {}}; }

/// Taylor coefficients of h(z) = sin^2(pi z / 2) = (1 - cos(pi z)) / 2.
/// The z^{2m} coefficient (m >= 1) is (-1)^{m+1} pi^{2m} / (2 (2m)!); the
/// constant and odd coefficients vanish. The z^j coefficient has grade j.
inline TruncatedSeries<PiGradedValue> sin2_series(std::size_t order) {
    TruncatedSeries<PiGradedValue> h(order);
    for (std::size_t m = 1; 2 * m <= order; ++m) {
        Rational q(big_int(1), 2 * factorial(2 * m));
        if (m % 2 == 0) q = -q;
        h[2 * m] = PiGradedValue(q, static_cast<unsigned>(2 * m));
    }
    return h;
}

/// Coefficient of z^power in h(z)^n from the power-reduction identity
///
///   sin^{2n} x = 4^{-n} [C(2n,n) + 2 sum_{r<n} (-1)^{n-r} C(2n,r) cos(2(n-r)x)].
///
/// For power = 2k >= 2 this is
///   pi^{2k} sum_{r=0}^{n-1} (-1)^{n+r+k} (n-r)^{2k} C(2n,r) / (2^{2n-1} (2k)!),
/// and for power 0 it is C(2n,n)/4^n + sum_{r<n} (-1)^{n+r} C(2n,r) / 2^{2n-1},
/// which is identically zero for n >= 1. Row 0 is the identity row and odd
/// powers are zero.
inline PiGradedValue sin2_entry_closed_form(unsigned n, unsigned power) {
    if (n == 0) return PiGradedValue(power == 0 ? 1 : 0);
    if (power % 2 != 0) return {};
    const unsigned k = power / 2;
    const Rational two_pow(big_int(1) << (2 * n - 1));

    Rational sum;
    if (k == 0) sum = binomial(2 * n, n) / (two_pow * Rational{2});
    for (unsigned r = 0; r < n; ++r) {
        big_int dist_pow;
        mpz_ui_pow_ui(dist_pow.get_mpz_t(), n - r, 2UL * k);
        Rational term = binomial(2 * n, r) * Rational(dist_pow) / two_pow;
        if ((n + r + k) % 2 != 0) term = -term;
        sum += term;
    }
    return PiGradedValue(sum / Rational(factorial(2 * k)), power);
}

/// Closed-form even-column sums of the sin^2 matrix: the z^{2n} coefficient
/// of sec^2(pi z / 2) = 1/(1 - h(z)),
///   (-1)^n (8n+4) (2^{2n+2} - 1) B_{2n+2} pi^{2n} / (2n+2)!,
/// for n = 0..count-1.
inline std::vector<PiGradedValue> sec2_column_sums(std::size_t count) {
    std::vector<PiGradedValue> sums;
    sums.reserve(count);
    for (unsigned n = 0; n < count; ++n) {
        const big_int lin = 8 * n + 4;
        const big_int mersenne = (big_int(1) << (2 * n + 2)) - 1;
        Rational q = Rational(lin * mersenne) * bernoulli(2 * n + 2) / Rational(factorial(2 * n + 2));
        if (n % 2 != 0) q = -q;
        sums.emplace_back(q, 2 * n);
    }
    return sums;
}

/// sec2_column_sums spread over every column 0..num_cols-1; odd columns sum to 0.
inline std::vector<PiGradedValue> sec2_column_sums_by_column(std::size_t num_cols) {
    const auto even = sec2_column_sums((num_cols + 1) / 2);
    std::vector<PiGradedValue> sums(num_cols);
    for (std::size_t k = 0; k < num_cols; k += 2) sums[k] = even[k / 2];
    return sums;
}

/// Matrix of sin^2 entries from the closed form, N rows by num_cols columns.
inline SummabilityMatrix<PiGradedValue> sin2_closed_form_matrix(std::size_t num_rows, std::size_t num_cols) {
    SummabilityMatrix<PiGradedValue> m(num_rows, num_cols, sin2_info());
    for (std::size_t n = 0; n < num_rows; ++n)
        for (std::size_t k = 0; k < num_cols; ++k)
            m(n, k) = sin2_entry_closed_form(static_cast<unsigned>(n), static_cast<unsigned>(k));
    return m;
}

} // namespace sonnenschein
