#pragma once

#include <complex>
#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact/combinatorics.hpp"
#include "exact/complex_rational.hpp"
#include "matrix.hpp"
#include "series.hpp"

namespace sonnenschein {

/// Parameters of the Karamata kernel f(z) = (alpha + (1 - alpha - beta) z) / (1 - beta z).
/// beta = 1 is rejected at construction.
class KaramataParams {
public:
    KaramataParams(ComplexRational alpha, ComplexRational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (beta_ == ComplexRational{1}) throw pole_error("Karamata kernel undefined for beta = 1");
    }

    const ComplexRational& alpha() const { return alpha_; }
    const ComplexRational& beta() const { return beta_; }

    /// |alpha| < 1 and |beta| < 1, decided exactly on the squared moduli.
    /// Gates convergence claims, not formal computation.
    bool analytic_regime() const { return alpha_.norm() < Rational{1} && beta_.norm() < Rational{1}; }

    GeneratorInfo describe() const {
        return {"karamata", {{"alpha", alpha_.to_string()}, {"beta", beta_.to_string()}}};
    }

private:
    ComplexRational alpha_;
    ComplexRational beta_;
};

/// Taylor coefficients of the Karamata kernel: c_0 = alpha and
/// c_k = (1 - alpha - beta) beta^{k-1} + alpha beta^k for k >= 1.
inline TruncatedSeries<ComplexRational> karamata_series(const KaramataParams& p, std::size_t order) {
    const ComplexRational& a = p.alpha();
    const ComplexRational& b = p.beta();
    const ComplexRational lin = ComplexRational{1} - a - b;
    TruncatedSeries<ComplexRational> f(order);
    f[0] = a;
    ComplexRational beta_pow{1};  // beta^{k-1}
    for (std::size_t k = 1; k <= order; ++k) {
        f[k] = lin * beta_pow + a * (beta_pow * b);
        beta_pow *= b;
    }
    return f;
}

/// Closed-form entry
///   f_{n,k} = sum_{v=0}^{k} C(n,v) (1-alpha-beta)^v alpha^{n-v} C(n+k-v-1, k-v) beta^{k-v}.
/// Terms with v > n vanish through C(n, v); row 0 relies on C(-1, 0) = 1.
inline ComplexRational karamata_entry(const KaramataParams& p, unsigned n, unsigned k) {
    const ComplexRational lin = ComplexRational{1} - p.alpha() - p.beta();
    ComplexRational total;
    for (unsigned v = 0; v <= k && v <= n; ++v) {
        const Rational c1 = binomial(n, v);
        const Rational c2 = binomial(static_cast<std::int64_t>(n) + k - v - 1, k - v);
        if (c2.is_zero()) continue;
        ComplexRational term = ipow(lin, v) * ipow(p.alpha(), n - v) * ipow(p.beta(), k - v);
        term *= ComplexRational(c1 * c2);
        total += term;
    }
    return total;
}

/// Matrix of closed-form entries, num_rows by num_cols.
inline SummabilityMatrix<ComplexRational> karamata_closed_form_matrix(const KaramataParams& p, std::size_t num_rows,
                                                                      std::size_t num_cols) {
    SummabilityMatrix<ComplexRational> m(num_rows, num_cols, p.describe());
    for (std::size_t n = 0; n < num_rows; ++n)
        for (std::size_t k = 0; k < num_cols; ++k)
            m(n, k) = karamata_entry(p, static_cast<unsigned>(n), static_cast<unsigned>(k));
    return m;
}

/// Closed-form column sums [1/(1-alpha), (1-beta)/(1-alpha), (1-beta)/(1-alpha), ...]
/// of length num_cols: the Taylor coefficients of 1/(1 - f). They equal the
/// limits of the column partial sums when |alpha| < 1.
inline std::vector<ComplexRational> karamata_column_sums(const KaramataParams& p, std::size_t num_cols) {
    const ComplexRational one_minus_alpha = ComplexRational{1} - p.alpha();
    if (one_minus_alpha.is_zero()) throw pole_error("Karamata column sums have a pole at alpha = 1");
    const ComplexRational first = one_minus_alpha.inverse();
    const ComplexRational rest = (ComplexRational{1} - p.beta()) * first;
    std::vector<ComplexRational> sums;
    sums.reserve(num_cols);
    for (std::size_t k = 0; k < num_cols; ++k) sums.push_back(k == 0 ? first : rest);
    return sums;
}

} // namespace sonnenschein
