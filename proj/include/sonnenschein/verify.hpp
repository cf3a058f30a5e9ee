#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "series.hpp"

namespace sonnenschein {

/// Column sums of the Sonnenschein matrix of f, read off as the Taylor
/// coefficients of 1/(1 - f). Formal: valid whenever f(0) != 1; they are the
/// actual column-sum limits only in the convergent regime (see
/// constant_term_in_unit_disk and verify_column_sums).
template <Field F>
std::vector<F> column_sums_via_series(const TruncatedSeries<F>& f) {
    const auto g = geom_inverse(f);
    return {g.coeffs().begin(), g.coeffs().end()};
}

/// Numeric |f(0)| < 1 check.
template <Field F>
    requires NumericallyViewable<F>
bool constant_term_in_unit_disk(const TruncatedSeries<F>& f) {
    return std::abs(to_complex(f[0])) < 1.0;
}

struct ColumnRecord {
    std::size_t column = 0;
    std::complex<double> predicted;
    std::complex<double> partial_sum;
    double deviation = 0.0;  // |partial_sum - predicted|; NaN if either overflowed
    bool converged = false;  // deviation <= tolerance
};

struct VerificationReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double tolerance = 0.0;
    std::vector<ColumnRecord> columns;

    bool all_converged() const {
        for (const auto& c : columns)
            if (!c.converged) return false;
        return true;
    }
    double max_deviation() const {
        double worst = 0.0;
        for (const auto& c : columns) {
            if (std::isnan(c.deviation)) return c.deviation;
            worst = std::max(worst, c.deviation);
        }
        return worst;
    }
};

/// Compares the partial column sums sum_{n<N} a_{n,k}, accumulated in double
/// precision, with predicted[k] for every matrix column k. Non-convergence is
/// reported, not thrown. predicted must cover every matrix column.
template <Field F, typename P>
    requires NumericallyViewable<F> && NumericallyViewable<P>
VerificationReport verify_column_sums(const SummabilityMatrix<F>& m, std::span<const P> predicted, double tolerance) {
    if (predicted.size() < m.cols()) throw std::invalid_argument("fewer predicted column sums than matrix columns");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    VerificationReport report{m.rows(), m.cols(), tolerance, {}};
    report.columns.reserve(m.cols());
    for (std::size_t k = 0; k < m.cols(); ++k) {
        std::complex<double> partial{};
        for (std::size_t n = 0; n < m.rows(); ++n) partial += to_complex(m(n, k));
        const std::complex<double> expected = to_complex(predicted[k]);
        const double deviation = std::abs(partial - expected);
        report.columns.push_back({k, expected, partial, deviation, deviation <= tolerance});
    }
    return report;
}

template <Field F, typename P>
    requires NumericallyViewable<F> && NumericallyViewable<P>
VerificationReport verify_column_sums(const SummabilityMatrix<F>& m, const std::vector<P>& predicted, double tolerance) {
    return verify_column_sums(m, std::span<const P>(predicted), tolerance);
}

} // namespace sonnenschein
