#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "field.hpp"
#include "series.hpp"

namespace sonnenschein {

/// What generated a matrix: a kind ("karamata", "sin2", "custom") and its
/// parameters in text form.
struct GeneratorInfo {
    std::string kind = "custom";
    std::map<std::string, std::string> parameters;

    friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

/// First N rows and K + 1 columns of a Sonnenschein matrix: row n holds the
/// coefficients of f(z)^n.
template <Field F>
class SummabilityMatrix {
public:
    using value_type = F;

    SummabilityMatrix(std::size_t rows, std::size_t cols, GeneratorInfo source = {})
        : rows_(rows), cols_(cols), entries_(rows * cols, field_traits<F>::zero()), source_(std::move(source)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const GeneratorInfo& source() const { return source_; }

    const F& operator()(std::size_t n, std::size_t k) const { return entries_.at(n * cols_ + k); }
    F& operator()(std::size_t n, std::size_t k) { return entries_.at(n * cols_ + k); }

    std::span<const F> row(std::size_t n) const {
        if (n >= rows_) throw std::out_of_range("matrix row out of range");
        return std::span<const F>(entries_).subspan(n * cols_, cols_);
    }

    template <typename Fn>
    auto map(Fn&& fn) const {
        using G = std::decay_t<decltype(fn(entries_[0]))>;
        SummabilityMatrix<G> out(rows_, cols_, source_);
        for (std::size_t n = 0; n < rows_; ++n)
            for (std::size_t k = 0; k < cols_; ++k) out(n, k) = fn((*this)(n, k));
        return out;
    }

    friend bool operator==(const SummabilityMatrix&, const SummabilityMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<F> entries_;
    GeneratorInfo source_;
};

/// Rows 0..num_rows-1 of the Sonnenschein matrix of f, with f.order() + 1
/// columns. Built incrementally: row n = row(n-1) * f.
template <Field F>
SummabilityMatrix<F> build_matrix(const TruncatedSeries<F>& f, std::size_t num_rows, GeneratorInfo source = {}) {
    if (num_rows == 0) throw std::invalid_argument("matrix needs at least one row");
    SummabilityMatrix<F> m(num_rows, f.order() + 1, std::move(source));
    auto power = TruncatedSeries<F>::one(f.order());
    for (std::size_t n = 0; n < num_rows; ++n) {
        if (n > 0) power = series_mul(power, f);
        for (std::size_t k = 0; k <= f.order(); ++k) m(n, k) = power[k];
    }
    return m;
}

/// t_n = sum_{k<=K} a_{n,k} s_k in double precision. The transform is
/// truncated at the matrix's last column, so it is approximate whenever the
/// rows have mass beyond column K.
template <Field F>
    requires NumericallyViewable<F>
std::vector<std::complex<double>> transform_sequence(const SummabilityMatrix<F>& m,
                                                     std::span<const std::complex<double>> s) {
    if (s.size() < m.cols()) throw std::invalid_argument("sequence shorter than matrix column count");
    std::vector<std::complex<double>> t(m.rows());
    for (std::size_t n = 0; n < m.rows(); ++n) {
        std::complex<double> acc{};
        for (std::size_t k = 0; k < m.cols(); ++k) acc += to_complex(m(n, k)) * s[k];
        t[n] = acc;
    }
    return t;
}

} // namespace sonnenschein
