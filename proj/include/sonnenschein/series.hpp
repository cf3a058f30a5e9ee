#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace sonnenschein {

class order_mismatch : public std::invalid_argument {
public:
    order_mismatch(std::size_t a, std::size_t b)
        : std::invalid_argument("series truncation orders differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// Formal power series c_0 + c_1 z + ... + c_K z^K over F, exact through
/// degree K; anything above K is dropped. Always holds exactly K + 1
/// coefficients.
template <Field F>
class TruncatedSeries {
public:
    using value_type = F;

    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, field_traits<F>::zero()) {}

    /// Pads with zeros up to the order; throws std::invalid_argument if
    /// values is empty or longer than order + 1.
    static TruncatedSeries from_coeffs(std::vector<F> values, std::size_t order) {
        if (values.empty()) throw std::invalid_argument("series needs at least one coefficient");
        if (values.size() > order + 1)
            throw std::invalid_argument(std::to_string(values.size()) + " coefficients exceed truncation order " +
                                        std::to_string(order));
        values.resize(order + 1, field_traits<F>::zero());
        TruncatedSeries s(0);
        s.coeffs_ = std::move(values);
        return s;
    }
    static TruncatedSeries from_coeffs(std::initializer_list<F> values, std::size_t order) {
        return from_coeffs(std::vector<F>(values), order);
    }

    static TruncatedSeries constant(F c, std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    static TruncatedSeries one(std::size_t order) { return constant(field_traits<F>::one(), order); }

    /// The series z (just 0 at order 0).
    static TruncatedSeries identity(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1) s.coeffs_[1] = field_traits<F>::one();
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const F& operator[](std::size_t j) const { return coeffs_.at(j); }
    F& operator[](std::size_t j) { return coeffs_.at(j); }
    std::span<const F> coeffs() const { return coeffs_; }

    /// Same series cut down to a lower order.
    TruncatedSeries truncate(std::size_t new_order) const {
        if (new_order > order()) throw std::invalid_argument("truncate cannot raise the order");
        return from_coeffs(std::vector<F>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order) + 1),
                           new_order);
    }

    /// Coefficient-wise image under a field map, e.g. exact -> complex<double>.
    template <typename Fn>
    auto map(Fn&& fn) const {
        using G = std::decay_t<decltype(fn(coeffs_[0]))>;
        std::vector<G> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(fn(c));
        return TruncatedSeries<G>::from_coeffs(std::move(out), order());
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        check_order(o);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
        return *this;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    void check_order(const TruncatedSeries& o) const {
        if (order() != o.order()) throw order_mismatch(order(), o.order());
    }

private:
    std::vector<F> coeffs_;
};

/// Cauchy product c_j = sum_{i<=j} a_i b_{j-i}, j <= K.
template <Field F>
TruncatedSeries<F> series_mul(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
    a.check_order(b);
    const std::size_t order = a.order();
    TruncatedSeries<F> c(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (field_traits<F>::is_zero(a[i])) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (field_traits<F>::is_zero(b[j])) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

template <Field F>
TruncatedSeries<F> operator*(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b) {
    return series_mul(a, b);
}

/// f^n by repeated squaring; f^0 is the constant series 1.
template <Field F>
TruncatedSeries<F> series_pow(TruncatedSeries<F> f, unsigned long n) {
    auto result = TruncatedSeries<F>::one(f.order());
    while (n != 0) {
        if (n & 1U) result = series_mul(result, f);
        n >>= 1U;
        if (n != 0) f = series_mul(f, f);
    }
    return result;
}

/// g = 1/(1 - f) via g_0 = 1/(1 - f_0), g_j = (sum_{i=1}^{j} f_i g_{j-i}) / (1 - f_0).
/// Throws pole_error when f_0 = 1.
template <Field F>
TruncatedSeries<F> geom_inverse(const TruncatedSeries<F>& f) {
    const F lead = field_traits<F>::one() - f[0];
    if (field_traits<F>::is_zero(lead)) throw pole_error("1/(1 - f) needs f(0) != 1");
    const F scale = field_traits<F>::inverse(lead);
    TruncatedSeries<F> g(f.order());
    g[0] = scale;
    for (std::size_t j = 1; j <= f.order(); ++j) {
        F acc = field_traits<F>::zero();
        for (std::size_t i = 1; i <= j; ++i) {
            if (field_traits<F>::is_zero(f[i]) || field_traits<F>::is_zero(g[j - i])) continue;
            acc += f[i] * g[j - i];
        }
        g[j] = acc * scale;
    }
    return g;
}

/// Horner evaluation of the truncated polynomial in double precision.
/// Approximate by nature.
template <Field F>
    requires NumericallyViewable<F>
std::complex<double> eval_numeric(const TruncatedSeries<F>& f, std::complex<double> z) {
    std::complex<double> acc{};
    for (std::size_t j = f.order() + 1; j-- > 0;) acc = acc * z + to_complex(f[j]);
    return acc;
}

/// The same series with coefficients viewed as complex doubles.
template <Field F>
    requires NumericallyViewable<F>
TruncatedSeries<std::complex<double>> to_numeric(const TruncatedSeries<F>& f) {
    return f.map([](const F& c) { return to_complex(c); });
}

} // namespace sonnenschein
