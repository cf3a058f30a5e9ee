#pragma once

#include <complex>
#include <concepts>

#include "errors.hpp"
#include "exact/complex_rational.hpp"
#include "exact/pi_graded.hpp"
#include "exact/rational.hpp"

namespace sonnenschein {

/// Coefficient-field contract used by the series and matrix layers.
/// Specializations supply zero, one, inversion and a numeric view.
template <typename F>
struct field_traits {
    static F zero() { return F{}; }
    static F one() { return F{1}; }
    static F inverse(const F& x) { return x.inverse(); }
    static bool is_zero(const F& x) { return x.is_zero(); }
};

template <>
struct field_traits<std::complex<double>> {
    using value_type = std::complex<double>;
    static value_type zero() { return {}; }
    static value_type one() { return {1.0, 0.0}; }
    static value_type inverse(const value_type& x) {
        if (x == value_type{}) throw division_by_zero();
        return 1.0 / x;
    }
    static bool is_zero(const value_type& x) { return x == value_type{}; }
};

template <typename F>
concept Field = std::regular<F> && requires(F a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    a += b;
    a -= b;
    a *= b;
    { field_traits<F>::zero() } -> std::same_as<F>;
    { field_traits<F>::one() } -> std::same_as<F>;
    { field_traits<F>::inverse(b) } -> std::same_as<F>;
    { field_traits<F>::is_zero(b) } -> std::same_as<bool>;
};

// Numeric (approximate) views of exact values.
inline std::complex<double> to_complex(const Rational& x) { return {x.to_double(), 0.0}; }
inline std::complex<double> to_complex(const ComplexRational& x) { return x.to_complex(); }
inline std::complex<double> to_complex(const PiGradedValue& x) { return {x.to_double(), 0.0}; }
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }

template <typename F>
concept NumericallyViewable = requires(const F& x) {
    { to_complex(x) } -> std::same_as<std::complex<double>>;
};

} // namespace sonnenschein
