#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "../errors.hpp"

namespace sonnenschein {

using big_int = mpz_class;

/// Exact rational number in canonical form: the denominator is positive and
/// coprime to the numerator, so equal values have identical fields.
///
/// Backed by GMP's mpq_t; every mutating path ends in canonicalize().
class Rational {
public:
    Rational() = default;
    Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const big_int& n) : value_(n) {}
    Rational(const big_int& num, const big_int& den) {
        if (den == 0) throw division_by_zero();
        value_.get_num() = num;
        value_.get_den() = den;
        value_.canonicalize();
    }

    static Rational from_string(std::string_view text);

    big_int numerator() const { return value_.get_num(); }
    big_int denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    double to_double() const { return value_.get_d(); }
    std::string to_string() const { return value_.get_str(); }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        Rational r;
        mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

/// Parses "p", "p/q", "-p/q" or "+p/q" with decimal digits. Non-canonical
/// input such as "2/4" is accepted and reduced.
inline Rational Rational::from_string(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    const std::string_view num_text = s.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!detail::all_digits(num_text) || !detail::all_digits(den_text))
        throw parse_error("not a rational: '" + std::string(text) + "'");
    big_int num(std::string(num_text), 10);
    const big_int den(std::string(den_text), 10);
    if (den == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

} // namespace sonnenschein

template <>
struct std::hash<sonnenschein::Rational> {
    std::size_t operator()(const sonnenschein::Rational& r) const { return std::hash<std::string>{}(r.to_string()); }
};
