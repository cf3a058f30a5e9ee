#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "exact/complex_rational.hpp"
#include "exact/pi_graded.hpp"
#include "exact/rational.hpp"

namespace sonnenschein::io {

// Representation tags carried by every serialized numeric value.
inline constexpr std::string_view tag_rational = "exact-rational";
inline constexpr std::string_view tag_complex = "exact-complex-rational";
inline constexpr std::string_view tag_pi_graded = "pi-graded";
inline constexpr std::string_view tag_float = "float";

inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Decimal text of a complex double; the imaginary part is omitted when zero.
inline std::string format_complex(std::complex<double> z) {
    if (z.imag() == 0.0) return format_double(z.real());
    const std::string im = format_double(z.imag());
    return format_double(z.real()) + (im.front() == '-' || im.front() == 'n' ? "" : "+") + im + "i";
}

inline double parse_double(std::string_view text) {
    const std::string owned(text);
    char* end = nullptr;
    const double x = std::strtod(owned.c_str(), &end);
    if (owned.empty() || end != owned.c_str() + owned.size()) throw parse_error("not a number: '" + owned + "'");
    return x;
}

inline std::complex<double> parse_complex(std::string_view text) {
    if (text.empty() || text.back() != 'i' || text == "inf" || text == "-inf") return {parse_double(text), 0.0};
    const std::string_view body = text.substr(0, text.size() - 1);
    for (std::size_t pos = body.size(); pos-- > 1;) {
        // Skip exponent signs such as "1e-05".
        if ((body[pos] == '+' || body[pos] == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E')
            return {parse_double(body.substr(0, pos)), parse_double(body.substr(pos))};
    }
    return {0.0, parse_double(body)};
}

// Human-readable text, as used in CSV cells.
inline std::string plain_text(const Rational& x) { return x.to_string(); }
inline std::string plain_text(const ComplexRational& x) { return x.to_string(); }
inline std::string plain_text(const PiGradedValue& x) { return x.to_display_string(); }
inline std::string plain_text(std::complex<double> x) { return format_complex(x); }

// Lossless tagged text, as used in JSON payloads: "<tag>:<value>".
inline std::string tagged(const Rational& x) { return std::string(tag_rational) + ":" + x.to_string(); }
inline std::string tagged(const ComplexRational& x) { return std::string(tag_complex) + ":" + x.to_string(); }
inline std::string tagged(const PiGradedValue& x) { return std::string(tag_pi_graded) + ":" + x.to_string(); }
inline std::string tagged(std::complex<double> x) { return std::string(tag_float) + ":" + format_complex(x); }
inline std::string tagged_float(double x) { return std::string(tag_float) + ":" + format_double(x); }

namespace detail {

inline std::string_view untag(std::string_view text, std::string_view tag) {
    if (text.size() <= tag.size() || text.substr(0, tag.size()) != tag || text[tag.size()] != ':')
        throw parse_error("expected a '" + std::string(tag) + "' value, got '" + std::string(text) + "'");
    return text.substr(tag.size() + 1);
}

} // namespace detail

template <typename T>
T from_tagged(std::string_view text);

template <>
inline Rational from_tagged<Rational>(std::string_view text) {
    return Rational::from_string(detail::untag(text, tag_rational));
}
template <>
inline ComplexRational from_tagged<ComplexRational>(std::string_view text) {
    return ComplexRational::from_string(detail::untag(text, tag_complex));
}
template <>
inline PiGradedValue from_tagged<PiGradedValue>(std::string_view text) {
    return PiGradedValue::from_string(detail::untag(text, tag_pi_graded));
}
template <>
inline std::complex<double> from_tagged<std::complex<double>>(std::string_view text) {
    return parse_complex(detail::untag(text, tag_float));
}

/// Tag of a tagged value string.
inline std::string_view tag_of(std::string_view text) { return text.substr(0, text.find(':')); }

} // namespace sonnenschein::io
