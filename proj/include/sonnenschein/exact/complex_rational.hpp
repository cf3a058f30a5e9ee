#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "rational.hpp"

namespace sonnenschein {

/// Element of the Gaussian rationals Q(i); exact field for the Karamata
/// parameters.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(long re) : re_(re) {}             // NOLINT(google-explicit-constructor)
    ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexRational from_string(std::string_view text);

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Rational norm() const { return re_ * re_ + im_ * im_; }
    ComplexRational conj() const { return {re_, -im_}; }

    ComplexRational inverse() const {
        if (is_zero()) throw division_by_zero();
        const Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// "re+im i" with both parts in rational text form, e.g. "1/2+0i" or "1/4-1/3i".
    std::string to_string() const {
        std::string s = re_.to_string();
        if (im_.sign() < 0)
            s += "-" + (-im_).to_string();
        else
            s += "+" + im_.to_string();
        return s + "i";
    }

    ComplexRational operator-() const { return {-re_, -im_}; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        if (im_.is_zero() && o.im_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o) { return *this *= o.inverse(); }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }

    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.to_string(); }

private:
    Rational re_;
    Rational im_;
};

/// Accepts "re", "im i", "re+im i", "re-im i" (whitespace-free), where re and
/// im are rationals; a bare "i" or "-i" means unit imaginary part.
inline ComplexRational ComplexRational::from_string(std::string_view text) {
    if (text.empty()) throw parse_error("empty complex value");
    if (text.back() != 'i') return ComplexRational(Rational::from_string(text));

    std::string_view body = text.substr(0, text.size() - 1);
    // The split point is the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t pos = body.size(); pos-- > 1;) {
        if (body[pos] == '+' || body[pos] == '-') {
            split = pos;
            break;
        }
    }
    const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

    std::string im_owned(im_text);
    if (im_owned.empty() || im_owned == "+" || im_owned == "-") im_owned += "1";
    try {
        Rational re = re_text.empty() ? Rational{} : Rational::from_string(re_text);
        return {std::move(re), Rational::from_string(im_owned)};
    } catch (const parse_error&) {
        throw parse_error("not a complex rational: '" + std::string(text) + "'");
    }
}

} // namespace sonnenschein
