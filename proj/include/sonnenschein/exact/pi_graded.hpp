#pragma once

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "rational.hpp"

namespace sonnenschein {

/// Exact value q * pi^grade.
///
/// Zero is grade-free: it is stored with grade 0 and adds to any grade.
/// Adding two nonzero values of different grades throws grade_mismatch.
class PiGradedValue {
public:
    PiGradedValue() = default;
    PiGradedValue(long q) : q_(q) {}  // NOLINT(google-explicit-constructor)
    PiGradedValue(Rational q, unsigned grade = 0) : q_(std::move(q)), grade_(grade) { normalize(); }

    static PiGradedValue from_string(std::string_view text);

    const Rational& coefficient() const { return q_; }
    unsigned grade() const { return grade_; }
    bool is_zero() const { return q_.is_zero(); }

    double to_double() const { return q_.to_double() * std::pow(std::numbers::pi, static_cast<double>(grade_)); }

    /// "q,grade", the lossless form.
    std::string to_string() const { return q_.to_string() + "," + std::to_string(grade_); }

    /// "q*pi^grade" ("q" for grade 0, "q*pi" for grade 1).
    std::string to_display_string() const {
        if (grade_ == 0 || is_zero()) return q_.to_string();
        if (grade_ == 1) return q_.to_string() + "*pi";
        return q_.to_string() + "*pi^" + std::to_string(grade_);
    }

    PiGradedValue inverse() const {
        if (grade_ != 0) throw std::domain_error("inverse of pi-graded value of positive grade " + std::to_string(grade_));
        return PiGradedValue(q_.inverse());
    }

    PiGradedValue operator-() const { return PiGradedValue(-q_, grade_); }

    PiGradedValue& operator+=(const PiGradedValue& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (grade_ != o.grade_) throw grade_mismatch(grade_, o.grade_);
        q_ += o.q_;
        normalize();
        return *this;
    }
    PiGradedValue& operator-=(const PiGradedValue& o) { return *this += -o; }
    PiGradedValue& operator*=(const PiGradedValue& o) {
        q_ *= o.q_;
        grade_ += o.grade_;
        normalize();
        return *this;
    }
    PiGradedValue& operator/=(const PiGradedValue& o) { return *this *= o.inverse(); }

    friend PiGradedValue operator+(PiGradedValue a, const PiGradedValue& b) { return a += b; }
    friend PiGradedValue operator-(PiGradedValue a, const PiGradedValue& b) { return a -= b; }
    friend PiGradedValue operator*(PiGradedValue a, const PiGradedValue& b) { return a *= b; }
    friend PiGradedValue operator/(PiGradedValue a, const PiGradedValue& b) { return a /= b; }

    friend bool operator==(const PiGradedValue&, const PiGradedValue&) = default;

    friend std::ostream& operator<<(std::ostream& os, const PiGradedValue& v) { return os << v.to_display_string(); }

private:
    void normalize() {
        if (q_.is_zero()) grade_ = 0;
    }

    Rational q_;
    unsigned grade_ = 0;
};

/// Accepts "q,grade" or "q*pi^grade" / "q*pi" / "q".
inline PiGradedValue PiGradedValue::from_string(std::string_view text) {
    auto parse_grade = [&](std::string_view g) -> unsigned {
        if (!detail::all_digits(g) || g.size() > 9) throw parse_error("bad pi grade in '" + std::string(text) + "'");
        return static_cast<unsigned>(std::stoul(std::string(g)));
    };
    if (const auto comma = text.find(','); comma != std::string_view::npos)
        return {Rational::from_string(text.substr(0, comma)), parse_grade(text.substr(comma + 1))};
    if (const auto star = text.find("*pi"); star != std::string_view::npos) {
        const std::string_view rest = text.substr(star + 3);
        if (rest.empty()) return {Rational::from_string(text.substr(0, star)), 1};
        if (rest.front() != '^') throw parse_error("bad pi-graded value '" + std::string(text) + "'");
        return {Rational::from_string(text.substr(0, star)), parse_grade(rest.substr(1))};
    }
    return PiGradedValue(Rational::from_string(text));
}

} // namespace sonnenschein
