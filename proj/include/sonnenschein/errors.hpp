#pragma once

#include <stdexcept>
#include <string>

namespace sonnenschein {

// Raised when dividing or inverting an exact zero.
class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("division by zero") {}
};

// The generating function hits a pole where a closed form needs it finite
// (alpha = 1 for the Karamata column sums, beta = 1 for the Karamata kernel,
// f(0) = 1 for the geometric inverse).
class pole_error : public std::domain_error {
public:
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Two pi-graded values of different grades were added.
class grade_mismatch : public std::logic_error {
public:
    grade_mismatch(long lhs, long rhs)
        : std::logic_error("pi-graded addition across grades " + std::to_string(lhs) + " and " +
                           std::to_string(rhs)) {}
};

// Text that does not parse as an exact value.
class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace sonnenschein
