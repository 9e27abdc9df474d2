#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatgi {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_mismatch : public error {
public:
    using error::error;
};

class not_square : public dimension_mismatch {
public:
    using dimension_mismatch::dimension_mismatch;
};

class zero_divisor : public error {
public:
    zero_divisor() : error("division by the zero quaternion") {}
};

class singular_matrix : public error {
public:
    using error::error;
};

class not_hermitian : public error {
public:
    using error::error;
};

/// A route was pinned whose hypotheses do not hold for the given data.
class route_inapplicable : public error {
public:
    using error::error;
};

/// The factorial determinant engine refused a matrix larger than the cap.
class size_cap_exceeded : public error {
public:
    size_cap_exceeded(std::size_t order, std::size_t cap)
        : error("determinant order " + std::to_string(order) + " exceeds the configured cap " +
                std::to_string(cap)),
          order_(order),
          cap_(cap) {}

    std::size_t order() const noexcept { return order_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t order_;
    std::size_t cap_;
};

class non_real_entry : public error {
public:
    using error::error;
};

/// An invariant of the algorithms was violated (e.g. a Hermitian determinant with an
/// imaginary residue). Always a bug, never a property of the input.
class internal_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace quatgi
