#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stochloc {

enum class ErrorKind {
    NotSquare,
    NonFinite,
    NegativeEntry,
    RowSumViolation,
    IndexOutOfRange,
    OrderTooSmall,
    ComplexCenters,
    VertexOutOfRange,
    Disconnected,
    IsolatedVertex,
    NotRegular,
    NoEdges,
    InvalidGraph,
    NotSymmetric,
    NoConvergence,
    PerronNotFound,
    InvalidArgument,
    Parse,
};

/// Base of every error thrown by the library. `kind()` identifies the
/// failure class; the message carries 1-based indices where relevant.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Numerical failures (non-convergence) are internal; everything else
    /// is a problem with the input.
    bool is_input_error() const noexcept { return kind_ != ErrorKind::NoConvergence; }

private:
    ErrorKind kind_;
};

class NegativeEntryError : public Error {
public:
    NegativeEntryError(std::size_t row, std::size_t col, double value)
        : Error(ErrorKind::NegativeEntry,
                "negative entry at (" + std::to_string(row) + ", " + std::to_string(col) +
                    "): " + std::to_string(value)),
          row_(row), col_(col), value_(value) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }
    double value() const noexcept { return value_; }

private:
    std::size_t row_, col_;
    double value_;
};

class RowSumError : public Error {
public:
    RowSumError(std::size_t row, double sum)
        : Error(ErrorKind::RowSumViolation,
                "row " + std::to_string(row) + " sums to " + std::to_string(sum)),
          row_(row), sum_(sum) {}

    std::size_t row() const noexcept { return row_; }
    double sum() const noexcept { return sum_; }

private:
    std::size_t row_;
    double sum_;
};

class NoConvergenceError : public Error {
public:
    explicit NoConvergenceError(std::size_t iterations)
        : Error(ErrorKind::NoConvergence,
                "eigensolver did not converge after " + std::to_string(iterations) + " iterations"),
          iterations_(iterations) {}

    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::size_t iterations_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg), line_(line) {}

    /// 1-based line number; 0 means end of input.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace stochloc
