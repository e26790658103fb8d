#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridzero {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract violations on polynomial inputs.
struct ZeroPolynomialError : Error {
    ZeroPolynomialError() : Error("operation requires a nonzero polynomial") {}
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};
struct ZeroDivisorError : Error {
    ZeroDivisorError() : Error("division by the zero polynomial") {}
};
struct BothZeroError : Error {
    BothZeroError() : Error("gcd of two zero polynomials is undefined") {}
};
struct ConstantInputError : Error {
    ConstantInputError() : Error("operation requires a nonconstant polynomial") {}
};
struct ConstantDivisorError : Error {
    ConstantDivisorError() : Error("divisor polynomial must be nonconstant") {}
};
struct NotSquarefreeError : Error {
    explicit NotSquarefreeError(const std::string& which)
        : Error("polynomial " + which + " is not squarefree") {}
};
struct MissingVariableError : Error {
    explicit MissingVariableError(char var)
        : Error(std::string("no value assigned to variable ") + var) {}
};
struct VariableDomainError : Error {
    explicit VariableDomainError(const std::string& what) : Error(what) {}
};

// Grid-witness preconditions.
struct GridNotContainedError : Error {
    explicit GridNotContainedError(const std::string& what) : Error(what) {}
};
struct GridTooSmallError : Error {
    explicit GridTooSmallError(const std::string& what) : Error(what) {}
};

// Search budget exhausted; results would be silently partial otherwise.
struct ComplexityGuardError : Error {
    explicit ComplexityGuardError(const std::string& what) : Error(what) {}
};

// Text input errors carry a position.
struct SyntaxError : Error {
    std::size_t line, column;
    SyntaxError(std::size_t line_, std::size_t col_, const std::string& what)
        : Error("syntax error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + what),
          line(line_), column(col_) {}
};
struct UnknownVariableError : SyntaxError {
    UnknownVariableError(std::size_t line_, std::size_t col_, const std::string& name)
        : SyntaxError(line_, col_, "unknown variable '" + name + "' (expected one of x, y, s, t)") {}
};
struct ParseError : Error {
    std::size_t row, column;
    ParseError(std::size_t row_, std::size_t col_, const std::string& what)
        : Error("row " + std::to_string(row_) + ", col " + std::to_string(col_) + ": " + what),
          row(row_), column(col_) {}
};
struct DuplicatePointError : Error {
    std::size_t row;
    explicit DuplicatePointError(std::size_t row_, const std::string& what)
        : Error(what), row(row_) {}
};

}  // namespace gridzero
