#pragma once

#include <stdexcept>
#include <string>

namespace diskspec {

/// Invalid numerical parameter (Jacobi exponents, grid sizes, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain where an operator or function is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operator product whose inner (k,m) spaces do not agree.
class CompositionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A pivot vanished during a banded or dense factorisation.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, long pivot)
        : std::runtime_error(what), pivot_(pivot) {}
    long pivot() const noexcept { return pivot_; }

private:
    long pivot_;
};

/// Neumann-type recombination on a mode the boundary row cannot determine.
class GaugeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Iterative or LAPACK routine failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace diskspec
