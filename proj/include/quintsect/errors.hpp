#ifndef QUINTSECT_ERRORS_HPP
#define QUINTSECT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quintsect {

// Gamma (or a gamma quotient) evaluated at a nonpositive integer where the
// value is a genuine pole. Callers with a finite branch for the same inputs
// must take that branch instead of calling into gamma.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Gamma quotient with poles in both numerator and denominator and no exact
// integer branch to fall back on.
class UndefinedQuotientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A parameter list violates one of its invariants (zero weight, denominator
// parameter at a nonpositive integer, ...).
class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation point lies outside the convergence domain of a representation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace quintsect

#endif
