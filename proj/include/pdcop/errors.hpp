#pragma once

#include <stdexcept>
#include <string>

namespace pdcop {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An iterative method failed to reach its tolerance.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// (lambda, dimension) pair that does not define a valid copula.
class ValidityError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The density is not defined at the requested point (on or inside the zero set).
class UndefinedDensityError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Parameter estimation failed, e.g. the sample tau is unattainable for a family.
class FitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or missing input data.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace pdcop
