#pragma once

#include <stdexcept>
#include <string>

namespace sigmaevo {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Argument valid in principle but outside what the algorithm supports.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

// Invalid parameter combination or malformed run configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Too few samples for a discrete operator.
class LengthError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Numerical failure inside an iterative or quadrature routine.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void warn(const std::string& msg);

}  // namespace sigmaevo
