#pragma once

#include <stdexcept>
#include <string>

namespace cyclemax {

// Bad arguments: out-of-range parameters, malformed specs, parse failures.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is valid but larger than an exhaustive routine is willing to handle.
class SizeGuardError : public DomainError {
public:
    using DomainError::DomainError;
};

// A log-space formula was asked for a point outside the range it is valid on.
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

}
