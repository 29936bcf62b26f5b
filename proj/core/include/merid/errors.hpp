#pragma once

#include <stdexcept>
#include <string>

namespace merid {

/// Violated physical precondition or invariant (bad radius, Heisenberg
/// violation, protocol condition not met, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Numerical machinery failed to reach its tolerance (quadrature blow-up,
/// grid too small, ...). Carries diagnostics in the message.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace merid
