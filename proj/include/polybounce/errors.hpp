#ifndef POLYBOUNCE_ERRORS_HPP
#define POLYBOUNCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polybounce {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Problem size beyond what the numerics are validated for.
class UnsupportedScale : public std::runtime_error {
public:
    explicit UnsupportedScale(const std::string& what)
        : std::runtime_error("unsupported-scale: " + what) {}
};

// Root bracketing, iteration or convergence failure.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polybounce

#endif
