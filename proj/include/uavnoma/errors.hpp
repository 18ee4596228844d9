#pragma once

#include <stdexcept>
#include <string>

namespace uavnoma {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A series or quadrature failed to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double achieved_error)
        : std::runtime_error(what + " (achieved error estimate " + std::to_string(achieved_error) + ")"),
          achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// A configured combinatorial cap was exceeded.
class LimitError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace uavnoma
