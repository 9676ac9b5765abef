#ifndef ENTTRANSFER_ERRORS_HPP
#define ENTTRANSFER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace enttransfer {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The acceptor cannot absorb the requested entanglement without leaving
/// the [0, pi/4] parametrization.
class InfeasibleHeadroom : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed-form expression was requested at a point where it is singular.
class SingularPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The residual does not change sign over the search interval.
class BracketError : public std::runtime_error {
public:
    BracketError(const std::string& what, double lo, double hi, double f_lo, double f_hi)
        : std::runtime_error(what + " [f(" + std::to_string(lo) + ")=" + std::to_string(f_lo) +
                             ", f(" + std::to_string(hi) + ")=" + std::to_string(f_hi) + "]"),
          lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    double lo_, hi_, f_lo_, f_hi_;
};

/// Dilution into a product intermediate state (zero entanglement per copy).
class DegenerateDilution : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace enttransfer

#endif // ENTTRANSFER_ERRORS_HPP
