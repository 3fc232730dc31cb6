#ifndef BGKJUMP_ERRORS_HPP
#define BGKJUMP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bgkjump {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid construction parameters (node counts, map scales, truncation orders, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Argument outside the mathematical domain of an operation (moment index, q outside (0,1], ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An integrand evaluated to a non-finite value at a quadrature node.
class IntegrandError : public Error {
public:
    IntegrandError(const std::string& what, double node)
        : Error(what), node_(node) {}
    double node() const { return node_; }

private:
    double node_;
};

/// A 2x2 solve encountered a determinant below the conditioning floor.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, double det)
        : Error(what), det_(det) {}
    double det() const { return det_; }

private:
    double det_;
};

/// The fixed-point iteration failed to reach the requested tolerance.
class DivergenceError : public Error {
public:
    DivergenceError(const std::string& what, std::vector<double> history)
        : Error(what), history_(std::move(history)) {}
    const std::vector<double>& residual_history() const { return history_; }

private:
    std::vector<double> history_;
};

} // namespace bgkjump

#endif
