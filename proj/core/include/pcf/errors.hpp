#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class WindowError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double err_estimate, long evaluations)
        : std::runtime_error(what), err_estimate_(err_estimate), evaluations_(evaluations) {}
    double err_estimate() const { return err_estimate_; }
    long evaluations() const { return evaluations_; }

private:
    double err_estimate_;
    long evaluations_;
};

class TraceError : public std::runtime_error {
public:
    TraceError(const std::string& what, double worst_residual)
        : std::runtime_error(what), worst_residual_(worst_residual) {}
    double worst_residual() const { return worst_residual_; }

private:
    double worst_residual_;
};

}  // namespace pcf
