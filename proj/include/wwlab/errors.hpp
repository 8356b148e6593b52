#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wwlab {

/// Evaluation on a singular locus or outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid parameters or configuration values.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two fields living on different grids were combined.
class GridMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// NaN/overflow detected during a computation.
class NumericalAbort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Trilinear quadrature refused because of its O(n^6) cost.
class CostGuardError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Fixed-point iteration stopped contracting.
class ContractionFailure : public std::runtime_error {
public:
    ContractionFailure(const std::string& what, std::vector<double> history)
        : std::runtime_error(what), history_(std::move(history)) {}
    const std::vector<double>& history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

}  // namespace wwlab
