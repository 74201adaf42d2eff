#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lrheat {

inline constexpr const char* kVersion = "0.1.0";

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (negative time,
// axis out of range, rho outside (0,1), ...).
struct DomainError : Error {
    using Error::Error;
};

// Structurally malformed input (mismatched boxes, wrong value counts).
struct InvalidArgument : Error {
    using Error::Error;
};

// Operation not supported for this object kind (e.g. W^{1,inf} norm of a
// potential without a gradient evaluator).
struct CapabilityError : Error {
    using Error::Error;
};

// Singular or numerically rank-deficient system; carries the offending
// smallest eigenvalue when known.
struct SingularError : Error {
    explicit SingularError(const std::string& msg, double min_eig_ = 0.0)
        : Error(msg), min_eig(min_eig_) {}
    double min_eig;
};

// Pre-compute config validation failure; lists the offending fields.
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg, std::vector<std::string> fields_ = {})
        : Error(msg), fields(std::move(fields_)) {}
    std::vector<std::string> fields;
};

// Solver breakdown or resource limit during computation.
struct ComputeError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace lrheat
