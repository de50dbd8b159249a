#pragma once

#include <stdexcept>
#include <string>

namespace cvnet {

/// Parameter outside its physical domain (negative squeezing, s > 0, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Structurally malformed input: dimension mismatch, bad index set, cutoff
/// mismatch between operators and densities.
class StructuralError : public std::invalid_argument {
public:
    explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerically unusable input (singular or ill-conditioned covariance).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a hard resource cap (party count, Fock cutoff).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Valid object, but the operation does not support it (nonzero-mean states
/// in the Bell engine).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cvnet
