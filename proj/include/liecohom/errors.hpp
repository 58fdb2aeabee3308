#pragma once

#include <stdexcept>
#include <string>

namespace liecohom {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, algebra files, module specs, reports).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Input is well-formed but violates a mathematical precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class SubspaceNotContained : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class JacobiViolation : public ValidationError {
public:
    JacobiViolation(long i, long j, long k, std::string residual)
        : ValidationError("Jacobi identity fails on (" + std::to_string(i) + "," + std::to_string(j) + ","
                          + std::to_string(k) + "), residual " + residual),
          i(i), j(j), k(k), residual(std::move(residual))
    {
    }
    long i, j, k;
    std::string residual;
};

class NotSubalgebra : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ModuleAxiomViolation : public ValidationError {
public:
    ModuleAxiomViolation(long i, long j, std::string residual)
        : ValidationError("module axiom fails on basis pair (" + std::to_string(i) + "," + std::to_string(j)
                          + "), residual " + residual),
          i(i), j(j), residual(std::move(residual))
    {
    }
    long i, j;
    std::string residual;
};

class MixedAlgebras : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotSemisimple : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RNotAbelian : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RNotCommutingWithH : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MixingRankDeficient : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownName : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownModuleSpec : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegreeOutOfRange : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroEuler : public ValidationError {
public:
    using ValidationError::ValidationError;
};

} // namespace liecohom
