#pragma once

#include <stdexcept>
#include <string>

namespace thermoent {

// Root of every error raised by the library. The CLI maps the three direct
// subclasses onto exit codes 1 (validation), 2 (solver) and 3 (I/O).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class SolverError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of a function (e.g. ω ≤ 0 for n̄).
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// ω₁ ≤ 0: the coupling pushes |λ₃⟩ below |00⟩.
class NegativeFrequencyError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Ω = 0 together with Δε = 0; the mixing angle is undefined.
class DegenerateSpectrumError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A density matrix without the X structure was handed to the X formula.
class StructureError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NonUniqueSteadyStateError : public SolverError {
public:
    using SolverError::SolverError;
};

class PositivityError : public SolverError {
public:
    using SolverError::SolverError;
};

class StepSizeError : public SolverError {
public:
    using SolverError::SolverError;
};

class NoRootError : public SolverError {
public:
    using SolverError::SolverError;
};

}  // namespace thermoent
