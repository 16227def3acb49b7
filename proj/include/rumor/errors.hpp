#pragma once

#include <stdexcept>
#include <string>

namespace rumor {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A state contained NaN/Inf where a finite value was required.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Input lies outside the admissible domain (simplex, triangle, [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Logarithmic singularity hit (I <= 0).
class SingularityError : public Error {
public:
    using Error::Error;
};

/// An integration stage produced a non-finite value.
class BlowupError : public Error {
public:
    using Error::Error;
};

/// Bracket expansion found no sign change.
class NoRootError : public Error {
public:
    using Error::Error;
};

/// Final-size query from the unstable part of the equilibrium segment.
class UnstableStartError : public Error {
public:
    using Error::Error;
};

/// A user-supplied candidate function evaluated to NaN/Inf at a sample point.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// Scenario file or CLI argument rejected.
class ScenarioError : public Error {
public:
    using Error::Error;
};

} // namespace rumor
