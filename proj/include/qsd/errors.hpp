#pragma once

#include <stdexcept>
#include <string>

namespace qsd {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

struct LambdaOutOfRange : Error {
    using Error::Error;
};

struct DimensionTooSmall : Error {
    using Error::Error;
};

struct InvalidSharpObservable : Error {
    using Error::Error;
};

/// A (label, basis index) pair violates the uniform eigenvalue structure.
struct StructureViolation : Error {
    using Error::Error;
};

struct BadOutcome : Error {
    using Error::Error;
};

struct NotPOVM : Error {
    using Error::Error;
};

struct NumericalBreakdown : Error {
    using Error::Error;
};

struct KernelDomainMismatch : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct UnsupportedRounds : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct DegenerateLambda : Error {
    using Error::Error;
};

struct InvalidGrid : Error {
    using Error::Error;
};

}  // namespace qsd
