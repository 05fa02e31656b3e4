#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace contactlab {

// Base class for all toolkit errors. Subclasses carry the failure taxonomy;
// the CLI maps InputError descendants to exit code 2 and MathError
// descendants to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class MathError : public Error {
public:
    using Error::Error;
};

// --- input-side failures ---

class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : InputError(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
    // 1-based byte offset into the input string.
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class NotReducedCurve : public InputError {
public:
    using InputError::InputError;
};

class NotAntisymmetric : public InputError {
public:
    using InputError::InputError;
};

// --- mathematical failures ---

class DegenerateResultant : public MathError {
public:
    using MathError::MathError;
};

class DegreeTooLow : public MathError {
public:
    using MathError::MathError;
};

class NotDivisible : public MathError {
public:
    using MathError::MathError;
};

class RootFindingFailed : public MathError {
public:
    using MathError::MathError;
};

class DegenerateLine : public MathError {
public:
    using MathError::MathError;
};

class ChartMismatch : public MathError {
public:
    using MathError::MathError;
};

class DegreeOverflow : public MathError {
public:
    using MathError::MathError;
};

class MapUndefined : public MathError {
public:
    using MathError::MathError;
};

class IrrationalSingularity : public MathError {
public:
    using MathError::MathError;
};

class UnsupportedSingularity : public MathError {
public:
    using MathError::MathError;
};

class DualDegreeMismatch : public MathError {
public:
    using MathError::MathError;
};

class ContradictorySingularityData : public MathError {
public:
    using MathError::MathError;
};

class NonIsolatedIntersection : public MathError {
public:
    using MathError::MathError;
};

class NotOnCurve : public MathError {
public:
    using MathError::MathError;
};

class GradientVanishes : public MathError {
public:
    using MathError::MathError;
};

class IndeterminatePoint : public MathError {
public:
    using MathError::MathError;
};

class DegenerateImage : public MathError {
public:
    using MathError::MathError;
};

class ChartUnavailable : public MathError {
public:
    using MathError::MathError;
};

class NonGenericHyperplane : public MathError {
public:
    using MathError::MathError;
};

class NotContactCompatible : public MathError {
public:
    using MathError::MathError;
};

}  // namespace contactlab
