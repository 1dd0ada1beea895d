#pragma once

#include <stdexcept>
#include <string>

namespace fukflow {

enum class ErrorKind {
    MalformedToken,
    ArcLabelNotPairedTwice,
    InconsistentOrientation,
    EmptyDiagram,
    SameComponent,
    InvalidComponent,
    InvalidFraming,
    DuplicateGeneratorName,
    UnknownGenerator,
    NonTransverse,
    DifferentialNotSquareZero,
    NonPlanarPD,
    UnsupportedModel,
    InvalidModel,
    NotClosed,
    DegeneratePuncture,
    MismatchedPuncture,
    DomainViolation,
    BranchCutProximity,
    ZeroArgument,
    IOFailure,
    ShapeMismatch,
    DimensionTooLarge,
    UnknownFixture,
    Usage,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fukflow
