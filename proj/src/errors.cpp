#include "fukflow/errors.hpp"

namespace fukflow {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::MalformedToken: return "MalformedToken";
        case ErrorKind::ArcLabelNotPairedTwice: return "ArcLabelNotPairedTwice";
        case ErrorKind::InconsistentOrientation: return "InconsistentOrientation";
        case ErrorKind::EmptyDiagram: return "EmptyDiagram";
        case ErrorKind::SameComponent: return "SameComponent";
        case ErrorKind::InvalidComponent: return "InvalidComponent";
        case ErrorKind::InvalidFraming: return "InvalidFraming";
        case ErrorKind::DuplicateGeneratorName: return "DuplicateGeneratorName";
        case ErrorKind::UnknownGenerator: return "UnknownGenerator";
        case ErrorKind::NonTransverse: return "NonTransverse";
        case ErrorKind::DifferentialNotSquareZero: return "DifferentialNotSquareZero";
        case ErrorKind::NonPlanarPD: return "NonPlanarPD";
        case ErrorKind::UnsupportedModel: return "UnsupportedModel";
        case ErrorKind::InvalidModel: return "InvalidModel";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::DegeneratePuncture: return "DegeneratePuncture";
        case ErrorKind::MismatchedPuncture: return "MismatchedPuncture";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::BranchCutProximity: return "BranchCutProximity";
        case ErrorKind::ZeroArgument: return "ZeroArgument";
        case ErrorKind::IOFailure: return "IOFailure";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::UnknownFixture: return "UnknownFixture";
        case ErrorKind::Usage: return "Usage";
    }
    return "Error";
}

}  // namespace fukflow
