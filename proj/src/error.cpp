#include "epr/error.hpp"

namespace epr {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EndpointOutsideObjects: return "EndpointOutsideObjects";
    case ErrorCode::ObjectOutsidePhi: return "ObjectOutsidePhi";
    case ErrorCode::PhiMismatch: return "PhiMismatch";
    case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::PartNotBelowAspect: return "PartNotBelowAspect";
    case ErrorCode::MeetTooLarge: return "MeetTooLarge";
    case ErrorCode::ObjectNotInComplex: return "ObjectNotInComplex";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::TooLargeForBruteForce: return "TooLargeForBruteForce";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::BadCutoff: return "BadCutoff";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::PolicyExhaustsBasis: return "PolicyExhaustsBasis";
    case ErrorCode::BasisNotBelowAspect: return "BasisNotBelowAspect";
    case ErrorCode::NotAnAspect: return "NotAnAspect";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DisconnectedInitialBasis: return "DisconnectedInitialBasis";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotACycleCarrier: return "NotACycleCarrier";
    case ErrorCode::InvalidMode: return "InvalidMode";
    case ErrorCode::UnknownMeasure: return "UnknownMeasure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace epr
