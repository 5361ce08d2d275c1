#pragma once

#include <stdexcept>
#include <string>

namespace epr {

// Machine-readable failure codes. The CLI maps these onto its error object,
// so the names are part of the external interface and must stay stable.
enum class ErrorCode {
  InvalidArgument,
  SelfLoop,
  DuplicateEdge,
  EndpointOutsideObjects,
  ObjectOutsidePhi,
  PhiMismatch,
  EnumerationTooLarge,
  UniverseTooLarge,
  PartNotBelowAspect,
  MeetTooLarge,
  ObjectNotInComplex,
  InvalidPermutation,
  TooLargeForBruteForce,
  GroupTooLarge,
  NotSymmetric,
  ConvergenceFailure,
  CarrierMismatch,
  BadCutoff,
  InvalidPolicy,
  PolicyExhaustsBasis,
  BasisNotBelowAspect,
  NotAnAspect,
  IndexOutOfRange,
  DisconnectedInitialBasis,
  Disconnected,
  NotNormalized,
  NotACycleCarrier,
  InvalidMode,
  UnknownMeasure,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace epr
