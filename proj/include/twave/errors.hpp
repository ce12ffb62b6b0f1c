#pragma once

#include <stdexcept>
#include <string>

namespace twave {

enum class ErrorCode {
  InvalidArgument = 1,
  Domain,
  PoleProximity,
  FrameDegenerate,
  UnsupportedFamily,
  CaseMismatch,
  SignDomain,
  EmptyGrid,
  StepUnderflow,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::InvalidArgument, w) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::Domain, w) {}
};

// Raised by the Weierstrass evaluator inside the exclusion radius of a lattice
// pole. distance() is the distance from the argument to the nearest pole.
class PoleProximityError : public Error {
 public:
  PoleProximityError(const std::string& w, double distance)
      : Error(ErrorCode::PoleProximity, w), distance_(distance) {}
  double distance() const noexcept { return distance_; }

 private:
  double distance_;
};

struct FrameDegenerateError : Error {
  explicit FrameDegenerateError(const std::string& w) : Error(ErrorCode::FrameDegenerate, w) {}
};

struct UnsupportedFamilyError : Error {
  explicit UnsupportedFamilyError(const std::string& w)
      : Error(ErrorCode::UnsupportedFamily, w) {}
};

struct CaseMismatchError : Error {
  explicit CaseMismatchError(const std::string& w) : Error(ErrorCode::CaseMismatch, w) {}
};

struct SignDomainError : Error {
  explicit SignDomainError(const std::string& w) : Error(ErrorCode::SignDomain, w) {}
};

struct EmptyGridError : Error {
  explicit EmptyGridError(const std::string& w) : Error(ErrorCode::EmptyGrid, w) {}
};

struct StepUnderflowError : Error {
  explicit StepUnderflowError(const std::string& w) : Error(ErrorCode::StepUnderflow, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

}  // namespace twave
