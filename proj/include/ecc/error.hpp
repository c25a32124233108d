#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecc {

enum class ErrorCode {
  InvalidEdge,
  VertexOutOfRange,
  GraphDisconnected,
  NotInCT,
  OddDiameter,
  EvenDiameter,
  MultipleCenters,
  DiameterTooSmall,
  OrderOne,
  IndexOutOfRange,
  SizeOutOfRange,
  ZeroPolynomial,
  NoConvergence,
  KOutOfRange,
  ParameterOutOfRange,
  UnknownFixture,
  ParseError,
  NotSymmetric,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as an Error whose
/// code identifies the violated precondition.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace ecc
