#include "ecc/error.hpp"

namespace ecc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::GraphDisconnected: return "GraphDisconnected";
    case ErrorCode::NotInCT: return "NotInCT";
    case ErrorCode::OddDiameter: return "OddDiameter";
    case ErrorCode::EvenDiameter: return "EvenDiameter";
    case ErrorCode::MultipleCenters: return "MultipleCenters";
    case ErrorCode::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorCode::OrderOne: return "OrderOne";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
  }
  return "Unknown";
}

}  // namespace ecc
