#include "qheun/error.hpp"

namespace qheun {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::ZeroScale: return "ZeroScale";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::NotAPole: return "NotAPole";
    case ErrorKind::HigherOrderPole: return "HigherOrderPole";
    case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::UnexpectedPole: return "UnexpectedPole";
    case ErrorKind::BoundaryPole: return "BoundaryPole";
    case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::BasisSolveFailed: return "BasisSolveFailed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::RaisingViolation: return "RaisingViolation";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ZeroGauge: return "ZeroGauge";
    case ErrorKind::CoincidenceFailed: return "CoincidenceFailed";
    case ErrorKind::RelationFailed: return "RelationFailed";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NearPole: return "NearPole";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotConstant: return "NotConstant";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qheun
