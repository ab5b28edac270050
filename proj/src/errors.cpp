#include "nonpasch/errors.hpp"

namespace nonpasch {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::OverlappingSegments: return "OverlappingSegments";
    case ErrorCode::NoCommonEndpoint: return "NoCommonEndpoint";
    case ErrorCode::WrongVariant: return "WrongVariant";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::SameLine: return "SameLine";
    case ErrorCode::NotCollinear: return "NotCollinear";
    case ErrorCode::NotPairwiseIntersecting: return "NotPairwiseIntersecting";
    case ErrorCode::IncidentPoint: return "IncidentPoint";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::NotIntersecting: return "NotIntersecting";
    case ErrorCode::ConcurrentLines: return "ConcurrentLines";
    case ErrorCode::DegenerateVertices: return "DegenerateVertices";
    case ErrorCode::NumericallyDegenerate: return "NumericallyDegenerate";
    case ErrorCode::OnBoundary: return "OnBoundary";
    case ErrorCode::NotOnModel: return "NotOnModel";
    case ErrorCode::IncompatibleStrategy: return "IncompatibleStrategy";
    case ErrorCode::UnsupportedAxiom: return "UnsupportedAxiom";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace nonpasch
