#include "polycut/error.hpp"

namespace polycut {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::LoopOrMultiEdge: return "LoopOrMultiEdge";
    case ErrorCode::NotGenusZero: return "NotGenusZero";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NotOnFace: return "NotOnFace";
    case ErrorCode::AlreadyAdjacent: return "AlreadyAdjacent";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::NotACut: return "NotACut";
    case ErrorCode::NoCuts: return "NoCuts";
    case ErrorCode::NotSplittingSet: return "NotSplittingSet";
    case ErrorCode::NotTriangle: return "NotTriangle";
    case ErrorCode::OddOrSmall: return "OddOrSmall";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::TruncatedGraph: return "TruncatedGraph";
    case ErrorCode::InvalidNeighbor: return "InvalidNeighbor";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
  }
  return "Unknown";
}

}  // namespace polycut
