#include "adelink/error.hpp"

namespace adelink {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnparsableSpec: return "UnparsableSpec";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::NotPositiveRoot: return "NotPositiveRoot";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnparsableWord: return "UnparsableWord";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::OddHalfUnits: return "OddHalfUnits";
    case ErrorCode::PathTooCloseToHyperplane: return "PathTooCloseToHyperplane";
    case ErrorCode::RoundingResidualTooLarge: return "RoundingResidualTooLarge";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::InconsistentDecomposition: return "InconsistentDecomposition";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
  }
  return "UnknownError";
}

bool is_internal(ErrorCode code) {
  return code == ErrorCode::OddHalfUnits || code == ErrorCode::InconsistentDecomposition;
}

}  // namespace adelink
