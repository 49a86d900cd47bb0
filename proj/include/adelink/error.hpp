#pragma once

#include <stdexcept>
#include <string>

namespace adelink {

enum class ErrorCode {
  UnparsableSpec,
  InvalidRank,
  DimensionMismatch,
  ClosureBudgetExceeded,
  NotPositiveRoot,
  NotDecomposable,
  GeneratorOutOfRange,
  CapExceeded,
  UnparsableWord,
  NotPure,
  OddHalfUnits,
  PathTooCloseToHyperplane,
  RoundingResidualTooLarge,
  RelationViolated,
  InconsistentDecomposition,
  RankOutOfRange,
  CacheCorrupt,
};

const char* to_string(ErrorCode code);

// OddHalfUnits and InconsistentDecomposition signal broken internal
// invariants rather than bad input; the CLI maps them to exit code 3.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace adelink
