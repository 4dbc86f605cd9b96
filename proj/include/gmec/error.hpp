#pragma once

#include <stdexcept>
#include <string>

namespace gmec {

// One exception type for the whole library; the kind identifies the
// failure mode so callers and tests can dispatch on it.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    DimensionMismatch,
    NotHermitian,
    NotPositive,
    TraceNotOne,
    EmptyKeepSet,
    IndexOutOfRange,
    InvalidParameter,
    NotASimplexVector,
    NotAnIsometry,
    RankMismatch,
    RankTooHigh,
    AncillaTooSmall,
    NotADiagonalCorrelationState,
    PositivityViolated,
    Io,
    Parse,
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

[[noreturn]] inline void fail(Error::Kind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gmec
