#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nervekit {

/// Sentinel for "no such id" in index tables.
inline constexpr std::size_t kNone = static_cast<std::size_t>(-1);

enum class ErrorKind {
  AxiomViolation,
  DanglingId,
  InvalidInput,
  NotAnAction,
  MismatchedTarget,
  UnknownObject,
  InsufficientTruncation,
  UnknownBasepoint,
  NonFreeAction,
  LevelInactive,
  NotSameOrbit,
  C1Violation,
  C2Violation,
  M1Violation,
  M2Violation,
  TorsorViolation,
  BudgetExceeded,
  InvalidClass,
  OracleMissing,
  HypothesisFails,
  NotALimit,
  NotFComplete,
  BijectionFailure,
  NoFinalObject,
  NotFunctorial,
  UsageError,
};

std::string_view kind_name(ErrorKind kind);

/// Every failure raised by the library. `witness()` names the smallest
/// offending piece of input (arrow ids, a point of W, a base morphism...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string witness);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

/// A named pass/fail outcome carrying a witness on failure.
struct Verdict {
  std::string name;
  bool ok = true;
  std::string witness;

  explicit operator bool() const noexcept { return ok; }

  static Verdict pass(std::string name) { return {std::move(name), true, {}}; }
  static Verdict fail(std::string name, std::string witness) {
    return {std::move(name), false, std::move(witness)};
  }
};

}  // namespace nervekit
