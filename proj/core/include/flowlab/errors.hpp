#pragma once

#include <stdexcept>
#include <string>

namespace flowlab {

// One error type for the whole library. The code pins down which contract
// was violated; the message carries the offending values.
enum class Errc {
  // exactnum
  EmptyInput,
  NonPositiveValue,
  ParseError,
  DivisionByZero,
  // flownet
  UnbalancedSupplies,
  DanglingEndpoint,
  NegativeCapacity,
  DuplicateLabel,
  InfeasibleFlow,
  // ssp
  NegativeCycleDetected,
  IterationBudgetExceeded,
  UnboundedAugmentation,
  // netsimplex
  NotATree,
  UnboundedCycle,
  PivotBudgetExceeded,
  InfeasibleStart,
  DegeneratePivot,
  // gadgets
  IndexOrder,
  LevelOutOfRange,
  InvalidR,
  WrongFamily,
  NonPositiveEntry,
  EmptyInstance,
  // experiments
  InstanceTooLarge,
  HorizonTooSmall,
  NonUnitAmount,
  // cli
  UsageError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace flowlab
