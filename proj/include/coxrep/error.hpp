#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxrep {

enum class ErrorKind {
  Parse,
  MismatchedLabelSets,
  MismatchedQuiver,
  CyclicQuiver,
  InvalidLabel,
  LoopArrow,
  UnknownVertex,
  InvalidOrdering,
  InvalidSimple,
  NotASink,
  NotASource,
  NotAnExtendedRoot,
  NotPositive,
  NotFiniteType,
  NoSolution,
  ShapeMismatch,
  OrbitBudgetExceeded,
  CapExceeded,
  SplittingFailed,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// the command line tool can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coxrep
