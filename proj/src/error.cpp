#include "coxrep/error.hpp"

namespace coxrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::MismatchedLabelSets: return "MismatchedLabelSets";
    case ErrorKind::MismatchedQuiver: return "MismatchedQuiver";
    case ErrorKind::CyclicQuiver: return "CyclicQuiver";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::LoopArrow: return "LoopArrow";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::InvalidSimple: return "InvalidSimple";
    case ErrorKind::NotASink: return "NotASink";
    case ErrorKind::NotASource: return "NotASource";
    case ErrorKind::NotAnExtendedRoot: return "NotAnExtendedRoot";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::OrbitBudgetExceeded: return "OrbitBudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::SplittingFailed: return "SplittingFailed";
    case ErrorKind::Internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace coxrep
