#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace paveset {

/// Library error with a stable machine-readable kind.
///
/// Kinds in use: Parse, GroundMismatch, GroundTooLarge, NotMonotone, NonzeroEmpty,
/// NotUpwardClosed, EmptySetIncluded, NotAPaving, NotAnAlgebra, DomainNotLattice,
/// NotMeasurable, IsMeasurable, PreconditionFailed, NonConvergent, Internal.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace paveset
