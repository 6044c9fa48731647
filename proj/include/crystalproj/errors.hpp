#pragma once
// Error types shared across the library. Computation errors derive from
// ComputeError so the CLI can map them to a distinct exit status; bad user
// input is reported with std::invalid_argument.

#include <stdexcept>
#include <string>

namespace crystalproj {

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDivision : ComputeError {
  ZeroDivision() : ComputeError("inverse of zero scalar") {}
};

struct NoAxis : ComputeError {
  NoAxis() : ComputeError("isometry has no rotation axis") {}
};

struct NoLatticePoint : ComputeError {
  NoLatticePoint() : ComputeError("plane contains no lattice point") {}
};

struct NotScanningElement : ComputeError {
  NotScanningElement()
      : ComputeError("orthogonal part does not preserve the projection axis") {}
};

struct EmptyShell : ComputeError {
  explicit EmptyShell(const std::string& what) : ComputeError(what) {}
};

struct HypothesisNotMet : ComputeError {
  explicit HypothesisNotMet(const std::string& what) : ComputeError(what) {}
};

struct NormalizationOutsideField : ComputeError {
  NormalizationOutsideField()
      : ComputeError("required square root leaves Q(sqrt2, sqrt3)") {}
};

struct DegenerateProjection : ComputeError {
  explicit DegenerateProjection(int rank)
      : ComputeError("projected lattice has rank " + std::to_string(rank)),
        rank(rank) {}
  int rank;
};

}  // namespace crystalproj
