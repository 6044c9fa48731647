#pragma once
// Exact integer linear algebra on small systems with big-integer entries:
// column-style Hermite elimination, integer solutions of rational linear
// systems, and Z-span bases of rational generating sets.
//
// Systems here come from expanding one field-coefficient constraint into up
// to four rational constraints on integer unknowns (one per component in the
// basis {1, sqrt2, sqrt3, sqrt6}), so sizes stay tiny.

#include <vector>

#include "crystalproj/scalar.hpp"

namespace crystalproj {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row major
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Column echelon form H = A * U with U unimodular. Pivot columns are
// 0..rank-1; columns rank..n-1 of H are zero.
struct ColEchelon {
  IntMat H;
  IntMat U;
  std::vector<std::pair<int, int>> pivots;  // (row, column)
  int rank = 0;
};
ColEchelon column_echelon(IntMat A);

// Integer solutions of A x = b with rational coefficients.
struct IntegerSolution {
  bool solvable = false;
  IntVec particular;           // one solution (all zeros when b = 0)
  std::vector<IntVec> kernel;  // basis of the integer kernel of A
};
IntegerSolution solve_integer(const RatMat& A, const RatVec& b);

// Basis of the Z-module generated by rational row vectors. Row operations are
// unimodular, so the returned rows generate exactly the same module.
RatMat zspan_basis(const RatMat& generators);

// Divides by the gcd of the entries (primitive integer vector), empty-safe.
IntVec make_primitive(IntVec v);

}  // namespace crystalproj
