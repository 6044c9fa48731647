#pragma once
// Decision procedures for hexagonal projected symmetries: holohedry lifting
// and descent between a lattice and its projection, rational compatibility
// of the projected lattice's suspension, the two-generator compatibility
// criterion, the hexagonal-plane classifier, enumeration of candidate
// projection planes, and the exact change of coordinates that moves a
// projection plane onto { z = 0 }.

#include <optional>
#include <vector>

#include "crystalproj/group.hpp"

namespace crystalproj {

enum class LiftCheck { plus, minus, both, neither };
const char* to_string(LiftCheck);

// Which of the block extensions of alpha by ±1 belong to the holohedry.
LiftCheck lift_check(const Mat& alpha,
                     const std::vector<PointIsometry>& ambient_holohedry);

// Sufficient conditions for alpha to preserve the projected lattice at every
// band width: the plane mirror is missing from the holohedry, or a pure
// point element lifting alpha belongs to the group.
bool descend_check(const SpaceGroup& G, const Mat& alpha);

// Smallest positive r with r * (g, 0) in L for every generator g, decided
// exactly through the coordinates of the suspended generators; nullopt when
// no such integer exists or it exceeds r_max.
std::optional<BigInt> rationally_compatible(const std::vector<Vec>& planar_basis,
                                            const Lattice& L,
                                            const BigInt& r_max = BigInt(1000));

// The band-width dichotomy for rational compatibility of the suspension.
struct RationalCompatibilityReport {
  bool axis_step_in_lattice = false;  // (0, ..., 0, y0) in L
  bool axis_step_rational = false;    // meaningful when in lattice
  bool compatible = false;
  std::optional<BigInt> r;
  int projected_rank = 0;
};
RationalCompatibilityReport check_prop_rational(const SpaceGroup& G,
                                                const Scalar& y0);

// Per-generator conditions when the projected basis is related by a point
// isometry: (a) suspended generator with the identity, (b) mirror glide at
// some height, (c) plain lattice point over the generator.
struct TwoGeneratorReport {
  Mat rho;                       // maps generator 1 to generator 2
  std::array<char, 2> condition;  // 'a', 'b' or 'c' per generator
  bool compatible = false;
  std::optional<BigInt> r;
};
// Throws HypothesisNotMet when no point-group element relates the generators.
TwoGeneratorReport check_two_generator(const SpaceGroup& G, const Scalar& y0);

// Classifier for "the y0-projection of L into P is a hexagonal plane
// lattice": P meets L in at least two points and an order-3 holohedry
// rotation fixes P.
struct PlaneClassification {
  bool hexagonal = false;
  bool has_two_points = false;
  std::optional<PointIsometry> threefold;  // beta
  Plane plane;                             // input plane
  std::vector<Vec> sublattice;             // {v, beta v}, v minimal nonzero
};
PlaneClassification hexagonal_classifier(const LatticePtr& L, const Plane& P);

// One entry per order-3 rotation axis whose perpendicular plane through the
// origin meets the lattice nontrivially.
struct HexagonalPlane {
  Vec axis;
  Plane plane;
  PointIsometry threefold;
  std::vector<Vec> sublattice;
};
std::vector<HexagonalPlane> enumerate_hexagonal_planes(const LatticePtr& L);

// Orthogonal change of coordinates carrying a plane through the origin onto
// { z = 0 } and its normal onto the z axis. Rows are two in-plane unit
// vectors and the unit normal; all entries stay in the field whenever the
// required square roots do, otherwise `exact` is false and only the float
// form is usable.
struct FrameChange {
  bool exact = false;
  Mat A;  // valid when exact; A^T A = 1 exactly
  std::array<std::array<double, 3>, 3> approx{};
};
FrameChange change_of_coordinates(const Plane& P,
                                  const std::optional<Vec>& anchor = {});

// Conjugated copy of G in coordinates where `plane` is { z = 0 }, translated
// by a lattice point on the plane and rescaled by `scale`.
SpaceGroup transform_group(const SpaceGroup& G, const Mat& A,
                           const Scalar& scale, const Vec& plane_point);

// Projection frame for a lattice and plane: the group rewritten so the
// plane's hexagonal sublattice is the unit hexagonal lattice in z = 0.
struct ProjectionFrame {
  SpaceGroup group;    // transformed group
  Mat A;               // exact change of coordinates
  Scalar scale;        // 1 / |v_min|
  Vec anchor;          // minimal in-plane lattice vector used for row 1
};
ProjectionFrame hexagonal_frame(const SpaceGroup& G, const Plane& P);

// Aggregate report for projecting a (frame-aligned) group along z.
struct ProjectionReport {
  ProjectedLatticeResult lattice_result;
  std::optional<BigInt> compatibility_r;
  RationalCompatibilityReport prop_rational;
  bool hexagonal = false;
  std::optional<PlaneClassification> witnesses;  // against the plane z = 0
  std::optional<bool> hypothesis_verified;       // descent check on a 3-fold
};
ProjectionReport analyze_projection(const SpaceGroup& G, const Scalar& y0);

}  // namespace crystalproj
