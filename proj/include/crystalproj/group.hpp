#pragma once
// Crystallographic groups as a translation lattice plus finitely many coset
// representatives (v, delta). The scanning subgroup keeps the elements whose
// orthogonal part fixes the projection axis up to sign; projecting those by
// h((v, y), alpha_pm) = (v, alpha) produces the symmetries of band-projected
// functions. Membership of a planar isometry among those symmetries is
// decided by the three-way criterion: side preserving at height 0, side
// reversing at the band width, or any height when the axis step is itself a
// lattice vector.

#include <optional>
#include <vector>

#include "crystalproj/lattice.hpp"

namespace crystalproj {

// x -> t + Q x with Q a lattice point isometry.
struct Isometry {
  Vec t;
  PointIsometry p;

  Vec apply(const Vec& x) const { return t + p.apply(x); }
  Isometry compose(const Isometry& o) const;  // (*this) after o
  Isometry inverse() const;
  bool operator==(const Isometry& o) const { return t == o.t && p == o.p; }
};

// Planar isometry with the orthogonal part kept in exact Cartesian form.
struct PlanarIsometry {
  Vec t;
  Mat alpha;

  Vec apply(const Vec& x) const { return t + alpha * x; }
  Vec apply_inverse(const Vec& x) const {
    return alpha.transpose() * (x - t);  // alpha is orthogonal
  }
  bool operator==(const PlanarIsometry& o) const {
    return t == o.t && alpha == o.alpha;
  }
};

class SpaceGroup {
 public:
  // Representatives must have pairwise distinct orthogonal parts and include
  // the identity with zero translation; closure modulo the lattice is
  // verified when validate is set.
  SpaceGroup(LatticePtr lattice, std::vector<Isometry> reps,
             bool validate = true);

  // Lattice + full holohedry with zero translations.
  static SpaceGroup symmorphic_holohedral(const LatticePtr& lattice);
  // Translations only.
  static SpaceGroup translations(const LatticePtr& lattice);

  const LatticePtr& lattice() const { return lat_; }
  int dim() const { return lat_->dim(); }
  const std::vector<Isometry>& reps() const { return reps_; }

  // Representative with the given Cartesian orthogonal part, if present.
  const Isometry* rep_for(const Mat& cartesian) const;

  // Exact membership: the orthogonal part matches a representative and the
  // translations differ by a lattice vector.
  bool contains(const Vec& t, const Mat& cartesian) const;
  bool contains(const Isometry& g) const {
    return contains(g.t, g.p.cartesian());
  }

 private:
  LatticePtr lat_;
  std::vector<Isometry> reps_;
};

// Is Q of the block form [[alpha, 0], [0, ±1]] in Cartesian coordinates?
// Returns +1 / -1 for the lower-right entry, nullopt otherwise.
std::optional<int> scanning_sign(const Mat& cartesian);

// Subgroup of elements whose orthogonal part has the block form above.
SpaceGroup scanning_subgroup(const SpaceGroup& G);

// h((v, y), alpha_pm) = (v, alpha); throws NotScanningElement.
PlanarIsometry project_h(const Isometry& g);

// Lifts a planar orthogonal part to the block matrix with ±1 in the corner.
Mat lift_block(const Mat& alpha, int sign);

// The subgroup of the scanning group that survives projection at band width
// y0. When (0,...,0,y0) is a lattice vector the whole scanning group
// survives; otherwise only side-preserving elements at height 0 and
// side-reversing elements at height y0 do, described one coset per
// orthogonal part with the height-zero sublattice as homogeneous part.
struct ScanCoset {
  Isometry base;        // translation pinned to height 0 or y0
  bool side_reversing;  // lower-right block entry is -1
};
struct BandSubgroup {
  bool whole = false;  // equals the scanning group
  Scalar y0;
  std::vector<ScanCoset> cosets;  // empty when whole
};
BandSubgroup band_subgroup(const SpaceGroup& scanning, const Scalar& y0);

// Membership in the band subgroup (for tests and reports).
bool band_subgroup_contains(const SpaceGroup& scanning, const BandSubgroup& B,
                            const Isometry& g);

// Theorem-style test: is (v, alpha) a symmetry of every band projection of
// width y0 of every G-invariant function? Returns the first satisfied
// condition, in the order side-preserving (I), side-reversing (II),
// full-period (III).
struct ProjectedSymmetry {
  bool ok = false;
  int tag = 0;  // 1, 2, 3 for conditions I, II, III; 0 when not a symmetry
};
ProjectedSymmetry is_projected_symmetry(const SpaceGroup& G, const Scalar& y0,
                                        const PlanarIsometry& s);
const char* tag_name(int tag);  // "I", "II", "III", "-"

// Symmetry group of the band projections: planar lattice plus one planar
// representative per surviving orthogonal part, translations reduced into
// the fundamental cell.
class PlanarGroup {
 public:
  PlanarGroup(LatticePtr lattice, std::vector<PlanarIsometry> reps,
              bool validate = true);

  const LatticePtr& lattice() const { return lat_; }
  const std::vector<PlanarIsometry>& reps() const { return reps_; }
  const PlanarIsometry* rep_for(const Mat& alpha) const;
  bool contains(const PlanarIsometry& s) const;

 private:
  LatticePtr lat_;
  std::vector<PlanarIsometry> reps_;
};

// Projected lattice as a rank report; rank below dim-1 is data, not an error.
struct ProjectedLatticeResult {
  int rank = 0;
  std::vector<Vec> basis;            // rank vectors of dimension dim-1
  std::vector<int> condition_trace;  // per basis vector: 1, 2 or 3
  LatticePtr lattice() const;        // throws DegenerateProjection
};
ProjectedLatticeResult projected_lattice(const SpaceGroup& G, const Scalar& y0);

PlanarGroup projected_group(const SpaceGroup& G, const Scalar& y0);

}  // namespace crystalproj
