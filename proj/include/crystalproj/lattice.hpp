#pragma once
// Lattices of rank 1-3 with exact field coordinates: membership, duals,
// norm shells, holohedry groups, rotation axes, plane sections and the
// hexagonal-plane-lattice test.
//
// Point isometries are stored as integer matrices acting on lattice
// coordinates; the Cartesian form is derived. That keeps all group
// arithmetic over the integers.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "crystalproj/intlinalg.hpp"
#include "crystalproj/linalg.hpp"

namespace crystalproj {

class Lattice;
using LatticePtr = std::shared_ptr<const Lattice>;

class Lattice {
 public:
  // Throws std::invalid_argument when the generators are rank deficient.
  explicit Lattice(std::vector<Vec> basis);

  int dim() const { return dim_; }
  const Vec& basis(int i) const { return basis_[i]; }
  const std::vector<Vec>& basis() const { return basis_; }
  const Mat& basis_matrix() const { return B_; }      // columns are generators
  const Mat& basis_inverse() const { return Binv_; }
  const Mat& gram() const { return gram_; }

  // Integer coordinates of v in this basis, when v belongs to the lattice.
  std::optional<IntVec> member(const Vec& v) const;
  // Exact coordinates of v in this basis (not necessarily integral).
  Vec coordinates(const Vec& v) const { return Binv_ * v; }
  Vec from_coordinates(const IntVec& c) const;

  // v reduced into the fundamental cell [0,1)^dim of this basis.
  Vec reduce_mod(const Vec& v) const;

  // Same point set as another lattice (mutual membership of bases).
  bool same_lattice(const Lattice& other) const;

  std::string str() const;

 private:
  int dim_;
  std::vector<Vec> basis_;
  Mat B_, Binv_, gram_;
};

LatticePtr make_lattice(std::vector<Vec> basis);

// Dual lattice: basis B (B^T B)^-1, so generators pair integrally with the
// primal basis.
Lattice dual(const Lattice& L);
LatticePtr dual_ptr(const LatticePtr& L);

// All lattice vectors of squared norm exactly r2 (r2 > 0). The search box
// comes from the exact Gram inverse converted to floats with a 1 + 1e-6
// margin; every candidate is verified exactly.
std::vector<Vec> shell(const Lattice& L, const Scalar& r2);

// A lattice-preserving orthogonal map. m acts on lattice coordinates and
// satisfies m^T G m = G exactly.
class PointIsometry {
 public:
  PointIsometry(LatticePtr lattice, std::array<std::array<int64_t, 3>, 3> m);

  const LatticePtr& lattice() const { return lat_; }
  int dim() const { return dim_; }
  int64_t m(int i, int j) const { return m_[i][j]; }
  const Mat& cartesian() const { return cart_; }

  int det() const;
  bool is_proper() const { return det() == 1; }
  bool is_identity() const;
  // Smallest k >= 1 with g^k = 1; the crystallographic restriction bounds it
  // by 6 in dimensions <= 3.
  int order() const;

  PointIsometry compose(const PointIsometry& o) const;
  PointIsometry inverse() const;
  Vec apply(const Vec& v) const { return cart_ * v; }

  bool operator==(const PointIsometry& o) const;
  static PointIsometry identity(LatticePtr lattice);

 private:
  LatticePtr lat_;
  int dim_;
  std::array<std::array<int64_t, 3>, 3> m_;
  Mat cart_;
};

// The full group of Gram-preserving integer matrices, sorted canonically.
std::vector<PointIsometry> holohedry(const LatticePtr& L);

// Fixed axis of a proper rotation of order >= 2 in dimension 3, as a
// primitive sign-canonical lattice vector mapped to Cartesian form.
// Throws NoAxis for identity or improper input.
Vec rotation_axis(const PointIsometry& g);

struct Plane {
  Vec normal;     // dim 3, nonzero
  Scalar offset;  // plane = { p : <normal, p> = offset }
};

// Lattice points on a plane: a particular point (when one exists) plus a
// basis of the rank-0/1/2 sublattice of in-plane lattice directions.
struct PlaneSection {
  bool has_point = false;
  Vec point;  // valid when has_point
  int rank = 0;
  std::vector<Vec> directions;  // Gauss-reduced when rank = 2
};
PlaneSection plane_intersection(const Lattice& L, const Plane& P);

// 2D lattice whose holohedry is the full dihedral group of the hexagon.
bool is_hexagonal_2d(const LatticePtr& L);

// Lagrange reduction of a planar basis; shortest vector first, sign
// canonical, ties broken lexicographically.
void gauss_reduce(Vec& u, Vec& v);

// Basis of the Z-module generated by arbitrary field vectors, obtained by
// flattening coordinates over the rational basis {1, sqrt2, sqrt3, sqrt6}.
// Returns nullopt when the module is not discrete (rank exceeds the ambient
// dimension).
std::optional<std::vector<Vec>> zspan_vectors(const std::vector<Vec>& gens,
                                              int dim);

// Integer lattice coordinates c with prescribed last Cartesian coordinate:
// (B c)_z = rhs. The kernel spans the z = 0 sublattice.
struct SliceSolution {
  bool solvable = false;
  IntVec particular;
  std::vector<IntVec> kernel;
};
SliceSolution lattice_fixed_last(const Lattice& L, const Scalar& rhs);
// Integer coordinates with prescribed horizontal Cartesian part (last
// coordinate free): (B c)_i = rhs_i for i < dim-1.
SliceSolution lattice_fixed_horizontal(const Lattice& L, const Vec& rhs_h);

// Smallest positive height of a lattice vector on the projection axis (all
// horizontal coordinates zero). Throws ComputeError when the lattice does
// not meet the axis.
Scalar axis_step(const Lattice& L);

}  // namespace crystalproj
