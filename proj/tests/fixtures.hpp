#pragma once
// Shared lattices and groups used across the test suites.

#include "crystalproj/group.hpp"
#include "crystalproj/lattice.hpp"

namespace crystalproj::testing {

inline Scalar rat(long long n, long long d = 1) {
  return Scalar(Rational(BigInt(n), BigInt(d)));
}

inline LatticePtr cubic_z3() {
  return make_lattice({Vec(rat(1), rat(0), rat(0)), Vec(rat(0), rat(1), rat(0)),
                       Vec(rat(0), rat(0), rat(1))});
}

// Primitive cubic lattice rotated so a hexagonal sublattice spans z = 0 and
// scaled so that sublattice is unit: <(1,0,0), (1/2, r3/2, 0),
// (1/2, r3/6, -r6/6)>.
inline LatticePtr cubic_hex_frame() {
  return make_lattice(
      {Vec(rat(1), rat(0), rat(0)),
       Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 2)), rat(0)),
       Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 6)),
           Scalar::sqrt6(Rational(-1, 6)))});
}

inline LatticePtr hex2d() {
  return make_lattice(
      {Vec(rat(1), rat(0)), Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 2)))});
}

// Fine hexagonal lattice <tau, tau'> appearing as the full-period projected
// lattice of the cubic frame.
inline Vec tau() { return Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 6))); }
inline Vec tau_prime() { return Vec(rat(1, 2), Scalar::sqrt3(Rational(-1, 6))); }

inline LatticePtr hex3d(long long c = 2) {
  return make_lattice({Vec(rat(1), rat(0), rat(0)),
                       Vec(rat(1, 2), Scalar::sqrt3(Rational(1, 2)), rat(0)),
                       Vec(rat(0), rat(0), rat(c))});
}

// Band widths from the worked cubic example: k * (1/sqrt6) for the four
// depth classes.
inline Scalar depth_sixth(long long k) {  // k / sqrt6 = k*sqrt6/6
  return Scalar::sqrt6(Rational(k, 6));
}
inline Scalar depth_half_sixth() {  // 1 / (2 sqrt6) = sqrt6/12
  return Scalar::sqrt6(Rational(1, 12));
}

// Planar 60-degree rotation and the mirror negating x.
inline Mat rot60_2d() {
  Mat m(2);
  m(0, 0) = rat(1, 2);
  m(0, 1) = Scalar::sqrt3(Rational(-1, 2));
  m(1, 0) = Scalar::sqrt3(Rational(1, 2));
  m(1, 1) = rat(1, 2);
  return m;
}
inline Mat mirror_x_2d() {
  Mat m = Mat::identity(2);
  m(0, 0) = rat(-1);
  return m;
}

}  // namespace crystalproj::testing
