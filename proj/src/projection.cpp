#include "crystalproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "crystalproj/errors.hpp"

namespace crystalproj {

namespace {

using boost::multiprecision::denominator;

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

}  // namespace

const char* to_string(LiftCheck c) {
  switch (c) {
    case LiftCheck::plus: return "plus";
    case LiftCheck::minus: return "minus";
    case LiftCheck::both: return "both";
    default: return "neither";
  }
}

LiftCheck lift_check(const Mat& alpha,
                     const std::vector<PointIsometry>& ambient_holohedry) {
  Mat up = lift_block(alpha, +1);
  Mat down = lift_block(alpha, -1);
  bool plus = false, minus = false;
  for (const auto& g : ambient_holohedry) {
    if (g.cartesian() == up) plus = true;
    if (g.cartesian() == down) minus = true;
  }
  if (plus && minus) return LiftCheck::both;
  if (plus) return LiftCheck::plus;
  if (minus) return LiftCheck::minus;
  return LiftCheck::neither;
}

bool descend_check(const SpaceGroup& G, const Mat& alpha) {
  int d = G.dim();
  Mat sigma = lift_block(Mat::identity(d - 1), -1);
  bool sigma_in_holohedry = false;
  for (const auto& g : holohedry(G.lattice()))
    if (g.cartesian() == sigma) {
      sigma_in_holohedry = true;
      break;
    }
  if (!sigma_in_holohedry) return true;
  Vec zero = Vec::zero(d);
  return G.contains(zero, lift_block(alpha, +1)) ||
         G.contains(zero, lift_block(alpha, -1));
}

std::optional<BigInt> rationally_compatible(const std::vector<Vec>& planar_basis,
                                            const Lattice& L,
                                            const BigInt& r_max) {
  BigInt r = 1;
  for (const auto& g : planar_basis) {
    Vec c = L.coordinates(g.suspend(Scalar(0)));
    for (int i = 0; i < L.dim(); ++i) {
      auto q = c[i].to_rational();
      if (!q) return std::nullopt;  // irrational coordinate: no multiple works
      r = lcm(r, denominator(*q));
    }
  }
  if (r > r_max) return std::nullopt;
  return r;
}

RationalCompatibilityReport check_prop_rational(const SpaceGroup& G,
                                                const Scalar& y0) {
  const Lattice& L = *G.lattice();
  int d = L.dim();
  RationalCompatibilityReport rep;
  auto proj = projected_lattice(G, y0);
  rep.projected_rank = proj.rank;
  rep.r = rationally_compatible(proj.basis, L);

  Vec axis_step = Vec::zero(d);
  axis_step[d - 1] = y0;
  rep.axis_step_in_lattice = L.member(axis_step).has_value();
  if (!rep.axis_step_in_lattice) {
    rep.compatible = true;  // suspension doubles into the lattice
    return rep;
  }
  rep.axis_step_rational = true;
  for (int i = 0; i < d; ++i)
    if (!dot(axis_step, L.basis(i)).is_rational()) rep.axis_step_rational = false;
  rep.compatible = rep.axis_step_rational;
  return rep;
}

TwoGeneratorReport check_two_generator(const SpaceGroup& G, const Scalar& y0) {
  const Lattice& L = *G.lattice();
  int d = L.dim();
  auto proj = projected_lattice(G, y0);
  if (proj.rank != d - 1 || proj.rank != 2)
    throw HypothesisNotMet("projected lattice is not planar of rank 2");

  PlanarGroup P = projected_group(G, y0);
  const Vec& g1 = proj.basis[0];
  const Vec& g2 = proj.basis[1];
  TwoGeneratorReport rep;
  bool found = false;
  for (const auto& r : P.reps()) {
    if (r.alpha * g1 == g2) {
      rep.rho = r.alpha;
      found = true;
      break;
    }
  }
  if (!found)
    throw HypothesisNotMet(
        "no point-group element maps one generator to the other");

  Mat sigma = lift_block(Mat::identity(d - 1), -1);
  auto condition_for = [&](const Vec& v) -> char {
    if (G.contains(v.suspend(Scalar(0)), Mat::identity(d))) return 'a';
    for (const auto& r : G.reps()) {
      if (!(r.p.cartesian() == sigma)) continue;
      if (lattice_fixed_horizontal(L, v - r.t.horizontal()).solvable)
        return 'b';
    }
    if (lattice_fixed_horizontal(L, v).solvable) return 'c';
    return '-';
  };
  rep.condition[0] = condition_for(g1);
  rep.condition[1] = condition_for(g2);
  rep.compatible = rep.condition[0] != '-' && rep.condition[1] != '-';
  rep.r = rationally_compatible(proj.basis, L);
  if (rep.compatible && !rep.r)
    throw ComputeError("two-generator criterion held but no multiple found");
  return rep;
}

namespace {

// Canonical minimal vector of the rank-2 module spanned by u, v: smallest
// squared norm, then sign-canonical lexicographic order.
Vec minimal_vector(const Vec& u, const Vec& v) {
  Scalar best = norm2(u);
  std::vector<Vec> shortlist;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      if (a == 0 && b == 0) continue;
      Vec w = Scalar(a) * u + Scalar(b) * v;
      int c = norm2(w).compare(best);
      if (c < 0) {
        best = norm2(w);
        shortlist.clear();
      }
      if (c <= 0) shortlist.push_back(sign_canonical(w));
    }
  std::sort(shortlist.begin(), shortlist.end(), coord_lex_less);
  return shortlist.front();
}

}  // namespace

PlaneClassification hexagonal_classifier(const LatticePtr& L, const Plane& P) {
  PlaneClassification out;
  out.plane = P;
  auto sec = plane_intersection(*L, P);
  out.has_two_points = sec.has_point && sec.rank >= 1;
  for (const auto& g : holohedry(L)) {
    if (!g.is_proper() || g.order() != 3) continue;
    if (cross(rotation_axis(g), P.normal).is_zero()) {
      out.threefold = g;
      break;
    }
  }
  out.hexagonal = out.has_two_points && out.threefold.has_value();
  if (out.hexagonal) {
    Vec v = sec.rank == 2 ? minimal_vector(sec.directions[0], sec.directions[1])
                          : sec.directions[0];
    out.sublattice = {v, out.threefold->apply(v)};
  }
  return out;
}

std::vector<HexagonalPlane> enumerate_hexagonal_planes(const LatticePtr& L) {
  std::vector<Vec> axes;
  for (const auto& g : holohedry(L)) {
    if (!g.is_proper() || g.order() != 3) continue;
    Vec axis = rotation_axis(g);
    bool seen = false;
    for (const auto& a : axes)
      if (cross(a, axis).is_zero()) seen = true;
    if (!seen) axes.push_back(axis);
  }
  std::sort(axes.begin(), axes.end(), coord_lex_less);

  std::vector<HexagonalPlane> out;
  for (const auto& axis : axes) {
    Plane plane{axis, Scalar(0)};
    auto cls = hexagonal_classifier(L, plane);
    if (!cls.hexagonal) continue;
    out.push_back({axis, plane, *cls.threefold, cls.sublattice});
  }
  return out;
}

namespace {

std::optional<Vec> normalized(const Vec& v) {
  auto len = Scalar::sqrt(norm2(v));
  if (!len) return std::nullopt;
  return len->inverse() * v;
}

}  // namespace

FrameChange change_of_coordinates(const Plane& P,
                                  const std::optional<Vec>& anchor) {
  if (!P.offset.is_zero())
    throw std::invalid_argument(
        "change of coordinates expects a plane through the origin");
  if (P.normal.dim != 3 || P.normal.is_zero())
    throw std::invalid_argument("invalid plane normal");
  if (anchor && !dot(*anchor, P.normal).is_zero())
    throw std::invalid_argument("anchor vector is not inside the plane");

  // Canonical in-plane direction when no anchor is given: knock the largest
  // normal component out of a coordinate axis.
  Vec u(3);
  if (anchor) {
    u = *anchor;
  } else {
    int j = 0;
    double best = -1;
    for (int i = 0; i < 3; ++i) {
      double m = std::abs(P.normal[i].to_double());
      if (m >= best) {
        best = m;
        j = i;
      }
    }
    int i0 = j == 0 ? 1 : 0;
    u = Vec::unit(3, i0) - (P.normal[i0] / P.normal[j]) * Vec::unit(3, j);
  }

  FrameChange out;
  auto nhat = normalized(P.normal);
  auto e1 = normalized(u);
  if (nhat && e1) {
    Vec e2 = cross(*nhat, *e1);
    out.exact = true;
    out.A = Mat::from_rows({*e1, e2, *nhat});
    if (!(out.A.transpose() * out.A == Mat::identity(3)))
      throw ComputeError("frame change is not orthogonal");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.approx[i][j] = out.A(i, j).to_double();
    return out;
  }

  // Square root escapes the field: fall back to floats and flag the result.
  double nf[3], uf[3];
  for (int i = 0; i < 3; ++i) {
    nf[i] = P.normal[i].to_double();
    uf[i] = u[i].to_double();
  }
  double nn = std::sqrt(nf[0] * nf[0] + nf[1] * nf[1] + nf[2] * nf[2]);
  double uu = std::sqrt(uf[0] * uf[0] + uf[1] * uf[1] + uf[2] * uf[2]);
  for (int i = 0; i < 3; ++i) {
    nf[i] /= nn;
    uf[i] /= uu;
  }
  double e2f[3] = {nf[1] * uf[2] - nf[2] * uf[1], nf[2] * uf[0] - nf[0] * uf[2],
                   nf[0] * uf[1] - nf[1] * uf[0]};
  for (int j = 0; j < 3; ++j) {
    out.approx[0][j] = uf[j];
    out.approx[1][j] = e2f[j];
    out.approx[2][j] = nf[j];
  }
  out.exact = false;
  return out;
}

SpaceGroup transform_group(const SpaceGroup& G, const Mat& A,
                           const Scalar& scale, const Vec& plane_point) {
  std::vector<Vec> new_basis;
  for (int i = 0; i < G.dim(); ++i)
    new_basis.push_back(scale * (A * G.lattice()->basis(i)));
  LatticePtr L2 = make_lattice(new_basis);

  std::vector<Isometry> reps;
  for (const auto& r : G.reps()) {
    std::array<std::array<int64_t, 3>, 3> m{};
    for (int i = 0; i < G.dim(); ++i)
      for (int j = 0; j < G.dim(); ++j) m[i][j] = r.p.m(i, j);
    Vec t = r.t + r.p.apply(plane_point) - plane_point;
    reps.push_back({scale * (A * t), PointIsometry(L2, m)});
  }
  return SpaceGroup(L2, std::move(reps), false);
}

ProjectionFrame hexagonal_frame(const SpaceGroup& G, const Plane& P) {
  const LatticePtr& L = G.lattice();
  auto cls = hexagonal_classifier(L, P);
  if (!cls.hexagonal)
    throw HypothesisNotMet("plane does not meet a threefold axis of the lattice");
  auto sec = plane_intersection(*L, P);
  Vec v_min = cls.sublattice[0];
  auto len = Scalar::sqrt(norm2(v_min));
  if (!len) throw NormalizationOutsideField();
  Plane through_origin{P.normal, Scalar(0)};
  FrameChange fc = change_of_coordinates(through_origin, v_min);
  if (!fc.exact) throw NormalizationOutsideField();
  ProjectionFrame frame{transform_group(G, fc.A, len->inverse(), sec.point),
                        fc.A, len->inverse(), v_min};
  return frame;
}

ProjectionReport analyze_projection(const SpaceGroup& G, const Scalar& y0) {
  ProjectionReport rep;
  rep.lattice_result = projected_lattice(G, y0);
  rep.compatibility_r = rationally_compatible(rep.lattice_result.basis,
                                              *G.lattice());
  rep.prop_rational = check_prop_rational(G, y0);
  int planar_dim = G.dim() - 1;
  if (planar_dim == 2 && rep.lattice_result.rank == 2)
    rep.hexagonal = is_hexagonal_2d(rep.lattice_result.lattice());
  if (G.dim() == 3) {
    Vec ez = Vec::unit(3, 2);
    rep.witnesses = hexagonal_classifier(G.lattice(), Plane{ez, Scalar(0)});
    if (rep.witnesses->threefold) {
      const Mat& q = rep.witnesses->threefold->cartesian();
      Mat alpha(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) alpha(i, j) = q(i, j);
      rep.hypothesis_verified = descend_check(G, alpha);
    }
  }
  return rep;
}

}  // namespace crystalproj
