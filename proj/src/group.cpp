#include "crystalproj/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "crystalproj/errors.hpp"

namespace crystalproj {

Isometry Isometry::compose(const Isometry& o) const {
  return {t + p.apply(o.t), p.compose(o.p)};
}

Isometry Isometry::inverse() const {
  PointIsometry pi = p.inverse();
  return {-(pi.apply(t)), pi};
}

namespace {

bool alpha_key_less(const Mat& a, const Mat& b) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      int c = Scalar::key_compare(a(i, j), b(i, j));
      if (c) return c < 0;
    }
  return false;
}

}  // namespace

SpaceGroup::SpaceGroup(LatticePtr lattice, std::vector<Isometry> reps,
                       bool validate)
    : lat_(std::move(lattice)), reps_(std::move(reps)) {
  for (auto& r : reps_) {
    if (r.t.dim != lat_->dim())
      throw std::invalid_argument("representative dimension mismatch");
    r.t = lat_->reduce_mod(r.t);
  }
  std::sort(reps_.begin(), reps_.end(), [](const Isometry& a, const Isometry& b) {
    bool ia = a.p.is_identity(), ib = b.p.is_identity();
    if (ia != ib) return ia;
    for (int i = 0; i < a.p.dim(); ++i)
      for (int j = 0; j < a.p.dim(); ++j)
        if (a.p.m(i, j) != b.p.m(i, j)) return a.p.m(i, j) < b.p.m(i, j);
    return false;
  });
  if (reps_.empty() || !reps_[0].p.is_identity() || !reps_[0].t.is_zero())
    throw std::invalid_argument(
        "representatives must include the identity (zero translation mod "
        "lattice)");
  for (size_t i = 0; i + 1 < reps_.size(); ++i)
    if (reps_[i].p == reps_[i + 1].p)
      throw std::invalid_argument("duplicate orthogonal part among reps");
  if (validate) {
    for (const auto& g : reps_)
      for (const auto& h : reps_) {
        Isometry prod = g.compose(h);
        if (!contains(prod))
          throw std::invalid_argument("representatives not closed mod lattice");
      }
  }
}

SpaceGroup SpaceGroup::symmorphic_holohedral(const LatticePtr& lattice) {
  std::vector<Isometry> reps;
  for (auto& g : holohedry(lattice))
    reps.push_back({Vec::zero(lattice->dim()), g});
  return SpaceGroup(lattice, std::move(reps), false);
}

SpaceGroup SpaceGroup::translations(const LatticePtr& lattice) {
  return SpaceGroup(lattice,
                    {{Vec::zero(lattice->dim()), PointIsometry::identity(lattice)}},
                    false);
}

const Isometry* SpaceGroup::rep_for(const Mat& cartesian) const {
  for (const auto& r : reps_)
    if (r.p.cartesian() == cartesian) return &r;
  return nullptr;
}

bool SpaceGroup::contains(const Vec& t, const Mat& cartesian) const {
  const Isometry* r = rep_for(cartesian);
  if (!r) return false;
  return lat_->member(t - r->t).has_value();
}

std::optional<int> scanning_sign(const Mat& q) {
  int d = q.dim;
  int z = d - 1;
  for (int i = 0; i < z; ++i)
    if (!q(i, z).is_zero() || !q(z, i).is_zero()) return std::nullopt;
  if (q(z, z) == Scalar(1)) return 1;
  if (q(z, z) == Scalar(-1)) return -1;
  return std::nullopt;
}

SpaceGroup scanning_subgroup(const SpaceGroup& G) {
  std::vector<Isometry> reps;
  for (const auto& r : G.reps())
    if (scanning_sign(r.p.cartesian())) reps.push_back(r);
  return SpaceGroup(G.lattice(), std::move(reps), false);
}

PlanarIsometry project_h(const Isometry& g) {
  const Mat& q = g.p.cartesian();
  if (!scanning_sign(q)) throw NotScanningElement();
  int n = q.dim - 1;
  Mat alpha(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alpha(i, j) = q(i, j);
  return {g.t.horizontal(), alpha};
}

Mat lift_block(const Mat& alpha, int sign) {
  Mat q(alpha.dim + 1);
  for (int i = 0; i < alpha.dim; ++i)
    for (int j = 0; j < alpha.dim; ++j) q(i, j) = alpha(i, j);
  q(alpha.dim, alpha.dim) = Scalar(sign);
  return q;
}

BandSubgroup band_subgroup(const SpaceGroup& scanning, const Scalar& y0) {
  if (y0.sign() <= 0) throw std::invalid_argument("band width must be positive");
  const Lattice& L = *scanning.lattice();
  int d = L.dim();
  BandSubgroup out;
  out.y0 = y0;
  Vec axis_step = Vec::zero(d);
  axis_step[d - 1] = y0;
  if (L.member(axis_step)) {
    out.whole = true;
    return out;
  }
  for (const auto& r : scanning.reps()) {
    int sign = *scanning_sign(r.p.cartesian());
    Scalar target = sign > 0 ? Scalar(0) : y0;
    auto slice = lattice_fixed_last(L, target - r.t[d - 1]);
    if (!slice.solvable) continue;
    Vec base = r.t + L.from_coordinates(slice.particular);
    out.cosets.push_back({{base, r.p}, sign < 0});
  }
  return out;
}

bool band_subgroup_contains(const SpaceGroup& scanning, const BandSubgroup& B,
                            const Isometry& g) {
  if (B.whole) return scanning.contains(g);
  for (const auto& c : B.cosets) {
    if (!(c.base.p == g.p)) continue;
    Vec diff = g.t - c.base.t;
    if (!diff[g.t.dim - 1].is_zero()) continue;
    if (scanning.lattice()->member(diff)) return true;
  }
  return false;
}

ProjectedSymmetry is_projected_symmetry(const SpaceGroup& G, const Scalar& y0,
                                        const PlanarIsometry& s) {
  if (y0.sign() <= 0) throw std::invalid_argument("band width must be positive");
  const Lattice& L = *G.lattice();
  int d = L.dim();
  // I: side preserving at height zero.
  if (G.contains(s.t.suspend(Scalar(0)), lift_block(s.alpha, +1)))
    return {true, 1};
  // II: side reversing at the band width.
  if (G.contains(s.t.suspend(y0), lift_block(s.alpha, -1))) return {true, 2};
  // III: the axis step is a lattice vector and some height works.
  Vec axis_step = Vec::zero(d);
  axis_step[d - 1] = y0;
  if (L.member(axis_step)) {
    for (int sign : {+1, -1}) {
      const Isometry* r = G.rep_for(lift_block(s.alpha, sign));
      if (!r) continue;
      Vec rhs = s.t - r->t.horizontal();
      if (lattice_fixed_horizontal(L, rhs).solvable) return {true, 3};
    }
  }
  return {false, 0};
}

const char* tag_name(int tag) {
  switch (tag) {
    case 1: return "I";
    case 2: return "II";
    case 3: return "III";
    default: return "-";
  }
}

PlanarGroup::PlanarGroup(LatticePtr lattice, std::vector<PlanarIsometry> reps,
                         bool validate)
    : lat_(std::move(lattice)), reps_(std::move(reps)) {
  for (auto& r : reps_) r.t = lat_->reduce_mod(r.t);
  std::sort(reps_.begin(), reps_.end(),
            [](const PlanarIsometry& a, const PlanarIsometry& b) {
              bool ia = a.alpha == Mat::identity(a.alpha.dim);
              bool ib = b.alpha == Mat::identity(b.alpha.dim);
              if (ia != ib) return ia;
              return alpha_key_less(a.alpha, b.alpha);
            });
  if (validate) {
    if (reps_.empty() || !(reps_[0].alpha == Mat::identity(lat_->dim())) ||
        !reps_[0].t.is_zero())
      throw std::invalid_argument("planar group must contain the identity");
    for (const auto& g : reps_)
      for (const auto& h : reps_) {
        PlanarIsometry prod{g.t + g.alpha * h.t, g.alpha * h.alpha};
        if (!contains(prod))
          throw std::invalid_argument("planar reps not closed mod lattice");
      }
  }
}

const PlanarIsometry* PlanarGroup::rep_for(const Mat& alpha) const {
  for (const auto& r : reps_)
    if (r.alpha == alpha) return &r;
  return nullptr;
}

bool PlanarGroup::contains(const PlanarIsometry& s) const {
  const PlanarIsometry* r = rep_for(s.alpha);
  if (!r) return false;
  return lat_->member(s.t - r->t).has_value();
}

LatticePtr ProjectedLatticeResult::lattice() const {
  int want = basis.empty() ? 0 : basis[0].dim;
  if (rank == 0 || rank != want) throw DegenerateProjection(rank);
  return make_lattice(basis);
}

ProjectedLatticeResult projected_lattice(const SpaceGroup& G,
                                         const Scalar& y0) {
  if (y0.sign() <= 0) throw std::invalid_argument("band width must be positive");
  const Lattice& L = *G.lattice();
  int d = L.dim();
  std::vector<Vec> gens;

  // Side-preserving translations: the height-zero sublattice.
  auto slice0 = lattice_fixed_last(L, Scalar(0));
  for (const auto& k : slice0.kernel)
    gens.push_back(L.from_coordinates(k).horizontal());

  Vec axis_step = Vec::zero(d);
  axis_step[d - 1] = y0;
  bool whole = L.member(axis_step).has_value();

  Mat sigma = lift_block(Mat::identity(d - 1), -1);
  for (const auto& r : G.reps()) {
    if (!(r.p.cartesian() == sigma)) continue;
    if (whole) {
      // Any height works for the mirror coset.
      gens.push_back(r.t.horizontal());
    } else {
      auto slice = lattice_fixed_last(L, y0 - r.t[d - 1]);
      if (slice.solvable)
        gens.push_back((r.t + L.from_coordinates(slice.particular)).horizontal());
    }
  }
  if (whole) {
    for (int i = 0; i < d; ++i) gens.push_back(L.basis(i).horizontal());
  }

  auto basis = zspan_vectors(gens, d - 1);
  if (!basis)
    throw ComputeError("projected translations do not form a lattice");
  ProjectedLatticeResult out;
  out.rank = static_cast<int>(basis->size());
  out.basis = *basis;
  if (out.rank == 2) {
    gauss_reduce(out.basis[0], out.basis[1]);
  } else if (out.rank == 1) {
    out.basis[0] = sign_canonical(out.basis[0]);
  }
  for (const auto& v : out.basis) {
    auto ps = is_projected_symmetry(G, y0, {v, Mat::identity(d - 1)});
    if (!ps.ok)
      throw ComputeError("projected lattice generator fails the criterion");
    out.condition_trace.push_back(ps.tag);
  }
  return out;
}

PlanarGroup projected_group(const SpaceGroup& G, const Scalar& y0) {
  SpaceGroup scanning = scanning_subgroup(G);
  const Lattice& L = *G.lattice();
  int d = L.dim();
  LatticePtr planar = projected_lattice(G, y0).lattice();

  Vec axis_step = Vec::zero(d);
  axis_step[d - 1] = y0;
  bool whole = L.member(axis_step).has_value();

  std::vector<PlanarIsometry> reps;
  auto add = [&](const Mat& alpha, const Vec& translation) {
    Vec v = planar->reduce_mod(translation);
    for (auto& r : reps) {
      if (r.alpha == alpha) {
        if (!(r.t == v))
          throw ComputeError("inconsistent projected coset translations");
        return;
      }
    }
    reps.push_back({v, alpha});
  };

  for (const auto& r : scanning.reps()) {
    int sign = *scanning_sign(r.p.cartesian());
    PlanarIsometry h = project_h(r);
    if (whole) {
      add(h.alpha, h.t);
    } else {
      Scalar target = sign > 0 ? Scalar(0) : y0;
      auto slice = lattice_fixed_last(L, target - r.t[d - 1]);
      if (slice.solvable)
        add(h.alpha, (r.t + L.from_coordinates(slice.particular)).horizontal());
    }
  }
  return PlanarGroup(planar, std::move(reps));
}

}  // namespace crystalproj
