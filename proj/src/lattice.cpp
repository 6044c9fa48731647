#include "crystalproj/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crystalproj/errors.hpp"

namespace crystalproj {

namespace {

BigInt nearest_int(const Scalar& q) {
  BigInt m = BigInt(std::llround(q.to_double()));
  Scalar diff = q - Scalar(Rational(m));
  const Scalar half(Rational(1, 2));
  while ((diff + half).sign() < 0) {
    m -= 1;
    diff += Scalar(1);
  }
  while ((diff - half).sign() > 0) {
    m += 1;
    diff -= Scalar(1);
  }
  return m;
}

BigInt exact_floor(const Scalar& q) {
  BigInt m = BigInt(static_cast<long long>(std::floor(q.to_double())));
  Scalar diff = q - Scalar(Rational(m));
  while (diff.sign() < 0) {
    m -= 1;
    diff += Scalar(1);
  }
  while ((diff - Scalar(1)).sign() >= 0) {
    m += 1;
    diff -= Scalar(1);
  }
  return m;
}

}  // namespace

Lattice::Lattice(std::vector<Vec> basis) : basis_(std::move(basis)) {
  dim_ = static_cast<int>(basis_.size());
  if (dim_ < 1 || dim_ > 3)
    throw std::invalid_argument("lattice rank must be 1, 2 or 3");
  for (const auto& v : basis_)
    if (v.dim != dim_)
      throw std::invalid_argument("lattice generators must be square");
  B_ = Mat::from_columns(basis_);
  gram_ = B_.transpose() * B_;
  if (gram_.det().is_zero())
    throw std::invalid_argument("lattice generators are rank deficient");
  Binv_ = B_.inverse();
}

std::optional<IntVec> Lattice::member(const Vec& v) const {
  if (v.dim != dim_) return std::nullopt;
  Vec c = Binv_ * v;
  IntVec out(dim_);
  for (int i = 0; i < dim_; ++i) {
    auto n = c[i].to_integer();
    if (!n) return std::nullopt;
    out[i] = *n;
  }
  return out;
}

Vec Lattice::from_coordinates(const IntVec& c) const {
  Vec v = Vec::zero(dim_);
  for (int i = 0; i < dim_; ++i) v = v + Scalar(Rational(c[i])) * basis_[i];
  return v;
}

Vec Lattice::reduce_mod(const Vec& v) const {
  Vec c = Binv_ * v;
  Vec out = v;
  for (int i = 0; i < dim_; ++i) {
    BigInt m = exact_floor(c[i]);
    if (m != 0) out = out - Scalar(Rational(m)) * basis_[i];
  }
  return out;
}

bool Lattice::same_lattice(const Lattice& other) const {
  if (dim_ != other.dim_) return false;
  for (int i = 0; i < dim_; ++i) {
    if (!member(other.basis_[i])) return false;
    if (!other.member(basis_[i])) return false;
  }
  return true;
}

std::string Lattice::str() const {
  std::string s = "<";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += ", ";
    s += basis_[i].str();
  }
  return s + ">";
}

LatticePtr make_lattice(std::vector<Vec> basis) {
  return std::make_shared<Lattice>(std::move(basis));
}

Lattice dual(const Lattice& L) {
  Mat Bstar = L.basis_matrix() * L.gram().inverse();
  std::vector<Vec> cols;
  for (int j = 0; j < L.dim(); ++j) cols.push_back(Bstar.column(j));
  return Lattice(std::move(cols));
}

LatticePtr dual_ptr(const LatticePtr& L) {
  return std::make_shared<Lattice>(dual(*L));
}

namespace {

std::vector<IntVec> shell_coords(const Lattice& L, const Scalar& r2) {
  int d = L.dim();
  Mat Ginv = L.gram().inverse();
  double r2f = r2.to_double();
  if (r2f <= 0 && r2.sign() <= 0)
    throw std::invalid_argument("shell radius must be positive");
  long long bound[3] = {0, 0, 0};
  for (int i = 0; i < d; ++i) {
    double b2 = r2f * Ginv(i, i).to_double();
    double b = b2 > 0 ? std::sqrt(b2) : 0.0;
    bound[i] = static_cast<long long>(std::floor(b * (1.0 + 1e-6) + 1e-9));
    if (bound[i] > 1000000)
      throw std::invalid_argument("shell enumeration box too large");
  }
  const Mat& G = L.gram();
  std::vector<IntVec> out;
  long long c[3] = {0, 0, 0};
  auto quad = [&]() {
    Scalar s(0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        s += Scalar(Rational(c[i]) * Rational(c[j])) * G(i, j);
    return s;
  };
  long long lo[3], hi[3];
  for (int i = 0; i < 3; ++i) {
    lo[i] = i < d ? -bound[i] : 0;
    hi[i] = i < d ? bound[i] : 0;
  }
  for (c[0] = lo[0]; c[0] <= hi[0]; ++c[0])
    for (c[1] = lo[1]; c[1] <= hi[1]; ++c[1])
      for (c[2] = lo[2]; c[2] <= hi[2]; ++c[2]) {
        if (quad() == r2) {
          IntVec v(d);
          for (int i = 0; i < d; ++i) v[i] = c[i];
          out.push_back(std::move(v));
        }
      }
  return out;
}

}  // namespace

std::vector<Vec> shell(const Lattice& L, const Scalar& r2) {
  std::vector<Vec> out;
  for (const auto& c : shell_coords(L, r2)) out.push_back(L.from_coordinates(c));
  std::sort(out.begin(), out.end(), coord_lex_less);
  return out;
}

PointIsometry::PointIsometry(LatticePtr lattice,
                             std::array<std::array<int64_t, 3>, 3> m)
    : lat_(std::move(lattice)), dim_(lat_->dim()), m_(m) {
  Mat mi(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      mi(i, j) = Scalar(Rational(static_cast<long long>(m_[i][j])));
  const Mat& G = lat_->gram();
  if (mi.transpose() * G * mi != G)
    throw std::invalid_argument("matrix does not preserve the Gram form");
  cart_ = lat_->basis_matrix() * mi * lat_->basis_inverse();
}

int PointIsometry::det() const {
  auto& m = m_;
  switch (dim_) {
    case 1:
      return static_cast<int>(m[0][0]);
    case 2:
      return static_cast<int>(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
    default:
      return static_cast<int>(
          m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
  }
}

bool PointIsometry::is_identity() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (m_[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

int PointIsometry::order() const {
  std::array<std::array<int64_t, 3>, 3> p = m_;
  for (int k = 1; k <= 6; ++k) {
    bool ident = true;
    for (int i = 0; i < dim_ && ident; ++i)
      for (int j = 0; j < dim_ && ident; ++j)
        if (p[i][j] != (i == j ? 1 : 0)) ident = false;
    if (ident) return k;
    std::array<std::array<int64_t, 3>, 3> q{};
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        int64_t s = 0;
        for (int l = 0; l < dim_; ++l) s += p[i][l] * m_[l][j];
        q[i][j] = s;
      }
    p = q;
  }
  throw std::logic_error("crystallographic restriction violated");
}

PointIsometry PointIsometry::compose(const PointIsometry& o) const {
  std::array<std::array<int64_t, 3>, 3> q{};
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      int64_t s = 0;
      for (int l = 0; l < dim_; ++l) s += m_[i][l] * o.m_[l][j];
      q[i][j] = s;
    }
  return PointIsometry(lat_, q);
}

PointIsometry PointIsometry::inverse() const {
  // m^-1 is integral because det = ±1: adjugate over determinant.
  int d = det();
  std::array<std::array<int64_t, 3>, 3> inv{};
  auto& m = m_;
  if (dim_ == 1) {
    inv[0][0] = m[0][0];
  } else if (dim_ == 2) {
    inv[0][0] = d * m[1][1];
    inv[0][1] = -d * m[0][1];
    inv[1][0] = -d * m[1][0];
    inv[1][1] = d * m[0][0];
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
        int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        inv[i][j] = d * (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]);
      }
  }
  return PointIsometry(lat_, inv);
}

bool PointIsometry::operator==(const PointIsometry& o) const {
  if (dim_ != o.dim_) return false;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (m_[i][j] != o.m_[i][j]) return false;
  return true;
}

PointIsometry PointIsometry::identity(LatticePtr lattice) {
  std::array<std::array<int64_t, 3>, 3> m{};
  for (int i = 0; i < lattice->dim(); ++i) m[i][i] = 1;
  return PointIsometry(std::move(lattice), m);
}

namespace {

bool int_mat_less(const PointIsometry& a, const PointIsometry& b) {
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) {
      if (a.m(i, j) != b.m(i, j)) return a.m(i, j) < b.m(i, j);
    }
  return false;
}

}  // namespace

std::vector<PointIsometry> holohedry(const LatticePtr& Lp) {
  const Lattice& L = *Lp;
  int d = L.dim();
  const Mat& G = L.gram();
  std::vector<std::vector<IntVec>> cand(d);
  for (int i = 0; i < d; ++i) cand[i] = shell_coords(L, G(i, i));

  auto pair_g = [&](const IntVec& x, const IntVec& y) {
    Scalar s(0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        s += Scalar(Rational(x[i]) * Rational(y[j])) * G(i, j);
    return s;
  };

  std::vector<PointIsometry> out;
  std::vector<IntVec> chosen(d);
  auto emit = [&]() {
    std::array<std::array<int64_t, 3>, 3> m{};
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i)
        m[i][j] = static_cast<int64_t>(chosen[j][i].convert_to<long long>());
    out.emplace_back(Lp, m);
  };
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == d) {
      emit();
      return;
    }
    for (const auto& c : cand[i]) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pair_g(c, chosen[j]) != G(i, j)) ok = false;
      if (!ok) continue;
      chosen[i] = c;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), int_mat_less);
  return out;
}

Vec rotation_axis(const PointIsometry& g) {
  if (g.dim() != 3)
    throw std::invalid_argument("rotation axes exist in dimension 3 only");
  if (!g.is_proper() || g.is_identity()) throw NoAxis();
  RatMat A(3, RatVec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      A[i][j] = Rational(g.m(i, j) - (i == j ? 1 : 0));
  auto sol = solve_integer(A, RatVec(3, Rational(0)));
  if (sol.kernel.size() != 1) throw NoAxis();
  IntVec axis = make_primitive(sol.kernel[0]);
  Vec v = g.lattice()->from_coordinates(axis);
  return sign_canonical(v);
}

PlaneSection plane_intersection(const Lattice& L, const Plane& P) {
  if (L.dim() != 3 || P.normal.dim != 3)
    throw std::invalid_argument("plane sections require dimension 3");
  if (P.normal.is_zero()) throw std::invalid_argument("plane normal is zero");
  RatMat A(4, RatVec(3));
  RatVec b(4);
  for (int i = 0; i < 3; ++i) {
    Scalar s = dot(P.normal, L.basis(i));
    for (int j = 0; j < 4; ++j) A[j][i] = s.comp(j);
  }
  for (int j = 0; j < 4; ++j) b[j] = P.offset.comp(j);
  auto sol = solve_integer(A, b);
  PlaneSection sec;
  if (!sol.solvable) return sec;
  sec.has_point = true;
  sec.point = L.from_coordinates(sol.particular);
  sec.rank = static_cast<int>(sol.kernel.size());
  for (const auto& k : sol.kernel)
    sec.directions.push_back(L.from_coordinates(k));
  if (sec.rank == 2) {
    gauss_reduce(sec.directions[0], sec.directions[1]);
  } else if (sec.rank == 1) {
    sec.directions[0] = sign_canonical(sec.directions[0]);
  }
  return sec;
}

bool is_hexagonal_2d(const LatticePtr& L) {
  if (L->dim() != 2)
    throw std::invalid_argument("hexagonal test requires a planar lattice");
  auto H = holohedry(L);
  if (H.size() != 12) return false;
  for (const auto& g : H)
    if (g.order() == 6) return true;
  return false;
}

void gauss_reduce(Vec& u, Vec& v) {
  for (;;) {
    if (norm2(v).compare(norm2(u)) < 0) std::swap(u, v);
    Scalar n2 = norm2(u);
    BigInt m = nearest_int(dot(u, v) / n2);
    if (m == 0) break;
    Vec w = v - Scalar(Rational(m)) * u;
    // A tie |<u,v>| = |u|^2/2 leaves the norm unchanged; both choices are
    // reduced, so stop instead of oscillating.
    if (norm2(w).compare(norm2(v)) >= 0) break;
    v = w;
  }
  u = sign_canonical(u);
  v = sign_canonical(v);
  int c = norm2(u).compare(norm2(v));
  if (c > 0 || (c == 0 && coord_lex_less(v, u))) std::swap(u, v);
}

std::optional<std::vector<Vec>> zspan_vectors(const std::vector<Vec>& gens,
                                              int dim) {
  RatMat rows;
  for (const auto& g : gens) {
    RatVec row(4 * dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < 4; ++j) row[4 * i + j] = g[i].comp(j);
    rows.push_back(std::move(row));
  }
  RatMat basis = zspan_basis(rows);
  std::vector<Vec> out;
  for (const auto& row : basis) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i)
      v[i] = Scalar(row[4 * i], row[4 * i + 1], row[4 * i + 2], row[4 * i + 3]);
    out.push_back(std::move(v));
  }
  // Discreteness: the Z-rank must match the dimension of the real span,
  // i.e. the returned vectors must be linearly independent over R.
  int n = static_cast<int>(out.size());
  if (n > dim) return std::nullopt;
  if (n == 2 && dim >= 2) {
    bool indep = false;
    for (int i = 0; i < dim && !indep; ++i)
      for (int j = i + 1; j < dim && !indep; ++j)
        if (!(out[0][i] * out[1][j] - out[0][j] * out[1][i]).is_zero())
          indep = true;
    if (!indep) return std::nullopt;
  }
  if (n == 3) {
    if (Mat::from_columns(out).det().is_zero()) return std::nullopt;
  }
  return out;
}

namespace {

SliceSolution run_slice(const Lattice& L, const std::vector<int>& rows,
                        const std::vector<Scalar>& rhs) {
  int d = L.dim();
  RatMat A;
  RatVec b;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (int j = 0; j < 4; ++j) {
      RatVec row(d);
      for (int i = 0; i < d; ++i)
        row[i] = L.basis_matrix()(rows[r], i).comp(j);
      A.push_back(std::move(row));
      b.push_back(rhs[r].comp(j));
    }
  }
  auto sol = solve_integer(A, b);
  SliceSolution s;
  s.solvable = sol.solvable;
  if (sol.solvable) {
    s.particular = sol.particular;
    s.kernel = sol.kernel;
  }
  return s;
}

}  // namespace

SliceSolution lattice_fixed_last(const Lattice& L, const Scalar& rhs) {
  return run_slice(L, {L.dim() - 1}, {rhs});
}

SliceSolution lattice_fixed_horizontal(const Lattice& L, const Vec& rhs_h) {
  std::vector<int> rows;
  std::vector<Scalar> rhs;
  for (int i = 0; i + 1 < L.dim(); ++i) {
    rows.push_back(i);
    rhs.push_back(rhs_h[i]);
  }
  return run_slice(L, rows, rhs);
}

Scalar axis_step(const Lattice& L) {
  auto axis = lattice_fixed_horizontal(L, Vec::zero(L.dim() - 1));
  if (axis.kernel.size() != 1)
    throw ComputeError("lattice does not meet the projection axis in rank 1");
  Vec g = L.from_coordinates(axis.kernel[0]);
  Scalar step = g[L.dim() - 1];
  return step.sign() < 0 ? -step : step;
}

}  // namespace crystalproj
