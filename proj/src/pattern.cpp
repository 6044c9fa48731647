#include "crystalproj/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "crystalproj/errors.hpp"

namespace crystalproj {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct VecKeyLess {
  bool operator()(const Vec& a, const Vec& b) const {
    return key_compare(a, b) < 0;
  }
};

void cache_floats(std::vector<WaveTerm>& terms) {
  for (auto& t : terms)
    for (int i = 0; i < t.k.dim; ++i) t.kf[i] = t.k[i].to_double();
}

void check_hermitian(const std::vector<WaveTerm>& terms) {
  for (const auto& t : terms) {
    const WaveTerm* mirror = nullptr;
    for (const auto& u : terms)
      if (u.k == -t.k) {
        mirror = &u;
        break;
      }
    double scale = std::abs(t.z) + 1e-300;
    if (!mirror || std::abs(mirror->z - std::conj(t.z)) > 1e-9 * scale)
      throw std::invalid_argument("coefficients are not Hermitian-symmetric");
  }
}

void sort_terms(std::vector<WaveTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const WaveTerm& a, const WaveTerm& b) {
    return key_compare(a.k, b.k) < 0;
  });
}

}  // namespace

InvariantPattern::InvariantPattern(LatticePtr lattice,
                                   std::vector<WaveTerm> terms)
    : lat_(std::move(lattice)), terms_(std::move(terms)) {
  Lattice d = dual(*lat_);
  for (const auto& t : terms_)
    if (!d.member(t.k))
      throw std::invalid_argument("wave vector outside the dual lattice");
  check_hermitian(terms_);
  sort_terms(terms_);
  cache_floats(terms_);
}

const WaveTerm* InvariantPattern::term_at(const Vec& k) const {
  for (const auto& t : terms_)
    if (t.k == k) return &t;
  return nullptr;
}

ProjectedPattern::ProjectedPattern(LatticePtr planar_lattice,
                                   std::vector<WaveTerm> terms)
    : lat_(std::move(planar_lattice)), terms_(std::move(terms)) {
  check_hermitian(terms_);
  sort_terms(terms_);
  cache_floats(terms_);
}

InvariantPattern synthesize_shell(const LatticePtr& L, const Scalar& r2) {
  std::vector<Vec> waves = shell(dual(*L), r2);
  if (waves.empty())
    throw EmptyShell("no dual-lattice vector of squared norm " + r2.str());
  std::vector<WaveTerm> terms;
  for (auto& k : waves) terms.push_back({k, {1.0, 0.0}, {}});
  return InvariantPattern(L, std::move(terms));
}

Scalar locate_shell_r2(const Lattice& dual_lattice, int size) {
  const Mat& G = dual_lattice.gram();
  double r_bound = 0;
  for (int i = 0; i < dual_lattice.dim(); ++i)
    r_bound = std::max(r_bound, G(i, i).to_double());
  for (int round = 0; round < 8; ++round, r_bound *= 2) {
    Mat Ginv = G.inverse();
    long long bound[3] = {0, 0, 0};
    for (int i = 0; i < dual_lattice.dim(); ++i) {
      double b2 = r_bound * Ginv(i, i).to_double();
      bound[i] =
          static_cast<long long>(std::floor(std::sqrt(std::max(b2, 0.0)) *
                                            (1.0 + 1e-6) + 1e-9));
    }
    std::map<Scalar, int, decltype([](const Scalar& a, const Scalar& b) {
               return Scalar::key_compare(a, b) < 0;
             })>
        census;
    int d = dual_lattice.dim();
    long long c[3] = {0, 0, 0};
    long long lo[3], hi[3];
    for (int i = 0; i < 3; ++i) {
      lo[i] = i < d ? -bound[i] : 0;
      hi[i] = i < d ? bound[i] : 0;
    }
    Scalar rb(Rational(static_cast<long long>(std::ceil(r_bound))));
    for (c[0] = lo[0]; c[0] <= hi[0]; ++c[0])
      for (c[1] = lo[1]; c[1] <= hi[1]; ++c[1])
        for (c[2] = lo[2]; c[2] <= hi[2]; ++c[2]) {
          Scalar n2(0);
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              n2 += Scalar(Rational(c[i]) * Rational(c[j])) * G(i, j);
          if (n2.sign() > 0 && n2.compare(rb) <= 0) census[n2] += 1;
        }
    std::vector<std::pair<Scalar, int>> shells(census.begin(), census.end());
    std::sort(shells.begin(), shells.end(),
              [](const auto& a, const auto& b) {
                return a.first.compare(b.first) < 0;
              });
    for (const auto& [n2, count] : shells)
      if (count == size || size == 0) return n2;
  }
  throw EmptyShell("no dual shell of size " + std::to_string(size));
}

InvariantPattern symmetrize(const InvariantPattern& p, const SpaceGroup& G) {
  std::map<Vec, std::complex<double>, VecKeyLess> acc;
  for (const auto& r : G.reps()) {
    const Mat& q = r.p.cartesian();
    for (const auto& t : p.terms()) {
      Vec k2 = q * t.k;
      double phase = -kTwoPi * dot(k2, r.t).to_double();
      acc[k2] += t.z * std::complex<double>(std::cos(phase), std::sin(phase));
    }
  }
  double inv = 1.0 / static_cast<double>(G.reps().size());
  std::vector<WaveTerm> terms;
  for (auto& [k, z] : acc) {
    std::complex<double> w = z * inv;
    if (std::abs(w) == 0.0) continue;
    terms.push_back({k, w, {}});
  }
  return InvariantPattern(p.lattice(), std::move(terms));
}

std::complex<double> band_integral_factor(double kz, double y0) {
  if (kz == 0.0) return {y0, 0.0};
  double t = kTwoPi * kz * y0;
  std::complex<double> numer(std::cos(t) - 1.0, std::sin(t));
  return numer / std::complex<double>(0.0, kTwoPi * kz);
}

ProjectedPattern band_project(const InvariantPattern& p, double y0) {
  if (!(y0 > 0)) throw std::invalid_argument("band width must be positive");
  const Lattice& L = *p.lattice();
  int d = L.dim();
  // Period lattice of every band projection: horizontal part of the
  // height-zero sublattice (finer periods can appear at special widths).
  auto slice0 = lattice_fixed_last(L, Scalar(0));
  std::vector<Vec> gens;
  for (const auto& k : slice0.kernel)
    gens.push_back(L.from_coordinates(k).horizontal());
  if (static_cast<int>(gens.size()) != d - 1)
    throw ComputeError("height-zero sublattice is not full planar rank");
  if (d - 1 == 2) gauss_reduce(gens[0], gens[1]);
  LatticePtr planar = make_lattice(gens);

  std::map<Vec, std::complex<double>, VecKeyLess> acc;
  for (const auto& t : p.terms()) {
    std::complex<double> factor =
        t.k[d - 1].is_zero()
            ? std::complex<double>(y0, 0.0)
            : band_integral_factor(t.kf[d - 1], y0);
    acc[t.k.horizontal()] += t.z * factor;
  }
  std::vector<WaveTerm> terms;
  for (auto& [k, z] : acc) {
    if (std::abs(z) == 0.0) continue;
    terms.push_back({k, z, {}});
  }
  return ProjectedPattern(planar, std::move(terms));
}

namespace {

template <typename Pattern, size_t N>
double eval_impl(const Pattern& p, const std::array<double, N>& x) {
  double re = 0, im = 0, mag = 0;
  for (const auto& t : p.terms()) {
    double phase = 0;
    for (size_t i = 0; i < N; ++i) phase += t.kf[i] * x[i];
    phase *= kTwoPi;
    double c = std::cos(phase), s = std::sin(phase);
    re += t.z.real() * c - t.z.imag() * s;
    im += t.z.real() * s + t.z.imag() * c;
    mag += std::abs(t.z);
  }
  if (std::abs(im) > 1e-12 * (mag + 1e-300))
    throw std::logic_error("imaginary residue exceeds tolerance");
  return re;
}

}  // namespace

double eval(const InvariantPattern& p, const std::array<double, 3>& x) {
  return eval_impl(p, x);
}

double eval(const ProjectedPattern& p, const std::array<double, 2>& x) {
  return eval_impl(p, x);
}

double verify_invariance(const ProjectedPattern& p, const PlanarIsometry& s,
                         int n_samples, uint64_t seed) {
  const Lattice& L = *p.lattice();
  if (L.dim() != 2)
    throw std::invalid_argument("invariance checks run on planar patterns");
  double b1[2] = {L.basis(0)[0].to_double(), L.basis(0)[1].to_double()};
  double b2[2] = {L.basis(1)[0].to_double(), L.basis(1)[1].to_double()};
  double a[2][2], v[2];
  for (int i = 0; i < 2; ++i) {
    v[i] = s.t[i].to_double();
    for (int j = 0; j < 2; ++j) a[i][j] = s.alpha(i, j).to_double();
  }
  std::mt19937_64 rng(seed);
  auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double worst = 0;
  for (int n = 0; n < n_samples; ++n) {
    double u = unit(), w = unit();
    std::array<double, 2> x{u * b1[0] + w * b2[0], u * b1[1] + w * b2[1]};
    // s^-1 x = alpha^T (x - v) since alpha is orthogonal.
    std::array<double, 2> y{a[0][0] * (x[0] - v[0]) + a[1][0] * (x[1] - v[1]),
                            a[0][1] * (x[0] - v[0]) + a[1][1] * (x[1] - v[1])};
    worst = std::max(worst, std::abs(eval(p, y) - eval(p, x)));
  }
  return worst;
}

}  // namespace crystalproj
