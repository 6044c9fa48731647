#pragma once
// Lattice-periodic functions as finite Fourier sums over dual-lattice wave
// vectors, the analytic band projection that integrates them across a slab,
// and numerical invariance checks. Wave vectors stay exact; coefficients are
// binary64 complex numbers - invariance certificates come from the group
// machinery, floats only evaluate and render.

#include <complex>
#include <cstdint>
#include <vector>

#include "crystalproj/group.hpp"

namespace crystalproj {

struct WaveTerm {
  Vec k;                   // exact wave vector, member of the dual lattice
  std::complex<double> z;  // Fourier coefficient
  std::array<double, 3> kf{};  // cached float coordinates
};

// Finite Fourier sum with Hermitian symmetry: the coefficient at -k is the
// conjugate of the coefficient at k, so evaluations are real.
class InvariantPattern {
 public:
  InvariantPattern(LatticePtr lattice, std::vector<WaveTerm> terms);

  const LatticePtr& lattice() const { return lat_; }
  const std::vector<WaveTerm>& terms() const { return terms_; }
  const WaveTerm* term_at(const Vec& k) const;

 private:
  LatticePtr lat_;
  std::vector<WaveTerm> terms_;
};

// Planar counterpart after band projection.
class ProjectedPattern {
 public:
  ProjectedPattern(LatticePtr planar_lattice, std::vector<WaveTerm> terms);

  const LatticePtr& lattice() const { return lat_; }
  const std::vector<WaveTerm>& terms() const { return terms_; }

 private:
  LatticePtr lat_;
  std::vector<WaveTerm> terms_;
};

// All dual-lattice waves of squared wave number r2, unit coefficients.
// Throws EmptyShell when the shell is empty.
InvariantPattern synthesize_shell(const LatticePtr& L, const Scalar& r2);

// Smallest dual-lattice shell with exactly `size` wave vectors (size = 0
// accepts any); this is how figure presets locate the shell for a
// representation of a stated dimension. Throws EmptyShell when none exists
// within the search budget.
Scalar locate_shell_r2(const Lattice& dual_lattice, int size);

// Group average: each representative (v, delta) transports the coefficient
// at k to delta k with the phase exp(-2 pi i <delta k, v>).
InvariantPattern symmetrize(const InvariantPattern& p, const SpaceGroup& G);

// Integrates exp(2 pi i kz z) over 0 <= z <= y0.
std::complex<double> band_integral_factor(double kz, double y0);

// Band projection: terms with equal horizontal wave vector accumulate with
// their band integral factors.
ProjectedPattern band_project(const InvariantPattern& p, double y0);

double eval(const InvariantPattern& p, const std::array<double, 3>& x);
double eval(const ProjectedPattern& p, const std::array<double, 2>& x);

// Max deviation |f(s^-1 x) - f(x)| over seeded uniform samples from the
// fundamental cell of the pattern's lattice.
double verify_invariance(const ProjectedPattern& p, const PlanarIsometry& s,
                         int n_samples, uint64_t seed);

}  // namespace crystalproj
