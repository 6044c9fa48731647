#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "crystalproj/errors.hpp"
#include "crystalproj/pattern.hpp"
#include "crystalproj/projection.hpp"
#include "fixtures.hpp"

using namespace crystalproj;
using namespace crystalproj::testing;

namespace {

// Quadrature oracle for the band integral, independent of the analytic form.
std::complex<double> simpson_band_integral(double kz, double y0, int panels) {
  auto f = [&](double z) {
    double t = 2.0 * std::numbers::pi * kz * z;
    return std::complex<double>(std::cos(t), std::sin(t));
  };
  double h = y0 / panels;
  std::complex<double> sum = f(0.0) + f(y0);
  for (int i = 1; i < panels; ++i)
    sum += f(i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * (h / 3.0);
}

LatticePtr bcc_std() {
  return make_lattice({Vec(rat(1), rat(0), rat(0)), Vec(rat(0), rat(1), rat(0)),
                       Vec(rat(1, 2), rat(1, 2), rat(1, 2))});
}

LatticePtr fcc_std() {
  return make_lattice({Vec(rat(0), rat(1, 2), rat(1, 2)),
                       Vec(rat(1, 2), rat(0), rat(1, 2)),
                       Vec(rat(1, 2), rat(1, 2), rat(0))});
}

SpaceGroup frame_group(const LatticePtr& L) {
  Plane p1{Vec(rat(1), rat(1), rat(-1)), rat(0)};
  return hexagonal_frame(SpaceGroup::symmorphic_holohedral(L), p1).group;
}

InvariantPattern cubic_u() {
  return synthesize_shell(cubic_hex_frame(), rat(2));
}

}  // namespace

TEST_CASE("shell synthesis and representation sizes") {
  InvariantPattern u = cubic_u();
  CHECK(u.terms().size() == 6);
  for (const auto& t : u.terms()) CHECK(t.z == std::complex<double>(1.0, 0.0));

  SpaceGroup bcc = frame_group(bcc_std());
  Lattice bdual = dual(*bcc.lattice());
  Scalar r2b = locate_shell_r2(bdual, 12);
  CHECK(synthesize_shell(bcc.lattice(), r2b).terms().size() == 12);

  SpaceGroup fcc = frame_group(fcc_std());
  Scalar r2f = locate_shell_r2(dual(*fcc.lattice()), 8);
  CHECK(synthesize_shell(fcc.lattice(), r2f).terms().size() == 8);

  CHECK_THROWS_AS(synthesize_shell(cubic_hex_frame(), rat(1, 7)), EmptyShell);
}

TEST_CASE("group averaging") {
  auto frame = cubic_hex_frame();
  SpaceGroup G = SpaceGroup::symmorphic_holohedral(frame);
  InvariantPattern u = cubic_u();
  InvariantPattern su = symmetrize(u, G);
  REQUIRE(su.terms().size() == 6);
  for (const auto& t : su.terms()) {
    const WaveTerm* orig = u.term_at(t.k);
    REQUIRE(orig != nullptr);
    CHECK(std::abs(t.z - orig->z) < 1e-14);
  }

  // A Hermitian pair passes through a translations-only group untouched.
  auto z3 = cubic_z3();
  Vec k(rat(1), rat(0), rat(0));
  std::vector<WaveTerm> pair = {{k, {0.5, 0.25}, {}}, {-k, {0.5, -0.25}, {}}};
  InvariantPattern single(z3, pair);
  InvariantPattern ssingle = symmetrize(single, SpaceGroup::translations(z3));
  REQUIRE(ssingle.terms().size() == 2);
  CHECK(std::abs(ssingle.term_at(k)->z - std::complex<double>(0.5, 0.25)) <
        1e-15);

  // Averaging over {1, mirror} splits the weight across the orbit of a
  // tilted wave vector.
  Vec kt(rat(1), rat(0), rat(1));
  InvariantPattern tilted(
      z3, {{kt, {0.5, 0.25}, {}}, {-kt, {0.5, -0.25}, {}}});
  auto mirror = PointIsometry(z3, {{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}});
  SpaceGroup M(z3, {{Vec::zero(3), PointIsometry::identity(z3)},
                    {Vec::zero(3), mirror}});
  InvariantPattern avg = symmetrize(tilted, M);
  CHECK(avg.terms().size() == 4);
  double expect = std::abs(std::complex<double>(0.5, 0.25)) / 2;
  for (const auto& t : avg.terms())
    CHECK(std::abs(t.z) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("band projection against quadrature") {
  // Constant pattern integrates to the band width.
  auto z3 = cubic_z3();
  InvariantPattern constant(z3, {{Vec::zero(3), {1.0, 0.0}, {}}});
  ProjectedPattern pc = band_project(constant, 0.73);
  REQUIRE(pc.terms().size() == 1);
  CHECK(pc.terms()[0].z.real() == doctest::Approx(0.73).epsilon(1e-15));
  CHECK(eval(pc, {0.31, -0.12}) == doctest::Approx(0.73).epsilon(1e-12));

  // Height-free wave: coefficient scales by y0.
  Vec k(rat(1), rat(0), rat(0));
  InvariantPattern flat(z3, {{k, {1.0, 0.0}, {}}, {-k, {1.0, 0.0}, {}}});
  ProjectedPattern pf = band_project(flat, 0.4);
  for (const auto& t : pf.terms())
    CHECK(std::abs(t.z - std::complex<double>(0.4, 0.0)) < 1e-15);

  // Every term of the worked-example pattern matches composite Simpson.
  InvariantPattern u = cubic_u();
  for (double y0 : {0.2041241452319315 /* 1/(2 sqrt6) */, 0.37, 1.0,
                    1.224744871391589 /* 3/sqrt6 */}) {
    for (const auto& t : u.terms()) {
      std::complex<double> analytic =
          t.k[2].is_zero() ? std::complex<double>(y0, 0.0)
                           : band_integral_factor(t.kf[2], y0);
      std::complex<double> quad = simpson_band_integral(t.kf[2], y0, 10000);
      CHECK(std::abs(analytic - quad) < 1e-8);
    }
  }
}

TEST_CASE("hermitian symmetry survives averaging and projection") {
  auto frame = cubic_hex_frame();
  SpaceGroup G = SpaceGroup::symmorphic_holohedral(frame);
  InvariantPattern su = symmetrize(cubic_u(), G);
  for (const auto& t : su.terms()) {
    const WaveTerm* m = su.term_at(-t.k);
    REQUIRE(m != nullptr);
    CHECK(std::abs(m->z - std::conj(t.z)) < 1e-14);
  }
  ProjectedPattern p = band_project(su, 0.37);
  for (const auto& t : p.terms()) {
    bool found = false;
    for (const auto& u2 : p.terms())
      if (u2.k == -t.k && std::abs(u2.z - std::conj(t.z)) < 1e-14) found = true;
    CHECK(found);
  }
}

TEST_CASE("evaluation") {
  InvariantPattern u = cubic_u();
  CHECK(eval(u, {0.0, 0.0, 0.0}) == 6.0);

  auto z3 = cubic_z3();
  InvariantPattern constant(z3, {{Vec::zero(3), {1.0, 0.0}, {}}});
  CHECK(eval(constant, {0.9, -2.4, 3.3}) == 1.0);

  auto frame = cubic_hex_frame();
  std::array<double, 3> l1 = {1.0, 0.0, 0.0};
  CHECK(std::abs(eval(u, l1) - eval(u, {0, 0, 0})) < 1e-9);
  std::array<double, 3> l3 = {0.5, frame->basis(2)[1].to_double(),
                              frame->basis(2)[2].to_double()};
  CHECK(std::abs(eval(u, l3) - 6.0) < 1e-9);
}

TEST_CASE("invariance certificates across the depth classes") {
  auto frame = cubic_hex_frame();
  SpaceGroup G = SpaceGroup::symmorphic_holohedral(frame);
  InvariantPattern u = cubic_u();

  auto check_group = [&](const Scalar& y0, double positive_bound) {
    ProjectedPattern p = band_project(u, y0.to_double());
    PlanarGroup P = projected_group(G, y0);
    for (const auto& r : P.reps())
      CHECK(verify_invariance(p, r, 1000, 2026) <= positive_bound);
    // Unit-cell translations are exact periods.
    PlanarIsometry shift{p.lattice()->basis(0), Mat::identity(2)};
    CHECK(verify_invariance(p, shift, 1000, 2026) <= 1e-9);
    return p;
  };

  // Generic depth: order-6 planar group, pure rotation by 60 degrees fails.
  ProjectedPattern generic = check_group(depth_half_sixth(), 1e-9);
  PlanarIsometry rot60{Vec::zero(2), rot60_2d()};
  CHECK(verify_invariance(generic, rot60, 1000, 2026) >= 1e-3);

  // Glide depths: the sixfold comes with its pinned translation.
  ProjectedPattern row2 = check_group(depth_sixth(2), 1e-9);
  CHECK(verify_invariance(row2, rot60, 1000, 2026) >= 1e-3);
  PlanarIsometry glide{tau(), rot60_2d()};
  CHECK(verify_invariance(row2, glide, 1000, 2026) <= 1e-9);

  ProjectedPattern row3 = check_group(depth_sixth(1), 1e-9);
  PlanarIsometry glide3{tau_prime(), rot60_2d()};
  CHECK(verify_invariance(row3, glide3, 1000, 2026) <= 1e-9);

  // Full period: the band integral of every mode vanishes, so the projected
  // pattern is numerically zero and all checks pass trivially.
  ProjectedPattern full = band_project(u, depth_sixth(3).to_double());
  double amplitude = 0;
  for (const auto& t : full.terms()) amplitude += std::abs(t.z);
  CHECK(amplitude < 1e-12);

  // The body-centred variant has height-free modes, so its full-period
  // projection is a genuine hexagonal pattern with the full symmetry.
  SpaceGroup bcc = frame_group(bcc_std());
  Scalar r2b = locate_shell_r2(dual(*bcc.lattice()), 12);
  InvariantPattern ub = synthesize_shell(bcc.lattice(), r2b);
  Scalar full_b = Scalar::sqrt6(Rational(1, 4));  // 3/(2 sqrt6)
  ProjectedPattern pb = band_project(ub, full_b.to_double());
  double amp_b = 0;
  for (const auto& t : pb.terms()) amp_b += std::abs(t.z);
  CHECK(amp_b > 0.1);
  PlanarGroup Pb = projected_group(bcc, full_b);
  CHECK(Pb.reps().size() == 12);
  for (const auto& r : Pb.reps())
    CHECK(verify_invariance(pb, r, 500, 7) <= 1e-9);
}

TEST_CASE("determinism of the sampler") {
  auto frame = cubic_hex_frame();
  InvariantPattern u = cubic_u();
  ProjectedPattern p = band_project(u, 0.3);
  PlanarIsometry rot{Vec::zero(2), rot60_2d()};
  CHECK(verify_invariance(p, rot, 200, 99) ==
        verify_invariance(p, rot, 200, 99));
  CHECK(verify_invariance(p, rot, 200, 99) !=
        verify_invariance(p, rot, 200, 100));
}
