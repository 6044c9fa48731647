#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "crystalproj/scalar.hpp"

using namespace crystalproj;

namespace {

Scalar rat(long long n, long long d = 1) {
  return Scalar(Rational(BigInt(n), BigInt(d)));
}

std::mt19937_64 rng_for(uint64_t seed) { return std::mt19937_64(seed); }

Scalar random_scalar(std::mt19937_64& rng, long long num_mag = 1000,
                     long long den_max = 60) {
  std::uniform_int_distribution<long long> num(-num_mag, num_mag);
  std::uniform_int_distribution<long long> den(1, den_max);
  return Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

// Rational enclosure of a scalar from shared surd enclosures; used as an
// independent check of to_double, sidestepping the big-float path.
struct SurdBounds {
  Rational lo[4], hi[4];
  explicit SurdBounds(unsigned bits) {
    lo[0] = hi[0] = 1;
    unsigned n[4] = {1, 2, 3, 6};
    for (int i = 1; i < 4; ++i) {
      BigInt root = boost::multiprecision::sqrt(BigInt(n[i]) << (2 * bits));
      BigInt den = BigInt(1) << bits;
      lo[i] = Rational(root, den);
      hi[i] = Rational(root + 1, den);
    }
  }
  std::pair<Rational, Rational> enclose(const Scalar& x) const {
    Rational l = 0, h = 0;
    for (int i = 0; i < 4; ++i) {
      const Rational& c = x.comp(i);
      if (c >= 0) {
        l += c * lo[i];
        h += c * hi[i];
      } else {
        l += c * hi[i];
        h += c * lo[i];
      }
    }
    return {l, h};
  }
};

}  // namespace

TEST_CASE("addition examples") {
  Scalar x = rat(1) + Scalar::sqrt2();
  Scalar y = rat(2) - Scalar::sqrt2();
  CHECK(x + y == rat(3));
  CHECK(Scalar(0) + Scalar::sqrt6() == Scalar::sqrt6());
  Scalar g1 = rat(1, 2) + Scalar::sqrt3(Rational(1, 6));
  Scalar g2 = rat(1, 2) - Scalar::sqrt3(Rational(1, 6));
  CHECK(g1 + g2 == rat(1));
}

TEST_CASE("multiplication examples") {
  CHECK((rat(1) + Scalar::sqrt2()) * (rat(1) - Scalar::sqrt2()) == rat(-1));
  CHECK(Scalar::sqrt2() * Scalar::sqrt3() == Scalar::sqrt6());
  Scalar half_r2 = Scalar::sqrt2(Rational(1, 2));
  CHECK(half_r2 * half_r2 == rat(1, 2));
}

TEST_CASE("inverse examples") {
  CHECK(Scalar::sqrt6().inverse() == Scalar::sqrt6(Rational(1, 6)));
  CHECK(rat(2).inverse() == rat(1, 2));
  Scalar x = rat(1) + Scalar::sqrt2();
  Scalar inv = x.inverse();
  CHECK(inv == rat(-1) + Scalar::sqrt2());
  CHECK(x * inv == rat(1));
  CHECK_THROWS_AS(Scalar(0).inverse(), ZeroDivision);
}

TEST_CASE("sign examples") {
  CHECK((rat(3, 2) - Scalar::sqrt2()).sign() == 1);
  CHECK(Scalar(0).sign() == 0);
  CHECK((Scalar::sqrt6() - Scalar::sqrt2() - Scalar::sqrt3()).sign() == -1);
}

TEST_CASE("rationality examples") {
  CHECK(rat(5, 3).is_rational());
  CHECK_FALSE(Scalar::sqrt2().is_rational());
  CHECK((Scalar::sqrt2() * Scalar::sqrt2()).is_rational());
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == rat(2));
}

TEST_CASE("to_double examples") {
  CHECK(rat(1, 2).to_double() == 0.5);
  CHECK(Scalar::sqrt2().to_double() == 1.4142135623730951);
  CHECK(Scalar::sqrt6(Rational(-1, 6)).to_double() ==
        doctest::Approx(-0.4082482904638630).epsilon(1e-15));
}

TEST_CASE("field axioms on random elements") {
  auto rng = rng_for(20260809);
  for (int i = 0; i < 300; ++i) {
    Scalar x = random_scalar(rng), y = random_scalar(rng),
           z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("sign is multiplicative") {
  auto rng = rng_for(7);
  for (int i = 0; i < 200; ++i) {
    Scalar x = random_scalar(rng), y = random_scalar(rng);
    CHECK(x.sign() * y.sign() == (x * y).sign());
  }
}

TEST_CASE("rationals are closed under + and *") {
  auto rng = rng_for(11);
  for (int i = 0; i < 100; ++i) {
    Scalar x(Rational(rng() % 2001 - 1000, 1 + rng() % 50));
    Scalar y(Rational(rng() % 2001 - 1000, 1 + rng() % 50));
    CHECK((x + y).is_rational());
    CHECK((x * y).is_rational());
  }
}

TEST_CASE("to_double stays within 4 ulp of an interval enclosure") {
  SurdBounds bounds(128);
  auto rng = rng_for(123);
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int i = 0; i < 100000; ++i) {
    Scalar x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
             Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    double f = x.to_double();
    auto [lo, hi] = bounds.enclose(x);
    double mag = std::abs(f);
    double ulp = std::nextafter(mag, HUGE_VAL) - mag;
    if (ulp == 0) ulp = std::numeric_limits<double>::denorm_min();
    Rational fr(f), u(ulp);
    REQUIRE(fr >= lo - 4 * u);
    REQUIRE(fr <= hi + 4 * u);
  }
}

TEST_CASE("text round trip") {
  CHECK(Scalar::parse("1/2*r6/6") == Scalar::sqrt6(Rational(1, 12)));
  CHECK(Scalar::parse("r6/12") == Scalar::sqrt6(Rational(1, 12)));
  CHECK(Scalar::parse("0").is_zero());
  CHECK(Scalar::parse("-r2 + 3") == rat(3) - Scalar::sqrt2());
  CHECK(Scalar::parse("2/r6") == Scalar::sqrt6(Rational(1, 3)));
  CHECK(Scalar::sqrt6(Rational(1, 12)).str() == "1/12*r6");
  CHECK((rat(1, 2) - Scalar::sqrt2(Rational(1, 3)) + Scalar::sqrt6()).str() ==
        "1/2 - 1/3*r2 + r6");
  CHECK_THROWS_AS(Scalar::parse("1 + q"), std::invalid_argument);

  auto rng = rng_for(99);
  for (int i = 0; i < 500; ++i) {
    Scalar x = random_scalar(rng);
    CHECK(Scalar::parse(x.str()) == x);
    CHECK(Scalar::parse(x.str()).str() == x.str());
  }
}

TEST_CASE("exact square roots in the field") {
  CHECK(Scalar::sqrt(rat(4)) == rat(2));
  CHECK(Scalar::sqrt(rat(2)) == Scalar::sqrt2());
  CHECK(Scalar::sqrt(rat(3)) == Scalar::sqrt3());
  CHECK(Scalar::sqrt(rat(1, 2)) == Scalar::sqrt2(Rational(1, 2)));
  CHECK(Scalar::sqrt(rat(3, 2)) == Scalar::sqrt6(Rational(1, 2)));
  // (1 + sqrt2)^2 = 3 + 2*sqrt2
  Scalar y = *Scalar::sqrt(rat(3) + Scalar::sqrt2(2));
  CHECK(y * y == rat(3) + Scalar::sqrt2(2));
  CHECK_FALSE(Scalar::sqrt(rat(14)).has_value());
  CHECK_FALSE(Scalar::sqrt(rat(-1)).has_value());
}
