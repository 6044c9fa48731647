#pragma once
// Exact scalars in the biquadratic field Q(sqrt2, sqrt3).
//
// A value is a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational components kept in
// lowest terms. {1, sqrt2, sqrt3, sqrt6} is a Q-basis, so a value is zero
// exactly when all four components vanish; equality, sign and rationality
// tests are therefore decidable. Signs of nonzero values are determined by
// rational interval enclosures of the surds, refined until the enclosure
// excludes zero.
//
// Text form: signed terms like "1/2 - 1/3*r2 + r6". The parser additionally
// accepts '*' and '/' chains inside a term, e.g. "1/2*r6/6".

#include <array>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystalproj/errors.hpp"

namespace crystalproj {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : c_{Rational(v), Rational(0), Rational(0), Rational(0)} {}
  explicit Scalar(const Rational& r)
      : c_{r, Rational(0), Rational(0), Rational(0)} {}
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Scalar rational(const BigInt& num, const BigInt& den);
  static Scalar sqrt2(const Rational& coef = 1);
  static Scalar sqrt3(const Rational& coef = 1);
  static Scalar sqrt6(const Rational& coef = 1);

  // Component in the basis {1, sqrt2, sqrt3, sqrt6}.
  const Rational& comp(int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  bool operator==(const Scalar& o) const { return c_ == o.c_; }
  bool operator!=(const Scalar& o) const { return c_ != o.c_; }

  // Multiplicative inverse; throws ZeroDivision on zero.
  Scalar inverse() const;

  // Exact sign in {-1, 0, +1}.
  int sign() const;
  int compare(const Scalar& o) const { return (*this - o).sign(); }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  // Nearest binary64; computed through a 50-digit intermediate so the result
  // is correctly rounded even under cancellation.
  double to_double() const;

  std::optional<Rational> to_rational() const;
  std::optional<BigInt> to_integer() const;

  // Exact square root inside the field, when one exists. Covers rational
  // inputs and inputs with a single surd component; returns nullopt otherwise
  // (callers fall back to floats and flag the result non-exact).
  static std::optional<Scalar> sqrt(const Scalar& x);

  std::string str() const;
  static Scalar parse(const std::string& text);  // throws std::invalid_argument

  // Total order on components, for use as container key (not numeric order).
  static int key_compare(const Scalar& x, const Scalar& y);

 private:
  std::array<Rational, 4> c_{};  // a, b, c, d
};

inline bool numeric_less(const Scalar& x, const Scalar& y) {
  return x.compare(y) < 0;
}

}  // namespace crystalproj
