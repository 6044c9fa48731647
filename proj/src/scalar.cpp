#include "crystalproj/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <utility>

namespace crystalproj {

namespace {

using boost::multiprecision::numerator;
using boost::multiprecision::denominator;

int rational_sign(const Rational& r) { return r.sign(); }

// Floor of the integer square root, plus a flag for exactness.
std::pair<BigInt, bool> isqrt(const BigInt& n) {
  BigInt r = boost::multiprecision::sqrt(n);
  return {r, r * r == n};
}

// Square root of a nonnegative rational, if it is rational.
std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  auto [sn, okn] = isqrt(numerator(r));
  if (!okn) return std::nullopt;
  auto [sd, okd] = isqrt(denominator(r));
  if (!okd) return std::nullopt;
  return Rational(sn, sd);
}

// Rational enclosure [lo, hi] of sqrt(n) with 2^-bits tightness.
struct Interval {
  Rational lo, hi;
};

Interval surd_enclosure(unsigned n, unsigned bits) {
  BigInt scaled = BigInt(n) << (2 * bits);
  BigInt root = boost::multiprecision::sqrt(scaled);
  BigInt den = BigInt(1) << bits;
  return {Rational(root, den), Rational(root + 1, den)};
}

Interval scale(const Rational& c, const Interval& iv) {
  if (c >= 0) return {c * iv.lo, c * iv.hi};
  return {c * iv.hi, c * iv.lo};
}

}  // namespace

Scalar Scalar::rational(const BigInt& num, const BigInt& den) {
  return Scalar(Rational(num, den));
}

Scalar Scalar::sqrt2(const Rational& coef) { return {0, coef, 0, 0}; }
Scalar Scalar::sqrt3(const Rational& coef) { return {0, 0, coef, 0}; }
Scalar Scalar::sqrt6(const Rational& coef) { return {0, 0, 0, coef}; }

bool Scalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_integer() const {
  return is_rational() && denominator(c_[0]) == 1;
}

Scalar Scalar::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  const Rational &a1 = x.c_[0], &b1 = x.c_[1], &c1 = x.c_[2], &d1 = x.c_[3];
  const Rational &a2 = y.c_[0], &b2 = y.c_[1], &c2 = y.c_[2], &d2 = y.c_[3];
  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
  return {a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
          a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
          a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
          a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2};
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw ZeroDivision();
  // Multiply by the three Galois conjugates; the full product is the field
  // norm, a nonzero rational.
  Scalar conj2{c_[0], -c_[1], c_[2], -c_[3]};
  Scalar conj3{c_[0], c_[1], -c_[2], -c_[3]};
  Scalar conj23{c_[0], -c_[1], -c_[2], c_[3]};
  Scalar cofactor = conj2 * conj3 * conj23;
  Scalar norm = *this * cofactor;
  Rational n = norm.c_[0];
  return {cofactor.c_[0] / n, cofactor.c_[1] / n, cofactor.c_[2] / n,
          cofactor.c_[3] / n};
}

int Scalar::sign() const {
  if (c_[1] == 0 && c_[2] == 0 && c_[3] == 0) return rational_sign(c_[0]);
  // Nonzero surd component means the value is nonzero, so refinement stops.
  for (unsigned bits = 64;; bits *= 2) {
    Interval r2 = surd_enclosure(2, bits);
    Interval r3 = surd_enclosure(3, bits);
    Interval r6 = surd_enclosure(6, bits);
    Interval t2 = scale(c_[1], r2), t3 = scale(c_[2], r3), t6 = scale(c_[3], r6);
    Rational lo = c_[0] + t2.lo + t3.lo + t6.lo;
    Rational hi = c_[0] + t2.hi + t3.hi + t6.hi;
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double Scalar::to_double() const {
  using F = boost::multiprecision::cpp_bin_float_50;
  static const F r2 = boost::multiprecision::sqrt(F(2));
  static const F r3 = boost::multiprecision::sqrt(F(3));
  static const F r6 = boost::multiprecision::sqrt(F(6));
  F v = F(c_[0]) + F(c_[1]) * r2 + F(c_[2]) * r3 + F(c_[3]) * r6;
  return v.convert_to<double>();
}

std::optional<Rational> Scalar::to_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

std::optional<BigInt> Scalar::to_integer() const {
  if (!is_integer()) return std::nullopt;
  return numerator(c_[0]);
}

namespace {

// Tries y = u*sqrt(m) + v*sqrt(n) with m < n square-free in {1,2,3,6}.
// Then y^2 has rational part m*u^2 + n*v^2 and one cross term 2*u*v*sqrt(m*n).
// Given targets R (rational part) and T (with 2*u*v = T), the values m*u^2 and
// n*v^2 are the roots of t^2 - R*t + m*n*T^2/4.
std::optional<Scalar> try_pair_form(int m, int n, const Rational& R,
                                    const Rational& T, int comp_m, int comp_n) {
  Rational disc = R * R - Rational(m * n) * T * T;
  auto droot = rational_sqrt(disc);
  if (!droot) return std::nullopt;
  for (int pick = 0; pick < 2; ++pick) {
    Rational t = pick == 0 ? Rational((R + *droot) / 2)
                           : Rational((R - *droot) / 2);
    auto u = rational_sqrt(t / m);
    if (!u || *u == 0) continue;  // T != 0 here, so u = 0 cannot work
    Rational v = T / (2 * *u);
    if (Rational(m) * (*u) * (*u) + Rational(n) * v * v != R) continue;
    Rational comps[4] = {0, 0, 0, 0};
    comps[comp_m] = *u;
    comps[comp_n] = v;
    return Scalar(comps[0], comps[1], comps[2], comps[3]);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> Scalar::sqrt(const Scalar& x) {
  int s = x.sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return Scalar(0);
  std::optional<Scalar> candidate;
  if (x.is_rational()) {
    const Rational& a = x.c_[0];
    if (auto r = rational_sqrt(a)) candidate = Scalar(*r);
    else if (auto r2 = rational_sqrt(a / 2)) candidate = sqrt2(*r2);
    else if (auto r3 = rational_sqrt(a / 3)) candidate = sqrt3(*r3);
    else if (auto r6 = rational_sqrt(a / 6)) candidate = sqrt6(*r6);
  } else {
    int surd = -1;
    int count = 0;
    for (int i = 1; i < 4; ++i)
      if (x.c_[i] != 0) {
        surd = i;
        ++count;
      }
    if (count == 1) {
      const Rational& R = x.c_[0];
      const Rational& T = x.c_[surd];
      // Two candidate splittings produce each single-surd component.
      switch (surd) {
        case 1:  // a + b*sqrt2 = (u + v*sqrt2)^2 or (u*sqrt3 + v*sqrt6)^2
          candidate = try_pair_form(1, 2, R, T, 0, 1);
          if (!candidate) candidate = try_pair_form(3, 6, R, T / 3, 2, 3);
          break;
        case 2:  // a + c*sqrt3 = (u + v*sqrt3)^2 or (u*sqrt2 + v*sqrt6)^2
          candidate = try_pair_form(1, 3, R, T, 0, 2);
          if (!candidate) candidate = try_pair_form(2, 6, R, T / 2, 1, 3);
          break;
        case 3:  // a + d*sqrt6 = (u + v*sqrt6)^2 or (u*sqrt2 + v*sqrt3)^2
          candidate = try_pair_form(1, 6, R, T, 0, 3);
          if (!candidate) candidate = try_pair_form(2, 3, R, T, 1, 2);
          break;
      }
    }
  }
  if (!candidate) return std::nullopt;
  if (candidate->sign() < 0) candidate = -*candidate;
  if (*candidate * *candidate != x) return std::nullopt;
  return candidate;
}

namespace {

std::string rational_str(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

const char* kSurdName[4] = {"", "r2", "r3", "r6"};

}  // namespace

std::string Scalar::str() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
    std::string term;
    if (i == 0) {
      term = rational_str(mag);
    } else if (mag == 1) {
      term = kSurdName[i];
    } else {
      term = rational_str(mag) + "*" + kSurdName[i];
    }
    if (out.empty()) {
      out = (c_[i] < 0 ? "-" : "") + term;
    } else {
      out += (c_[i] < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " +
                                std::to_string(pos) + ": " + what + " in '" +
                                s + "'");
  }

  BigInt integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return BigInt(s.substr(start, pos - start));
  }

  // factor := 'r2' | 'r3' | 'r6' | integer [ '/' integer ]
  Scalar factor() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'r') {
      if (pos + 1 >= s.size()) fail("dangling 'r'");
      char c = s[pos + 1];
      pos += 2;
      if (c == '2') return Scalar::sqrt2();
      if (c == '3') return Scalar::sqrt3();
      if (c == '6') return Scalar::sqrt6();
      fail("unknown surd (expected r2, r3 or r6)");
    }
    BigInt num = integer();
    // A '/' here binds to the rational only if followed by digits and not by
    // another factor; treat uniformly as division, which is equivalent.
    return Scalar(Rational(num));
  }

  // term := factor { ('*' | '/') factor }
  Scalar term() {
    Scalar v = factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        Scalar f = factor();
        if (f.is_zero()) fail("division by zero");
        v = v / f;
      } else {
        return v;
      }
    }
  }

  Scalar expr() {
    skip_ws();
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    Scalar v = term();
    if (sign < 0) v = -v;
    while (true) {
      skip_ws();
      if (pos >= s.size()) return v;
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else fail("unexpected character");
    }
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Parser p{text};
  Scalar v = p.expr();
  return v;
}

int Scalar::key_compare(const Scalar& x, const Scalar& y) {
  for (int i = 0; i < 4; ++i) {
    if (x.c_[i] < y.c_[i]) return -1;
    if (x.c_[i] > y.c_[i]) return 1;
  }
  return 0;
}

}  // namespace crystalproj
