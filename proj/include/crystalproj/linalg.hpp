#pragma once
// Small dense vectors and matrices over the exact scalar field, dimension 1-3.
// Determinants and inverses use cofactor expansion; everything is exact.

#include <array>
#include <string>
#include <vector>

#include "crystalproj/scalar.hpp"

namespace crystalproj {

struct Vec {
  int dim = 0;
  std::array<Scalar, 3> c{};

  Vec() = default;
  explicit Vec(int d) : dim(d) {}
  Vec(Scalar x, Scalar y) : dim(2), c{std::move(x), std::move(y), Scalar(0)} {}
  Vec(Scalar x, Scalar y, Scalar z)
      : dim(3), c{std::move(x), std::move(y), std::move(z)} {}
  static Vec zero(int d) { return Vec(d); }
  static Vec unit(int d, int axis);

  Scalar& operator[](int i) { return c[i]; }
  const Scalar& operator[](int i) const { return c[i]; }

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }
  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  friend Vec operator*(const Scalar& s, const Vec& v);

  // First dim-1 coordinates (the part parallel to the projection plane).
  Vec horizontal() const;
  // Embeds at the given last coordinate, one dimension up.
  Vec suspend(const Scalar& last) const;

  std::string str() const;
};

Scalar dot(const Vec& a, const Vec& b);
Scalar norm2(const Vec& v);
Vec cross(const Vec& a, const Vec& b);  // dim 3 only

// Orders by exact sign of coordinate differences (refines float ordering).
bool coord_lex_less(const Vec& a, const Vec& b);
// Flips the sign so the first nonzero coordinate is positive.
Vec sign_canonical(const Vec& v);
// Component-wise key order for containers.
int key_compare(const Vec& a, const Vec& b);

struct Mat {
  int dim = 0;
  std::array<std::array<Scalar, 3>, 3> a{};

  Mat() = default;
  explicit Mat(int d) : dim(d) {}
  static Mat identity(int d);
  static Mat from_columns(const std::vector<Vec>& cols);
  static Mat from_rows(const std::vector<Vec>& rows);

  Scalar& operator()(int r, int c) { return a[r][c]; }
  const Scalar& operator()(int r, int c) const { return a[r][c]; }

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Vec column(int j) const;
  Vec row(int i) const;
  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  friend Mat operator*(const Scalar& s, const Mat& m);

  Scalar det() const;
  Mat inverse() const;  // throws ZeroDivision when singular
  Vec solve(const Vec& rhs) const { return inverse() * rhs; }

  std::string str() const;
};

}  // namespace crystalproj
