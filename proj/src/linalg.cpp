#include "crystalproj/linalg.hpp"

#include <stdexcept>

namespace crystalproj {

Vec Vec::unit(int d, int axis) {
  Vec v(d);
  v[axis] = Scalar(1);
  return v;
}

bool Vec::operator==(const Vec& o) const {
  if (dim != o.dim) return false;
  for (int i = 0; i < dim; ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

bool Vec::is_zero() const {
  for (int i = 0; i < dim; ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) r[i] = c[i] + o.c[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) r[i] = c[i] - o.c[i];
  return r;
}

Vec Vec::operator-() const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) r[i] = -c[i];
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.dim);
  for (int i = 0; i < v.dim; ++i) r[i] = s * v[i];
  return r;
}

Vec Vec::horizontal() const {
  Vec r(dim - 1);
  for (int i = 0; i + 1 < dim; ++i) r[i] = c[i];
  return r;
}

Vec Vec::suspend(const Scalar& last) const {
  Vec r(dim + 1);
  for (int i = 0; i < dim; ++i) r[i] = c[i];
  r[dim] = last;
  return r;
}

std::string Vec::str() const {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ", ";
    s += c[i].str();
  }
  return s + ")";
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s(0);
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

Scalar norm2(const Vec& v) { return dot(v, v); }

Vec cross(const Vec& a, const Vec& b) {
  return Vec(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
             a[0] * b[1] - a[1] * b[0]);
}

bool coord_lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.dim; ++i) {
    int s = a[i].compare(b[i]);
    if (s < 0) return true;
    if (s > 0) return false;
  }
  return false;
}

Vec sign_canonical(const Vec& v) {
  for (int i = 0; i < v.dim; ++i) {
    int s = v[i].sign();
    if (s > 0) return v;
    if (s < 0) return -v;
  }
  return v;
}

int key_compare(const Vec& a, const Vec& b) {
  if (a.dim != b.dim) return a.dim < b.dim ? -1 : 1;
  for (int i = 0; i < a.dim; ++i) {
    int s = Scalar::key_compare(a[i], b[i]);
    if (s) return s;
  }
  return 0;
}

Mat Mat::identity(int d) {
  Mat m(d);
  for (int i = 0; i < d; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  Mat m(static_cast<int>(cols.size()));
  for (int j = 0; j < m.dim; ++j)
    for (int i = 0; i < m.dim; ++i) m(i, j) = cols[j][i];
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  Mat m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) m(i, j) = rows[i][j];
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (dim != o.dim) return false;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (a[i][j] != o.a[i][j]) return false;
  return true;
}

Vec Mat::column(int j) const {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = a[i][j];
  return v;
}

Vec Mat::row(int i) const {
  Vec v(dim);
  for (int j = 0; j < dim; ++j) v[j] = a[i][j];
  return v;
}

Mat Mat::transpose() const {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = a[j][i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Scalar s(0);
      for (int k = 0; k < dim; ++k) s += a[i][k] * o.a[k][j];
      m(i, j) = s;
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    Scalar s(0);
    for (int k = 0; k < dim; ++k) s += a[i][k] * v[k];
    r[i] = s;
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = a[i][j] + o.a[i][j];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = a[i][j] - o.a[i][j];
  return m;
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat r(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r(i, j) = s * m(i, j);
  return r;
}

Scalar Mat::det() const {
  switch (dim) {
    case 1:
      return a[0][0];
    case 2:
      return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    case 3:
      return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
             a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
             a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    default:
      throw std::logic_error("unsupported matrix dimension");
  }
}

Mat Mat::inverse() const {
  Scalar d = det();
  if (d.is_zero()) throw ZeroDivision();
  Scalar inv = d.inverse();
  Mat m(dim);
  if (dim == 1) {
    m(0, 0) = inv;
    return m;
  }
  if (dim == 2) {
    m(0, 0) = inv * a[1][1];
    m(0, 1) = -(inv * a[0][1]);
    m(1, 0) = -(inv * a[1][0]);
    m(1, 1) = inv * a[0][0];
    return m;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      m(i, j) = inv * (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]);
    }
  return m;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < dim; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < dim; ++j) {
      if (j) s += ", ";
      s += a[i][j].str();
    }
  }
  return s + "]";
}

}  // namespace crystalproj
