#include "crystalproj/intlinalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace crystalproj {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

// g = gcd(a, b) = x*a + y*b
void ext_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x,
             BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

}  // namespace

ColEchelon column_echelon(IntMat A) {
  int m = static_cast<int>(A.size());
  int n = m ? static_cast<int>(A[0].size()) : 0;
  ColEchelon out;
  out.U.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) out.U[i][i] = 1;

  auto combine_cols = [&](int j, int k, const BigInt& p, const BigInt& q,
                          const BigInt& r, const BigInt& s) {
    // (col_j, col_k) <- (p*col_j + q*col_k, r*col_j + s*col_k), det ps-qr = ±1
    for (int row = 0; row < m; ++row) {
      BigInt cj = A[row][j], ck = A[row][k];
      A[row][j] = p * cj + q * ck;
      A[row][k] = r * cj + s * ck;
    }
    for (int row = 0; row < n; ++row) {
      BigInt cj = out.U[row][j], ck = out.U[row][k];
      out.U[row][j] = p * cj + q * ck;
      out.U[row][k] = r * cj + s * ck;
    }
  };
  auto swap_cols = [&](int j, int k) {
    for (int row = 0; row < m; ++row) std::swap(A[row][j], A[row][k]);
    for (int row = 0; row < n; ++row) std::swap(out.U[row][j], out.U[row][k]);
  };
  auto negate_col = [&](int j) {
    for (int row = 0; row < m; ++row) A[row][j] = -A[row][j];
    for (int row = 0; row < n; ++row) out.U[row][j] = -out.U[row][j];
  };

  int pc = 0;
  for (int r = 0; r < m && pc < n; ++r) {
    int j = pc;
    while (j < n && A[r][j] == 0) ++j;
    if (j == n) continue;
    if (j != pc) swap_cols(pc, j);
    for (int k = pc + 1; k < n; ++k) {
      if (A[r][k] == 0) continue;
      BigInt g, x, y;
      ext_gcd(A[r][pc], A[r][k], g, x, y);
      BigInt ap = A[r][pc] / g, ak = A[r][k] / g;
      // [x  -ak; y  ap] has determinant x*ap + y*ak = 1
      combine_cols(pc, k, x, y, -ak, ap);
    }
    if (A[r][pc] < 0) negate_col(pc);
    out.pivots.emplace_back(r, pc);
    ++pc;
  }
  out.rank = pc;
  out.H = std::move(A);
  return out;
}

IntegerSolution solve_integer(const RatMat& A, const RatVec& b) {
  int m = static_cast<int>(A.size());
  int n = m ? static_cast<int>(A[0].size()) : 0;
  // Scale each equation to integer coefficients.
  IntMat Ai(m, IntVec(n));
  IntVec bi(m);
  for (int i = 0; i < m; ++i) {
    BigInt den = denominator(b[i]);
    for (int j = 0; j < n; ++j) den = lcm(den, denominator(A[i][j]));
    if (den == 0) den = 1;
    for (int j = 0; j < n; ++j)
      Ai[i][j] = numerator(A[i][j]) * (den / denominator(A[i][j]));
    bi[i] = numerator(b[i]) * (den / denominator(b[i]));
  }

  ColEchelon ech = column_echelon(std::move(Ai));
  IntegerSolution sol;

  // Forward solve H y = b over the pivots; entries must divide exactly.
  IntVec y(n, 0);
  for (auto [r, c] : ech.pivots) {
    BigInt residual = bi[r];
    for (int j = 0; j < c; ++j) residual -= ech.H[r][j] * y[j];
    if (residual % ech.H[r][c] != 0) return sol;
    y[c] = residual / ech.H[r][c];
  }
  // Rows without pivots must be consistent.
  for (int r = 0; r < m; ++r) {
    BigInt residual = bi[r];
    for (int j = 0; j < n; ++j) residual -= ech.H[r][j] * y[j];
    if (residual != 0) return sol;
  }

  sol.solvable = true;
  sol.particular.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sol.particular[i] += ech.U[i][j] * y[j];
  for (int k = ech.rank; k < n; ++k) {
    IntVec col(n);
    for (int i = 0; i < n; ++i) col[i] = ech.U[i][k];
    sol.kernel.push_back(std::move(col));
  }
  return sol;
}

RatMat zspan_basis(const RatMat& generators) {
  if (generators.empty()) return {};
  int n = static_cast<int>(generators[0].size());
  // One global denominator keeps scaling a module isomorphism.
  BigInt den = 1;
  for (const auto& row : generators)
    for (const auto& v : row) den = lcm(den, denominator(v));
  IntMat M;
  for (const auto& row : generators) {
    IntVec r(n);
    bool zero = true;
    for (int j = 0; j < n; ++j) {
      r[j] = numerator(row[j]) * (den / denominator(row[j]));
      if (r[j] != 0) zero = false;
    }
    if (!zero) M.push_back(std::move(r));
  }
  if (M.empty()) return {};

  // Row echelon with unimodular row operations.
  int m = static_cast<int>(M.size());
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int i = rank; i < m; ++i)
      if (M[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(M[rank], M[pivot]);
    for (int i = rank + 1; i < m; ++i) {
      if (M[i][col] == 0) continue;
      BigInt g, x, y;
      ext_gcd(M[rank][col], M[i][col], g, x, y);
      BigInt ap = M[rank][col] / g, ai = M[i][col] / g;
      for (int j = 0; j < n; ++j) {
        BigInt rj = M[rank][j], ij = M[i][j];
        M[rank][j] = x * rj + y * ij;
        M[i][j] = -ai * rj + ap * ij;
      }
    }
    ++rank;
  }

  RatMat out;
  for (int i = 0; i < rank; ++i) {
    RatVec row(n);
    for (int j = 0; j < n; ++j) row[j] = Rational(M[i][j], den);
    out.push_back(std::move(row));
  }
  return out;
}

IntVec make_primitive(IntVec v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

}  // namespace crystalproj
