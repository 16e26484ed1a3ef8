#pragma once

// Exact dense matrix routines over Z and Q used by the lattice layer:
// Bareiss determinants, Gauss-Jordan inverse, Hermite and Smith normal
// forms, and integer left kernels. Matrices are small (at most a few
// hundred rows, 24 columns), so simple cubic algorithms are fine.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace vlplus::exact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using ZMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;
using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline ZMat zmat(std::size_t r, std::size_t c) { return ZMat(r, ZVec(c, 0)); }
inline QMat qmat(std::size_t r, std::size_t c) { return QMat(r, QVec(c, 0)); }

inline ZMat z_identity(std::size_t n) {
  ZMat m = zmat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat q_identity(std::size_t n) {
  QMat m = qmat(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QMat to_q(const ZMat& a) {
  QMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i].assign(a[i].begin(), a[i].end());
  return r;
}

inline QMat q_mul(const QMat& a, const QMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  QMat c = qmat(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline ZMat z_mul(const ZMat& a, const ZMat& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  ZMat c = zmat(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline QVec q_vec_mul(const QVec& v, const QMat& m) {
  std::size_t r = m.size(), c = m[0].size();
  QVec out(c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < c; ++j) out[j] += v[i] * m[i][j];
  }
  return out;
}

// Fraction-free determinant of a square integer matrix.
inline Int det_bareiss(ZMat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

inline Rat det_q(const QMat& a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  // Clear denominators row by row.
  ZMat z = zmat(n, n);
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = 1;
    for (std::size_t j = 0; j < n; ++j) d = lcm(d, denominator(a[i][j]));
    scale /= d;
    for (std::size_t j = 0; j < n; ++j) {
      Rat e = a[i][j] * d;
      z[i][j] = numerator(e);
    }
  }
  return scale * det_bareiss(z);
}

// Gauss-Jordan inverse over Q. Throws if singular.
inline QMat q_inverse(QMat a) {
  std::size_t n = a.size();
  QMat inv = q_identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::runtime_error("q_inverse: singular matrix");
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    Rat d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) { a[c][j] /= d; inv[c][j] /= d; }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

// Solve x * A = b over Q for a full-row-rank A (r x n, r <= n): returns the
// unique x of length r with x A = b when b lies in the row span, and sets
// *ok = false otherwise.
inline QVec solve_left(const QMat& a, const QVec& b, bool* ok) {
  std::size_t r = a.size(), n = a[0].size();
  // Augment [A^T | b^T] and eliminate.
  QMat m = qmat(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = a[j][i];
    m[i][r] = b[i];
  }
  std::size_t lead = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < r && lead < n; ++col) {
    std::size_t p = lead;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[lead], m[p]);
    Rat d = m[lead][col];
    for (std::size_t j = 0; j <= r; ++j) m[lead][j] /= d;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == lead || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = 0; j <= r; ++j) m[i][j] -= f * m[lead][j];
    }
    pivots.push_back(col);
    ++lead;
  }
  QVec x(r, 0);
  if (pivots.size() != r) { *ok = false; return x; }
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m[i][r];
  // Consistency: rows past the pivots must have zero rhs.
  for (std::size_t i = r; i < n; ++i)
    if (m[i][r] != 0) { *ok = false; return x; }
  *ok = true;
  return x;
}

// Row-style Hermite normal form. Returns the nonzero rows H of a lower
// echelon basis of the row lattice; if transform != nullptr it receives a
// unimodular U with U * a = [H; 0].
inline ZMat hnf(ZMat a, ZMat* transform = nullptr) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  ZMat u = z_identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination within column c below row r.
    while (true) {
      std::size_t p = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 && (p == rows || abs(a[i][c]) < abs(a[p][c]))) p = i;
      if (p == rows) break;  // column is zero below r
      std::swap(a[r], a[p]);
      std::swap(u[r], u[p]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Int q = a[i][c] / a[r][c];
        if (a[i][c] - q * a[r][c] != 0 || q != 0) {
          for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
          for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
        }
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
      for (std::size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
    }
    // Reduce the rows above.
    for (std::size_t i = 0; i < r; ++i) {
      Int q = a[i][c] / a[r][c];
      if (a[i][c] - q * a[r][c] < 0) q -= 1;  // floor division remainder in [0, pivot)
      if (q != 0) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[r][j];
      }
    }
    ++r;
  }
  if (transform) *transform = u;
  ZMat h(a.begin(), a.begin() + r);
  return h;
}

// Basis of the left integer kernel {x in Z^rows : x * a = 0}.
inline ZMat left_kernel(const ZMat& a) {
  ZMat u;
  ZMat h = hnf(a, &u);
  ZMat k(u.begin() + h.size(), u.end());
  return k;
}

struct SmithResult {
  std::vector<Int> divisors;  // diagonal of S, d1 | d2 | ...
  ZMat u, v;                  // unimodular, u * a * v = diag(divisors)
};

// Smith normal form of an arbitrary integer matrix.
inline SmithResult smith(ZMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  SmithResult res;
  res.u = z_identity(rows);
  res.v = z_identity(cols);
  auto& u = res.u;
  auto& v = res.v;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) { pi = i; pj = j; }
    if (pi == rows) break;
    std::swap(a[t], a[pi]);
    std::swap(u[t], u[pi]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pj]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][t], v[i][pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[t][j];
      for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      for (std::size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][t];
      for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // repeat with smaller entries in place
    // Divisibility fix-up: pivot must divide everything below-right.
    bool fixed = true;
    for (std::size_t i = t + 1; i < rows && fixed; ++i)
      for (std::size_t j = t + 1; j < cols && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t jj = 0; jj < cols; ++jj) a[t][jj] += a[i][jj];
          for (std::size_t jj = 0; jj < rows; ++jj) u[t][jj] += u[i][jj];
          fixed = false;
        }
    if (!fixed) continue;
    if (a[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
    }
    ++t;
  }
  for (std::size_t i = 0; i < t; ++i) res.divisors.push_back(a[i][i]);
  return res;
}

}  // namespace vlplus::exact
