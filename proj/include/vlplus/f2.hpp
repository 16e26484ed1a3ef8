#pragma once

// Dense linear algebra over the two-element field. Vectors are packed into a
// single 64-bit word (all spaces in this project have dimension <= 24), and
// subspaces are kept in reduced row-echelon form so that equality of the
// stored basis is equality of the subspace.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlplus::f2 {

using Word = std::uint64_t;

inline int popcount(Word w) { return __builtin_popcountll(w); }

inline int parity(Word w) { return __builtin_parityll(w); }

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Word> row;  // bit j of row[i] = entry (i, j)

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), row(r, 0) {
    if (c < 0 || c > 64) throw std::invalid_argument("f2::Matrix: cols must be in [0,64]");
  }

  int get(int i, int j) const { return (row[i] >> j) & 1; }
  void set(int i, int j, int v) {
    if (v) row[i] |= Word(1) << j;
    else row[i] &= ~(Word(1) << j);
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.row[i] = Word(1) << i;
    return m;
  }

  static Matrix from_rows(const std::vector<Word>& rs, int cols) {
    Matrix m(static_cast<int>(rs.size()), cols);
    m.row = rs;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && row == o.row;
  }
};

// Row vector times matrix: result bit pattern of x * M, where x is a
// coefficient mask over the rows of M.
inline Word apply_rows(const Matrix& m, Word x) {
  Word y = 0;
  for (int i = 0; i < m.rows; ++i)
    if ((x >> i) & 1) y ^= m.row[i];
  return y;
}

// Matrix product (rows of a combined through b).
inline Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("f2::mul: shape mismatch");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) c.row[i] = apply_rows(b, a.row[i]);
  return c;
}

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.get(i, j)) t.row[j] |= Word(1) << i;
  return t;
}

struct RrefResult {
  Matrix mat;
  int rank = 0;
  std::vector<int> pivots;
};

// Unique reduced row-echelon form. Zero rows are kept at the bottom.
inline RrefResult rref(const Matrix& m) {
  RrefResult r;
  r.mat = m;
  auto& rs = r.mat.row;
  int lead = 0;
  for (int col = 0; col < m.cols && lead < m.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < m.rows; ++i)
      if ((rs[i] >> col) & 1) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rs[lead], rs[piv]);
    for (int i = 0; i < m.rows; ++i)
      if (i != lead && ((rs[i] >> col) & 1)) rs[i] ^= rs[lead];
    r.pivots.push_back(col);
    ++lead;
  }
  r.rank = lead;
  return r;
}

inline int rank(const Matrix& m) { return rref(m).rank; }

// A subspace of F2^ambient, basis stored in RREF with no zero rows.
struct Subspace {
  int ambient = 0;
  std::vector<Word> basis;  // RREF, nonzero rows only

  Subspace() = default;
  explicit Subspace(int dim) : ambient(dim) {}

  int dim() const { return static_cast<int>(basis.size()); }

  static Subspace span(int ambient, const std::vector<Word>& gens) {
    Matrix m = Matrix::from_rows(gens, ambient);
    RrefResult r = rref(m);
    Subspace s(ambient);
    s.basis.assign(r.mat.row.begin(), r.mat.row.begin() + r.rank);
    return s;
  }

  bool contains(Word v) const {
    for (Word b : basis) {
      Word lead = b & (~b + 1);  // lowest set bit = pivot
      if (v & lead) v ^= b;
    }
    return v == 0;
  }

  // Reduce v modulo the subspace (canonical coset representative).
  Word reduce(Word v) const {
    for (Word b : basis) {
      Word lead = b & (~b + 1);
      if (v & lead) v ^= b;
    }
    return v;
  }

  Subspace extended(Word v) const {
    std::vector<Word> g = basis;
    g.push_back(v);
    return span(ambient, g);
  }

  bool operator==(const Subspace& o) const {
    return ambient == o.ambient && basis == o.basis;
  }
  bool operator<(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (basis.size() != o.basis.size()) return basis.size() < o.basis.size();
    return basis < o.basis;
  }
};

// Complete invariant of the point set: the RREF basis serialized.
inline std::string canonical_key(const Subspace& s) {
  std::string k;
  k.reserve(2 + 8 * s.basis.size());
  k.push_back(static_cast<char>(s.ambient));
  k.push_back(static_cast<char>(s.basis.size()));
  for (Word b : s.basis)
    for (int i = 0; i < 8; ++i) k.push_back(static_cast<char>((b >> (8 * i)) & 0xff));
  return k;
}

// Solution space of m * x^T = 0 (x of length m.cols).
inline Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Word> gens;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    Word v = Word(1) << j;
    for (int i = 0; i < r.rank; ++i)
      if ((r.mat.row[i] >> j) & 1) v |= Word(1) << r.pivots[i];
    gens.push_back(v);
  }
  return Subspace::span(m.cols, gens);
}

// All k-dimensional subspaces passing a hereditary filter (a filter that
// accepts every subspace of anything it accepts). Enumerated by extending
// smaller subspaces; duplicates are removed level by level through the
// canonical RREF representation. Output is sorted by canonical key.
inline std::vector<Subspace> enumerate_subspaces(
    int ambient_dim, int k, const std::function<bool(const Subspace&)>& filter) {
  if (k > ambient_dim) throw std::invalid_argument("enumerate_subspaces: k > ambient_dim");
  std::vector<Subspace> level{Subspace(ambient_dim)};
  if (!filter(level[0])) return {};
  const Word top = Word(1) << ambient_dim;
  for (int d = 0; d < k; ++d) {
    std::vector<Subspace> next;
    for (const Subspace& s : level) {
      for (Word v = 1; v < top; ++v) {
        if (s.contains(v)) continue;
        Subspace t = s.extended(v);
        if (filter(t)) next.push_back(std::move(t));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

}  // namespace vlplus::f2
