#pragma once

// Rational lattices in a scaled orthogonal frame. The frame fixes an ambient
// dimension n and a rational scale c, with <u,v> = c * sum u_j v_j; a lattice
// is the integer row span of a rational basis matrix. Bases are canonicalized
// to a rational Hermite form on construction, so equality is structural.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vlplus/codes.hpp"
#include "vlplus/exactmat.hpp"
#include "vlplus/qseries.hpp"

namespace vlplus::lat {

using exact::Int;
using exact::QMat;
using exact::QVec;
using exact::Rat;
using exact::ZMat;
using exact::ZVec;

struct Frame {
  int dim = 0;
  Rat scale = 1;
  bool operator==(const Frame&) const = default;
};

inline Rat frame_ip(const Frame& f, const QVec& u, const QVec& v) {
  if ((int)u.size() != f.dim || (int)v.size() != f.dim)
    throw std::invalid_argument("frame_ip: dimension mismatch");
  Rat s = 0;
  for (int j = 0; j < f.dim; ++j) s += u[j] * v[j];
  return f.scale * s;
}

inline Int denominator_lcm(const QMat& m) {
  Int d = 1;
  for (const auto& row : m)
    for (const auto& x : row) d = boost::multiprecision::lcm(d, denominator(x));
  return d;
}

// Canonical basis of the rational row span: HNF(d * rows) / d is independent
// of the chosen denominator d. Zero rows are dropped.
inline QMat rational_hnf_rows(const QMat& rows) {
  if (rows.empty()) return {};
  Int d = denominator_lcm(rows);
  ZMat zi(rows.size(), ZVec(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      Rat x = rows[i][j] * d;
      zi[i][j] = numerator(x);
    }
  ZMat h = exact::hnf(zi);
  QMat out(h.size(), QVec(rows[0].size()));
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h[i].size(); ++j) out[i][j] = Rat(h[i][j], d);
  return out;
}

class Lattice {
 public:
  Lattice(Frame f, QMat basis_rows)
      : frame_(std::move(f)), basis_(rational_hnf_rows(basis_rows)) {
    for (const auto& row : basis_)
      if ((int)row.size() != frame_.dim)
        throw std::invalid_argument("Lattice: row length != frame dim");
  }

  const Frame& frame() const { return frame_; }
  const QMat& basis() const { return basis_; }
  int rank() const { return (int)basis_.size(); }
  int dim() const { return frame_.dim; }

  bool operator==(const Lattice& o) const {
    return frame_ == o.frame_ && basis_ == o.basis_;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  QMat gram() const {
    int r = rank();
    QMat g = exact::qmat(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        g[i][j] = frame_ip(frame_, basis_[i], basis_[j]);
        g[j][i] = g[i][j];
      }
    return g;
  }

  Rat det() const { return exact::det_q(gram()); }

  // Coordinates of v in this basis, if v lies in the rational span.
  QVec coordinates(const QVec& v, bool* ok) const {
    return exact::solve_left(basis_, v, ok);
  }

  bool contains(const QVec& v) const {
    bool ok = false;
    QVec x = coordinates(v, &ok);
    if (!ok) return false;
    for (const auto& c : x)
      if (denominator(c) != 1) return false;
    return true;
  }

  bool contains(const Lattice& sub) const {
    if (!(frame_ == sub.frame_)) return false;
    for (const auto& row : sub.basis_)
      if (!contains(row)) return false;
    return true;
  }

  Lattice dual() const {
    QMat g = gram();
    if (rank() == 0) throw std::logic_error("dual of rank-0 lattice");
    return Lattice(frame_, exact::q_mul(exact::q_inverse(g), basis_));
  }

  Lattice scaled(const Rat& s) const {
    QMat b = basis_;
    for (auto& row : b)
      for (auto& x : row) x *= s;
    return Lattice(frame_, b);
  }

  Lattice operator+(const Lattice& o) const {
    if (!(frame_ == o.frame_))
      throw std::invalid_argument("lattice sum: frame mismatch");
    QMat rows = basis_;
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return Lattice(frame_, rows);
  }

  // [super : this] as an integer, for full-rank-equal containments.
  Int index_in(const Lattice& super) const {
    if (!super.contains(*this) || super.rank() != rank())
      throw std::invalid_argument("index_in: not a finite-index sublattice");
    Rat ratio = det() / super.det();
    Int n = numerator(ratio), d = denominator(ratio);
    if (d != 1) throw std::logic_error("index_in: non-integral determinant ratio");
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) throw std::logic_error("index_in: det ratio not a square");
    return r;
  }

 private:
  Frame frame_;
  QMat basis_;
};

inline bool is_integral(const Lattice& l) {
  for (const auto& row : l.gram())
    for (const auto& x : row)
      if (denominator(x) != 1) return false;
  return true;
}

inline bool is_even(const Lattice& l) {
  QMat g = l.gram();
  int r = l.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (denominator(g[i][j]) != 1) return false;
      if (i == j && numerator(g[i][j]) % 2 != 0) return false;
    }
  return true;
}

// Elementary divisors > 1 of L*/L.
inline std::vector<Int> discriminant_group(const Lattice& l) {
  Lattice d = l.dual();
  // Express the basis of L in the basis of L*: C * B_dual = B.
  int r = l.rank();
  ZMat c = exact::zmat(r, r);
  for (int i = 0; i < r; ++i) {
    bool ok = false;
    QVec x = exact::solve_left(d.basis(), l.basis()[i], &ok);
    if (!ok) throw std::logic_error("discriminant_group: span mismatch");
    for (int j = 0; j < r; ++j) {
      if (denominator(x[j]) != 1)
        throw std::logic_error("discriminant_group: L not inside L*");
      c[i][j] = numerator(x[j]);
    }
  }
  auto sm = exact::smith(std::move(c));
  std::vector<Int> out;
  for (auto& v : sm.divisors)
    if (boost::multiprecision::abs(v) > 1) out.push_back(boost::multiprecision::abs(v));
  return out;
}

inline bool is_2elementary(const Lattice& l) {
  for (const auto& d : discriminant_group(l))
    if (d != 2) return false;
  return true;
}

// Every dual vector has integer norm. Equivalent to the dual Gram having
// integer diagonal and half-integer off-diagonal entries.
inline bool is_totally_even(const Lattice& l) {
  if (!is_even(l)) return false;
  QMat g = l.dual().gram();
  int r = l.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat x = (i == j) ? g[i][j] : 2 * g[i][j];
      if (denominator(x) != 1) return false;
    }
  return true;
}

// Full-rank intersection via duality: L1 cap L2 = (L1* + L2*)*.
inline Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.rank() != a.dim() || b.rank() != b.dim())
    throw std::invalid_argument("intersect: full-rank lattices required");
  return (a.dual() + b.dual()).dual();
}

// Construction B over a doubly even binary code, in coordinates where the
// frame unit vector contributes scale to the norm. The lattice is spanned by
// 4*chi_w for generators w, 8(e_0 + e_j), and 16 e_0; with scale 1/32 a
// weight-8 word yields a norm-4 vector.
inline Lattice construction_b(const codes::BinaryCode& c, const Frame& f) {
  if (f.dim != c.n) throw std::invalid_argument("construction_b: dim mismatch");
  if (!codes::is_doubly_even(c))
    throw std::invalid_argument("construction_b: code must be doubly even");
  QMat rows;
  for (const auto& g : c.gen.row) {
    QVec row(f.dim, Rat(0));
    for (int j = 0; j < f.dim; ++j)
      if ((g >> j) & 1) row[j] = 4;
    rows.push_back(row);
  }
  for (int j = 1; j < f.dim; ++j) {
    QVec row(f.dim, Rat(0));
    row[0] = 8;
    row[j] = 8;
    rows.push_back(row);
  }
  QVec row(f.dim, Rat(0));
  row[0] = 16;
  rows.push_back(row);
  return Lattice(f, rows);
}

// Ambient linear map acting on row vectors, v -> v * m.
struct Isometry {
  QMat m;

  QVec apply(const QVec& v) const { return exact::q_vec_mul(v, m); }

  bool preserves_frame() const {
    std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat s = 0;
        for (std::size_t k = 0; k < n; ++k) s += m[i][k] * m[j][k];
        if (s != Rat(i == j ? 1 : 0)) return false;
      }
    return true;
  }

  bool maps_into(const Lattice& l) const {
    for (const auto& row : l.basis())
      if (!l.contains(apply(row))) return false;
    return true;
  }

  bool is_automorphism(const Lattice& l) const {
    if (!maps_into(l)) return false;
    Lattice image(l.frame(), exact::q_mul(l.basis(), m));
    return image == l;
  }
};

inline Isometry coordinate_permutation(int n, const std::vector<int>& perm) {
  QMat m = exact::qmat(n, n);
  for (int i = 0; i < n; ++i) m[i][perm[i]] = 1;
  return Isometry{std::move(m)};
}

// Sign flip on the coordinates in the support of mask.
inline Isometry coordinate_signs(int n, std::uint64_t mask) {
  QMat m = exact::qmat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = ((mask >> i) & 1) ? -1 : 1;
  return Isometry{std::move(m)};
}

// Reflection in the hyperplane orthogonal to v.
inline Isometry reflection_in(const Frame& f, const QVec& v) {
  Rat norm = frame_ip(f, v, v);
  if (norm == 0) throw std::invalid_argument("reflection_in: isotropic vector");
  QMat m = exact::qmat(f.dim, f.dim);
  Rat c = 2 * f.scale / norm;
  for (int i = 0; i < f.dim; ++i) {
    m[i][i] = 1;
    for (int j = 0; j < f.dim; ++j) m[i][j] -= c * v[i] * v[j];
  }
  return Isometry{std::move(m)};
}

// {v in L : v * a = sign * v}, saturated in L.
inline Lattice fixed_sublattice(const Lattice& l, const Isometry& iso, int sign) {
  int r = l.rank(), n = l.dim();
  QMat cond = exact::qmat(r, n);
  QMat img = exact::q_mul(l.basis(), iso.m);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j)
      cond[i][j] = img[i][j] - Rat(sign) * l.basis()[i][j];
  Int d = denominator_lcm(cond);
  ZMat zi(r, ZVec(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) zi[i][j] = numerator(Rat(cond[i][j] * d));
  ZMat k = exact::left_kernel(zi);
  QMat rows;
  for (const auto& x : k) {
    QVec row(n, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < n; ++j) row[j] += Rat(x[i]) * l.basis()[i][j];
    rows.push_back(row);
  }
  if (rows.empty()) rows.push_back(QVec(n, Rat(0)));
  return Lattice(l.frame(), rows);
}

// --- Short vector enumeration -------------------------------------------

struct EnumBudget {
  std::uint64_t max_nodes = (1ull << 33);
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("enumeration node budget exceeded") {}
};

namespace detail {

// Enumerates all v = (x + tau) * B with <v,v> <= max_norm, x integral and
// tau the coset offset in basis coordinates. Pruning runs in doubles with a
// small slack; every surviving leaf is confirmed with exact 64-bit integer
// arithmetic on a rescaled Gram matrix. Calls leaf(x, scaled_norm) where
// scaled_norm = <v,v> * scale; the scale (s^2 * dg for the integer scalings
// chosen here) is returned.
template <class F>
Rat enumerate_coset(const Lattice& l, const QVec& tau, const Rat& max_norm,
                    const EnumBudget& budget, F&& leaf) {
  int r = l.rank();
  if (r == 0) {
    if (max_norm >= 0) leaf(std::vector<long long>{}, 0LL);
    return Rat(1);
  }
  QMat g = l.gram();
  Int dg = denominator_lcm(g);
  Int s = 1;
  for (const auto& t : tau) s = boost::multiprecision::lcm(s, denominator(t));

  // Integer data: y = s*x + a, norm * s^2 * dg = y * (dg*g) * y^T.
  std::vector<std::vector<long long>> gz(r, std::vector<long long>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Int e = numerator(Rat(g[i][j] * dg));
      if (boost::multiprecision::abs(e) > Int(1) << 20)
        throw std::overflow_error("enumerate_coset: gram entries too large");
      gz[i][j] = (long long)e;
    }
  long long sl = (long long)s;
  std::vector<long long> a(r);
  for (int i = 0; i < r; ++i) a[i] = (long long)Int(numerator(Rat(tau[i] * s)));
  Rat bound_rat = max_norm * s * s * dg;
  Int bnum = numerator(bound_rat), bden = denominator(bound_rat);
  if (bnum > Int(1) << 40) throw std::overflow_error("enumerate_coset: bound too large");
  long long bn = (long long)bnum, bd = (long long)bden;

  // Double Cholesky of the integer Gram for pruning.
  std::vector<std::vector<double>> q(r, std::vector<double>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) q[i][j] = (double)gz[i][j];
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < i; ++k)
      for (int j = i; j < r; ++j) q[i][j] -= q[k][i] * q[k][j] * q[k][k];
    if (q[i][i] <= 0) throw std::logic_error("enumerate_coset: form not positive");
    for (int j = i + 1; j < r; ++j) q[i][j] /= q[i][i];
  }
  const double slack = 1.0 + 0x1p-20;
  double bound_d = (double)bn / (double)bd * slack + 1e-9;

  // State per level: y-values, exact partial quadratic values, double sums.
  std::vector<long long> y(r, 0);
  std::vector<long long> vexact(r + 1, 0);
  std::vector<double> tpart(r + 1, 0.0);
  std::vector<double> center(r, 0.0);
  std::uint64_t nodes = 0;

  // Iterative depth-first walk from level r-1 down to 0.
  struct LevelState {
    long long y = 0, ymax = 0;
  };
  std::vector<LevelState> st(r);
  int level = r - 1;
  vexact[r] = 0;
  tpart[r] = 0.0;

  auto compute_range = [&](int i) {
    // u = sum_{j>i} q[i][j] * (y_j / s), working in y-units scaled by s.
    double u = 0;
    for (int j = i + 1; j < r; ++j) u += q[i][j] * (double)y[j];
    double rem = (bound_d - tpart[i + 1]) / q[i][i];
    if (rem < 0) rem = 0;
    double sq = std::sqrt(rem);
    // y_i in [-u - sq, -u + sq], y_i ≡ a_i (mod s).
    long long lo = (long long)std::ceil(-u - sq - 1e-9);
    long long hi = (long long)std::floor(-u + sq + 1e-9);
    long long res = ((a[i] % sl) + sl) % sl;
    long long first = lo + ((res - lo) % sl + sl) % sl;
    st[i].y = first;
    st[i].ymax = hi;
    center[i] = u;
  };

  compute_range(level);
  while (true) {
    if (++nodes > budget.max_nodes) throw BudgetExceeded();
    if (st[level].y > st[level].ymax) {
      // backtrack
      ++level;
      if (level >= r) break;
      st[level].y += sl;
      continue;
    }
    long long yi = st[level].y;
    y[level] = yi;
    double t = (double)yi + center[level];
    double contrib = q[level][level] * t * t;
    tpart[level] = tpart[level + 1] + contrib;
    if (tpart[level] > bound_d) {
      st[level].y += sl;
      continue;
    }
    // exact partial value update
    long long pe = 0;
    for (int j = level + 1; j < r; ++j) pe += gz[level][j] * y[j];
    long long ve = vexact[level + 1] + yi * (gz[level][level] * yi + 2 * pe);
    vexact[level] = ve;
    if (level == 0) {
      if ((__int128)ve * bd <= (__int128)bn) {
        std::vector<long long> x(r);
        for (int i = 0; i < r; ++i) x[i] = (y[i] - a[i]) / sl;
        leaf(x, ve);
      }
      st[level].y += sl;
    } else {
      --level;
      compute_range(level);
    }
  }
  return Rat(s) * Rat(s) * Rat(dg);
}

inline QVec coset_coordinates(const Lattice& l, const QVec& offset,
                              const char* who) {
  bool zero = true;
  for (const auto& t : offset) zero = zero && t == 0;
  if (zero) return QVec(l.rank(), Rat(0));
  bool ok = false;
  QVec coords = l.coordinates(offset, &ok);
  if (!ok) throw std::invalid_argument(std::string(who) + ": offset outside span");
  return coords;
}

}  // namespace detail

// Counts of vectors v in offset+L (ambient offset) with <v,v> <= max_norm,
// keyed by norm. Includes the zero vector when it lies in the coset.
inline std::map<Rat, std::uint64_t> coset_norm_counts(
    const Lattice& l, const QVec& offset, const Rat& max_norm,
    const EnumBudget& budget = {}) {
  QVec coords = detail::coset_coordinates(l, offset, "coset_norm_counts");
  std::map<long long, std::uint64_t> scaled;
  Rat scale = detail::enumerate_coset(
      l, coords, max_norm, budget,
      [&](const std::vector<long long>&, long long sn) { ++scaled[sn]; });
  std::map<Rat, std::uint64_t> out;
  for (const auto& [sn, cnt] : scaled) out[Rat(sn) / scale] = cnt;
  return out;
}

// All vectors of exact norm `norm` in offset+L, as ambient rational vectors.
inline std::vector<QVec> vectors_of_norm(const Lattice& l, const QVec& offset,
                                         const Rat& norm,
                                         const EnumBudget& budget = {}) {
  QVec coords = detail::coset_coordinates(l, offset, "vectors_of_norm");
  std::vector<std::pair<std::vector<long long>, long long>> hits;
  Rat scale = detail::enumerate_coset(
      l, coords, norm, budget,
      [&](const std::vector<long long>& x, long long sn) {
        hits.emplace_back(x, sn);
      });
  std::vector<QVec> out;
  for (const auto& [x, sn] : hits) {
    if (Rat(sn) != norm * scale) continue;
    QVec v(l.dim(), Rat(0));
    for (int i = 0; i < l.rank(); ++i) {
      Rat c = Rat(x[i]) + coords[i];
      if (c == 0) continue;
      for (int j = 0; j < l.dim(); ++j) v[j] += c * l.basis()[i][j];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Theta series of offset+L as a q-series in doubled exponents: a vector of
// norm m contributes q^{m/2}, i.e. doubled exponent m. Norms must be integral.
inline qs::QSeries theta_series(const Lattice& l, const QVec& offset, int order2,
                                const EnumBudget& budget = {}) {
  Rat max_norm = order2;
  auto counts = coset_norm_counts(l, offset, max_norm, budget);
  qs::QSeries th(order2);
  for (const auto& [norm, cnt] : counts) {
    if (denominator(norm) != 1)
      throw std::logic_error("theta_series: non-integral norm in coset");
    long e2 = (long)numerator(norm);
    if (e2 <= order2) th.add_coeff2(e2, Int(cnt));
  }
  return th;
}

// Ambient representatives of super/sub for a finite-index pair of equal rank.
// The zero coset comes first; the list has [super : sub] entries.
inline std::vector<QVec> coset_representatives(const Lattice& sub,
                                               const Lattice& super) {
  if (!super.contains(sub) || super.rank() != sub.rank())
    throw std::invalid_argument("coset_representatives: not finite index");
  int r = sub.rank();
  ZMat a = exact::zmat(r, r);
  for (int i = 0; i < r; ++i) {
    bool ok = false;
    QVec x = super.coordinates(sub.basis()[i], &ok);
    if (!ok) throw std::logic_error("coset_representatives: span mismatch");
    for (int j = 0; j < r; ++j) a[i][j] = numerator(x[j]);
  }
  auto sm = exact::smith(a);
  QMat vinv = exact::q_inverse(exact::to_q(sm.v));
  std::vector<Int> d(r);
  Int total = 1;
  for (int i = 0; i < r; ++i) {
    d[i] = abs(sm.divisors[i]);
    if (d[i] == 0) throw std::logic_error("coset_representatives: rank drop");
    total *= d[i];
    if (total > (Int(1) << 20))
      throw std::invalid_argument("coset_representatives: index too large");
  }
  std::vector<QVec> out;
  std::vector<Int> t(r, 0);
  for (;;) {
    // rep with quotient coordinates t: x = t * V^{-1} in super's basis
    QVec x(r, Rat(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) x[j] += Rat(t[i]) * vinv[i][j];
    QVec v(super.dim(), Rat(0));
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < super.dim(); ++k) v[k] += x[j] * super.basis()[j][k];
    out.push_back(std::move(v));
    int pos = r - 1;
    while (pos >= 0 && t[pos] + 1 == d[pos]) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }
  return out;
}

struct RootSystemComponent {
  std::string type;  // "A1".."An", "Dn", "E6", "E7", "E8"
  int rank = 0;
  std::size_t root_count = 0;
  bool operator==(const RootSystemComponent&) const = default;
};

// Connected components of the root system {v in L : <v,v> = root_norm},
// identified by (rank, root count).
inline std::vector<RootSystemComponent> root_components(const Lattice& l,
                                                        const Rat& root_norm) {
  auto roots = vectors_of_norm(l, QVec(l.dim(), Rat(0)), root_norm);
  std::size_t n = roots.size();
  // adjacency only needs vanishing of the inner product, so clear the
  // denominators once and work with machine integers
  Int d = roots.empty() ? Int(1) : denominator_lcm(roots);
  std::vector<std::vector<long long>> zr(n, std::vector<long long>(l.dim()));
  for (std::size_t i = 0; i < n; ++i)
    for (int j = 0; j < l.dim(); ++j) {
      Int e = numerator(Rat(roots[i][j] * d));
      if (abs(e) > (Int(1) << 20))
        throw std::logic_error("root_components: root entries too large");
      zr[i][j] = (long long)e;
    }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      long long dot = 0;
      for (int t = 0; t < l.dim(); ++t) dot += zr[i][t] * zr[j][t];
      if (dot != 0) parent[find(i)] = find(j);
    }
  std::map<std::size_t, QMat> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(roots[i]);
  std::vector<RootSystemComponent> out;
  for (auto& [root, vecs] : groups) {
    ZMat zi;
    Int d = denominator_lcm(vecs);
    for (const auto& v : vecs) {
      ZVec row(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) row[j] = numerator(Rat(v[j] * d));
      zi.push_back(std::move(row));
    }
    int r = (int)exact::hnf(std::move(zi)).size();
    std::size_t c = vecs.size();
    RootSystemComponent comp;
    comp.rank = r;
    comp.root_count = c;
    if (c == (std::size_t)r * (r + 1))
      comp.type = "A" + std::to_string(r);
    else if (r >= 3 && c == (std::size_t)(2 * r * (r - 1)))
      comp.type = "D" + std::to_string(r);
    else if (r == 6 && c == 72)
      comp.type = "E6";
    else if (r == 7 && c == 126)
      comp.type = "E7";
    else if (r == 8 && c == 240)
      comp.type = "E8";
    else
      comp.type = "?" + std::to_string(r) + ":" + std::to_string(c);
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.rank, a.root_count, a.type) <
           std::tie(b.rank, b.root_count, b.type);
  });
  return out;
}

}  // namespace vlplus::lat
