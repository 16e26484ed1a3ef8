#pragma once

// Quadratic spaces over F2, stored as a full value table over the 2^n
// points. Provides the standard plus/minus models, type recognition by
// counting singular vectors, totally singular subspace enumeration,
// orthogonal maps with reflections and the Dickson invariant, orbit
// computations, group orders, and the discriminant form of a 2-elementary
// totally even lattice.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlplus/f2.hpp"
#include "vlplus/lattice.hpp"

namespace vlplus::qspace {

using f2::Matrix;
using f2::Subspace;
using f2::Word;

struct QuadSpace {
  int n = 0;
  std::vector<std::uint8_t> q;  // value at each of the 2^n points

  int eval(Word x) const { return q[x]; }
  int polar(Word x, Word y) const { return q[x ^ y] ^ q[x] ^ q[y]; }

  std::size_t singular_count() const {
    std::size_t c = 0;
    for (auto v : q) c += (v == 0);
    return c;
  }
};

// Standard nondegenerate model in even dimension: hyperbolic planes
// x1 x2 + x3 x4 + ..., with x1^2 + x1 x2 + x2^2 on the first plane for the
// minus type.
inline QuadSpace standard_space(int n, int eps) {
  if (n <= 0 || n % 2 != 0 || n > 24)
    throw std::invalid_argument("standard_space: need even n in [2,24]");
  if (eps != +1 && eps != -1)
    throw std::invalid_argument("standard_space: type must be +1 or -1");
  QuadSpace s;
  s.n = n;
  s.q.resize(std::size_t(1) << n);
  for (Word x = 0; x < (Word(1) << n); ++x) {
    int v = 0;
    for (int i = 0; i + 1 < n; i += 2) v ^= ((x >> i) & (x >> (i + 1))) & 1;
    if (eps < 0) v ^= ((x >> 0) ^ (x >> 1)) & 1;
    s.q[x] = (std::uint8_t)v;
  }
  return s;
}

// +1 / -1 for the two nondegenerate types, 0 otherwise.
inline int type_of(const QuadSpace& s) {
  if (s.n % 2 != 0) return 0;
  std::size_t m = s.n / 2;
  std::size_t half = std::size_t(1) << (2 * m - 1);
  std::size_t quarter = std::size_t(1) << (m - 1);
  std::size_t c = s.singular_count();
  if (c == half + quarter) return +1;
  if (c == half - quarter) return -1;
  return 0;
}

// All totally singular subspaces of dimension k, i.e. subspaces on which q
// vanishes identically. Level-wise extension with a cheap per-vector filter:
// a valid extension of a totally singular S is a singular v orthogonal to S.
inline std::vector<Subspace> totally_singular_subspaces(const QuadSpace& s, int k) {
  const Word top = Word(1) << s.n;
  // pv[v] has bit i = b(e_i, v), so b(x, v) = parity(x & pv[v]).
  std::vector<Word> pv(top, 0);
  for (Word v = 0; v < top; ++v) {
    Word m = 0;
    for (int i = 0; i < s.n; ++i)
      if (s.polar(Word(1) << i, v)) m |= Word(1) << i;
    pv[v] = m;
  }
  std::vector<Subspace> level{Subspace(s.n)};
  for (int d = 0; d < k; ++d) {
    std::vector<Subspace> next;
    for (const Subspace& sub : level) {
      for (Word v = 1; v < top; ++v) {
        if (s.q[v]) continue;
        bool ortho = true;
        for (Word b : sub.basis)
          if (f2::parity(b & pv[v])) { ortho = false; break; }
        if (!ortho || sub.contains(v)) continue;
        next.push_back(sub.extended(v));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return level;
}

inline bool preserves(const QuadSpace& s, const Matrix& m) {
  if (m.rows != s.n || m.cols != s.n) return false;
  for (Word x = 0; x < (Word(1) << s.n); ++x)
    if (s.q[f2::apply_rows(m, x)] != s.q[x]) return false;
  return true;
}

// Reflection in a nonsingular vector: x -> x + b(x, v) v.
inline Matrix reflection(const QuadSpace& s, Word v) {
  if (s.q[v] != 1) throw std::invalid_argument("reflection: q(v) must be 1");
  Matrix m(s.n, s.n);
  for (int i = 0; i < s.n; ++i) {
    Word row = Word(1) << i;
    if (s.polar(Word(1) << i, v)) row ^= v;
    m.row[i] = row;
  }
  return m;
}

inline std::vector<Word> nonsingular_vectors(const QuadSpace& s) {
  std::vector<Word> out;
  for (Word v = 1; v < (Word(1) << s.n); ++v)
    if (s.q[v]) out.push_back(v);
  return out;
}

inline std::vector<Matrix> reflection_generators(const QuadSpace& s) {
  std::vector<Matrix> out;
  for (Word v : nonsingular_vectors(s)) out.push_back(reflection(s, v));
  return out;
}

// Dickson invariant: rank of g + 1 mod 2. Reflections have invariant 1.
inline int dickson(const Matrix& g) {
  Matrix d = g;
  for (int i = 0; i < d.rows; ++i) d.row[i] ^= Word(1) << i;
  return f2::rank(d) % 2;
}

// Generators of the kernel of the Dickson invariant: paired reflections.
inline std::vector<Matrix> omega_generators(const QuadSpace& s) {
  auto ns = nonsingular_vectors(s);
  if (ns.empty()) return {};
  Matrix r0 = reflection(s, ns.front());
  std::vector<Matrix> out;
  for (std::size_t i = 1; i < ns.size(); ++i)
    out.push_back(f2::mul(r0, reflection(s, ns[i])));
  return out;
}

// Orbit partition of the full point set under the given maps; each orbit is
// sorted, and orbits are ordered by least element.
inline std::vector<std::vector<Word>> vector_orbits(
    const QuadSpace& s, const std::vector<Matrix>& gens) {
  const Word top = Word(1) << s.n;
  std::vector<char> seen(top, 0);
  std::vector<std::vector<Word>> orbits;
  for (Word start = 0; start < top; ++start) {
    if (seen[start]) continue;
    std::vector<Word> orbit{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Matrix& g : gens) {
        Word y = f2::apply_rows(g, orbit[head]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

inline Subspace apply_to_subspace(const Matrix& g, const Subspace& s) {
  std::vector<Word> gens;
  for (Word b : s.basis) gens.push_back(f2::apply_rows(g, b));
  return Subspace::span(s.ambient, gens);
}

// Orbit partition of a list of subspaces under the given maps. The maps must
// keep the list set-wise stable.
inline std::vector<std::vector<Subspace>> subspace_orbits(
    const std::vector<Subspace>& items, const std::vector<Matrix>& gens) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < items.size(); ++i)
    index[f2::canonical_key(items[i])] = i;
  std::vector<char> seen(items.size(), 0);
  std::vector<std::vector<Subspace>> orbits;
  for (std::size_t start = 0; start < items.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const Matrix& g : gens) {
        Subspace t = apply_to_subspace(g, items[orbit[head]]);
        auto it = index.find(f2::canonical_key(t));
        if (it == index.end())
          throw std::logic_error("subspace_orbits: image leaves the list");
        if (!seen[it->second]) {
          seen[it->second] = 1;
          orbit.push_back(it->second);
        }
      }
    std::vector<Subspace> out;
    for (std::size_t i : orbit) out.push_back(items[i]);
    std::sort(out.begin(), out.end());
    orbits.push_back(std::move(out));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

// Exact group order from the closed product formula, n = 2m.
inline exact::Int orthogonal_group_order(int m, int eps) {
  exact::Int o = 2;
  o <<= m * (m - 1);
  o *= (exact::Int(1) << m) - eps;
  for (int i = 1; i < m; ++i) o *= (exact::Int(1) << (2 * i)) - 1;
  return o;
}

// The same order computed from the table: brute force in dimension <= 2,
// otherwise transitivity on nonzero singular vectors and reduction to
// (v-perp)/v.
inline exact::Int group_order_from_space(const QuadSpace& s) {
  if (s.n <= 2) {
    exact::Int count = 0;
    const Word top = Word(1) << s.n;
    Matrix m(s.n, s.n);
    std::vector<Word> rows(s.n);
    std::function<void(int)> rec = [&](int i) {
      if (i == s.n) {
        m.row = rows;
        if (f2::rank(m) == s.n && preserves(s, m)) ++count;
        return;
      }
      for (Word w = 0; w < top; ++w) {
        rows[i] = w;
        rec(i + 1);
      }
    };
    rec(0);
    return count;
  }
  Word v = 0;
  std::size_t nsing = 0;
  for (Word x = 1; x < (Word(1) << s.n); ++x)
    if (!s.q[x]) {
      if (!v) v = x;
      ++nsing;
    }
  if (!v) throw std::logic_error("group_order_from_space: no singular vector");
  // Basis of v-perp modulo v.
  std::vector<Word> perp;
  {
    Matrix cond(1, s.n);
    for (int i = 0; i < s.n; ++i)
      if (s.polar(Word(1) << i, v)) cond.set(0, i, 1);
    Subspace k = f2::kernel(cond);
    Subspace vv = Subspace::span(s.n, {v});
    for (Word b : k.basis) {
      Word r = vv.reduce(b);
      if (r) perp.push_back(r);
    }
    Subspace red = Subspace::span(s.n, perp);
    perp = red.basis;
  }
  if ((int)perp.size() != s.n - 2)
    throw std::logic_error("group_order_from_space: bad perp dimension");
  QuadSpace sub;
  sub.n = s.n - 2;
  sub.q.resize(std::size_t(1) << sub.n);
  for (Word x = 0; x < (Word(1) << sub.n); ++x) {
    Word lift = 0;
    for (int i = 0; i < sub.n; ++i)
      if ((x >> i) & 1) lift ^= perp[i];
    sub.q[x] = (std::uint8_t)s.q[lift];
  }
  return exact::Int(nsing) * (exact::Int(1) << (s.n - 2)) *
         group_order_from_space(sub);
}

// --- Discriminant form of a 2-elementary totally even lattice ------------

struct DiscForm {
  QuadSpace space;
  lat::Lattice dual;
  std::vector<exact::QVec> rep;  // ambient representative per label
  std::vector<int> free_cols;    // dual-basis coordinates carrying the labels
  f2::Subspace denom;            // image of L in L*/2L*

  // Label of an arbitrary dual vector.
  Word label_of(const exact::QVec& v) const {
    bool ok = false;
    exact::QVec x = dual.coordinates(v, &ok);
    if (!ok) throw std::invalid_argument("label_of: not in the dual span");
    Word w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (denominator(x[i]) != 1)
        throw std::invalid_argument("label_of: not a dual vector");
      if (numerator(x[i]) % 2 != 0) w |= Word(1) << i;
    }
    w = denom.reduce(w);
    Word label = 0;
    for (std::size_t j = 0; j < free_cols.size(); ++j)
      if ((w >> free_cols[j]) & 1) label |= Word(1) << j;
    return label;
  }
};

inline DiscForm discriminant_form(const lat::Lattice& l) {
  lat::Lattice d = l.dual();
  int r = l.rank();
  // L in dual coordinates, reduced mod 2.
  Matrix c(r, r);
  for (int i = 0; i < r; ++i) {
    bool ok = false;
    exact::QVec x = d.coordinates(l.basis()[i], &ok);
    if (!ok) throw std::logic_error("discriminant_form: span mismatch");
    for (int j = 0; j < r; ++j) {
      if (denominator(x[j]) != 1)
        throw std::logic_error("discriminant_form: L not inside L*");
      if (numerator(x[j]) % 2 != 0) c.set(i, j, 1);
    }
  }
  DiscForm out{QuadSpace{}, d, {}, {}, Subspace::span(r, c.row)};
  std::vector<char> is_pivot(r, 0);
  for (Word b : out.denom.basis) {
    Word lead = b & (~b + 1);
    is_pivot[__builtin_ctzll(lead)] = 1;
  }
  for (int j = 0; j < r; ++j)
    if (!is_pivot[j]) out.free_cols.push_back(j);
  int m = (int)out.free_cols.size();
  if (m > 20) throw std::invalid_argument("discriminant_form: group too large");
  out.space.n = m;
  out.space.q.resize(std::size_t(1) << m);
  out.rep.resize(std::size_t(1) << m);
  for (Word label = 0; label < (Word(1) << m); ++label) {
    exact::QVec v(l.dim(), exact::Rat(0));
    for (int j = 0; j < m; ++j)
      if ((label >> j) & 1) {
        const auto& row = d.basis()[out.free_cols[j]];
        for (int t = 0; t < l.dim(); ++t) v[t] += row[t];
      }
    exact::Rat norm = lat::frame_ip(l.frame(), v, v);
    if (denominator(norm) != 1)
      throw std::invalid_argument("discriminant_form: non-integral dual norm");
    out.space.q[label] = (std::uint8_t)(int)(numerator(norm) % 2 == 0 ? 0 : 1);
    out.rep[label] = std::move(v);
  }
  return out;
}

}  // namespace vlplus::qspace
