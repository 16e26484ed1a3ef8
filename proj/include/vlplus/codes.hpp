#pragma once

// Binary linear codes: the extended Golay code and its distinguished
// sextets, the extended Hamming code, first-order Reed-Muller, weight
// enumerators and parity subcodes.
//
// The Golay code is presented as the extended quadratic residue code of
// length 23+1 on coordinates {0,...,22, infinity=23}. That presentation
// makes a useful chunk of its symmetry group available as Moebius maps on
// the projective line over F_23; every claimed property of the fixed
// generator matrix is re-validated by the tests.

#include "vlplus/f2.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlplus::codes {

using f2::Matrix;
using f2::Subspace;
using f2::Word;

struct BinaryCode {
  int n = 0;
  Matrix gen;  // rows independent

  int dim() const { return gen.rows; }

  bool contains(Word w) const {
    Subspace s = Subspace::span(n, gen.row);
    return s.contains(w);
  }
};

inline BinaryCode make_code(int n, std::vector<Word> rows) {
  auto r = f2::rref(Matrix::from_rows(rows, n));
  BinaryCode c;
  c.n = n;
  c.gen = Matrix::from_rows(
      std::vector<Word>(r.mat.row.begin(), r.mat.row.begin() + r.rank), n);
  return c;
}

inline std::map<int, long> weight_enumerator(const BinaryCode& c) {
  if (c.dim() > 28)
    throw std::invalid_argument("weight_enumerator: dim > 28 (exhaustive enumeration bound)");
  std::map<int, long> dist;
  const std::uint32_t count = 1u << c.dim();
  Word w = 0;
  dist[0] += 1;
  for (std::uint32_t x = 1; x < count; ++x) {
    // Gray-code walk: flip one generator per step.
    int bit = __builtin_ctz(x);
    w ^= c.gen.row[bit];
    ++dist[f2::popcount(w)];
  }
  return dist;
}

inline std::vector<Word> words_of_weight(const BinaryCode& c, int weight) {
  if (c.dim() > 28) throw std::invalid_argument("words_of_weight: dim > 28");
  std::vector<Word> out;
  const std::uint32_t count = 1u << c.dim();
  Word w = 0;
  for (std::uint32_t x = 1; x < count; ++x) {
    int bit = __builtin_ctz(x);
    w ^= c.gen.row[bit];
    if (f2::popcount(w) == weight) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_self_dual(const BinaryCode& c) {
  if (2 * c.dim() != c.n) return false;
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j)
      if (f2::parity(c.gen.row[i] & c.gen.row[j])) return false;
  return true;
}

inline bool is_doubly_even(const BinaryCode& c) {
  for (auto [w, cnt] : weight_enumerator(c))
    if (w % 4 != 0) return false;
  return true;
}

// The [24,12,8] Golay code: quadratic residue code of length 23 with
// generator polynomial x^11+x^10+x^6+x^5+x^4+x^2+1, extended by an overall
// parity bit at position 23.
inline BinaryCode golay24() {
  const Word g = (Word(1) << 11) | (Word(1) << 10) | (Word(1) << 6) | (Word(1) << 5) |
                 (Word(1) << 4) | (Word(1) << 2) | 1;
  std::vector<Word> rows;
  for (int i = 0; i < 12; ++i) {
    Word w = g << i;  // x^i * g(x), degree <= 22
    if (f2::popcount(w) % 2) w |= Word(1) << 23;
    rows.push_back(w);
  }
  return make_code(24, rows);
}

// The [8,4] extended Hamming code (self-dual, weight distribution 1+14q^4+q^8).
inline BinaryCode hamming8() {
  std::vector<Word> rows = {
      0b11110000, 0b11001100, 0b10101010, 0b11111111};
  return make_code(8, rows);
}

// First-order Reed-Muller code RM(1,m): length 2^m, dimension m+1.
inline BinaryCode reed_muller1(int m) {
  int n = 1 << m;
  std::vector<Word> rows;
  Word all = (n == 64) ? ~Word(0) : ((Word(1) << n) - 1);
  rows.push_back(all);
  for (int b = 0; b < m; ++b) {
    Word w = 0;
    for (int x = 0; x < n; ++x)
      if ((x >> b) & 1) w |= Word(1) << x;
    rows.push_back(w);
  }
  return make_code(n, rows);
}

// {c in code : (s, c) = 0 for all s in constraints}.
inline BinaryCode subcode_orthogonal(const BinaryCode& c, const std::vector<Word>& constraints) {
  Matrix m(static_cast<int>(constraints.size()), c.dim());
  for (std::size_t j = 0; j < constraints.size(); ++j)
    for (int i = 0; i < c.dim(); ++i)
      if (f2::parity(c.gen.row[i] & constraints[j])) m.set(static_cast<int>(j), i, 1);
  Subspace k = f2::kernel(m);
  std::vector<Word> rows;
  for (Word x : k.basis) rows.push_back(f2::apply_rows(c.gen, x));
  return make_code(c.n, rows);
}

struct Sextet {
  std::array<Word, 6> tetrad{};  // disjoint 4-sets partitioning the 24 coordinates
};

// Each tetrad of the Golay code lies in a unique sextet: the five octads
// through it split the complement into five further tetrads.
inline Sextet sextet_from_tetrad(const BinaryCode& golay, Word tetrad) {
  if (f2::popcount(tetrad) != 4) throw std::invalid_argument("sextet_from_tetrad: not a tetrad");
  Sextet s;
  s.tetrad[0] = tetrad;
  int k = 1;
  for (Word o : words_of_weight(golay, 8)) {
    if ((o & tetrad) == tetrad) {
      if (k > 5) throw std::runtime_error("sextet_from_tetrad: too many octads through tetrad");
      s.tetrad[k++] = o ^ tetrad;
    }
  }
  if (k != 6) throw std::runtime_error("sextet_from_tetrad: tetrad not in a sextet");
  std::sort(s.tetrad.begin() + 1, s.tetrad.end());
  return s;
}

inline bool is_sextet(const BinaryCode& golay, const Sextet& s) {
  Word all = 0;
  for (Word t : s.tetrad) {
    if (f2::popcount(t) != 4) return false;
    all |= t;
  }
  if (f2::popcount(all) != 24) return false;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      Word o = s.tetrad[a] | s.tetrad[b];
      if (!golay.contains(o) || f2::popcount(o) != 8) return false;
    }
  return true;
}

inline std::vector<int> bits_of(Word w) {
  std::vector<int> out;
  while (w) {
    out.push_back(__builtin_ctzll(w));
    w &= w - 1;
  }
  return out;
}

// Weight distribution of the subcode of P(O) generated by gens (all subsets
// of the 8-set O), as a map weight -> count.
inline std::map<int, long> span_weights_in(Word /*octad*/, const std::vector<Word>& gens) {
  Subspace s = Subspace::span(24, gens);
  std::map<int, long> dist;
  const std::uint32_t count = 1u << s.dim();
  for (std::uint32_t x = 0; x < count; ++x) {
    Word w = 0;
    for (int i = 0; i < s.dim(); ++i)
      if ((x >> i) & 1) w ^= s.basis[i];
    ++dist[f2::popcount(w)];
  }
  return dist;
}

struct SextetTriple {
  Sextet p1, p2, p3;
  std::array<Word, 3> octad{};  // O_s = p1.tetrad[2s-2] | p1.tetrad[2s-1]
};

// The distinguished sextet P^1 together with two refinements P^2, P^3:
// P^j splits each O_s into two tetrads, and over each O_s the span of
// {O_s, P^1_{2s}, P^2_{2s}, P^3_{2s}} has the Hamming-8 weight distribution
// {0:1, 4:14, 8:1}. Search is a deterministic lexicographic backtrack over
// the 4-subsets of each octad.
inline SextetTriple standard_sextet_and_refinements(const BinaryCode& golay) {
  SextetTriple out;
  // P^1: sextet of the first tetrad of the lexicographically least octad.
  std::vector<Word> octads = words_of_weight(golay, 8);
  Word first_octad = octads.front();
  Word tetrad0 = 0;
  {
    auto bits = bits_of(first_octad);
    for (int i = 0; i < 4; ++i) tetrad0 |= Word(1) << bits[i];
  }
  out.p1 = sextet_from_tetrad(golay, tetrad0);
  for (int s = 0; s < 3; ++s) out.octad[s] = out.p1.tetrad[2 * s] | out.p1.tetrad[2 * s + 1];

  // A refining sextet is determined by its half of O_1, so candidates come
  // from the 4-subsets of O_1 containing its least coordinate. Keep those
  // whose sextet splits every O_s, reordered so tetrads 2s, 2s+1 are the two
  // halves of O_s with tetrad 2s containing the least coordinate of O_s.
  std::vector<Sextet> candidates;
  {
    auto bits = bits_of(out.octad[0]);
    std::vector<Word> halves;
    for (int m = 0; m < 128; ++m) {  // choose 3 of the remaining 7 coordinates
      Word a = Word(1) << bits[0];
      for (int b = 0; b < 7; ++b)
        if ((m >> b) & 1) a |= Word(1) << bits[b + 1];
      if (f2::popcount(a) == 4) halves.push_back(a);
    }
    std::sort(halves.begin(), halves.end());
    for (Word a : halves) {
      if (a == out.p1.tetrad[0] || a == out.p1.tetrad[1]) continue;
      Sextet s = sextet_from_tetrad(golay, a);
      Sextet ordered;
      bool refines = true;
      for (int k = 0; k < 3 && refines; ++k) {
        Word lo = 0, hi = 0;
        for (Word t : s.tetrad) {
          if ((t & out.octad[k]) == t) {
            Word least = out.octad[k] & (~out.octad[k] + 1);
            if (t & least) lo = t;
            else hi = t;
          }
        }
        if (!lo || !hi) refines = false;
        ordered.tetrad[2 * k] = lo;
        ordered.tetrad[2 * k + 1] = hi;
      }
      if (refines) candidates.push_back(ordered);
    }
  }

  // The span of {O_s, P^1, P^2, P^3 halves of O_s} must have the Hamming-8
  // weight distribution; adding a half or its complement in O_s spans the
  // same code, so the choice of half per sextet does not matter.
  auto hamming_ok = [&](int s, Word a2, Word a3) {
    auto dist = span_weights_in(out.octad[s],
                                {out.octad[s], out.p1.tetrad[2 * s + 1], a2, a3});
    return dist.size() == 3 && dist[0] == 1 && dist[4] == 14 && dist[8] == 1;
  };

  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      bool ok = true;
      for (int s = 0; s < 3 && ok; ++s)
        ok = hamming_ok(s, candidates[i].tetrad[2 * s], candidates[j].tetrad[2 * s]);
      if (ok) {
        out.p2 = candidates[i];
        out.p3 = candidates[j];
        return out;
      }
    }
  throw std::runtime_error("standard_sextet_and_refinements: search failed");
}

// Moebius maps x -> (ax+b)/(cx+d) on P^1(F_23) that preserve the code and,
// optionally, a marked octad. Coordinates: 0..22 are field elements, 23 is
// the point at infinity.
inline std::vector<std::array<int, 24>> golay_psl_automorphisms(
    const BinaryCode& golay, std::optional<Word> fixed_octad, std::size_t max_count) {
  const int p = 23;
  auto point_index = [&](int num, int den) -> int {
    // (num : den) as a point of P^1(F_23); den == 0 -> infinity.
    if (den % p == 0) return 23;
    // num/den mod 23
    int d = ((den % p) + p) % p;
    int inv = 1;
    for (int e = 0; e < p - 2; ++e) inv = inv * d % p;
    return ((num % p) + p) % p * inv % p;
  };
  Subspace span = Subspace::span(24, golay.gen.row);
  std::vector<std::array<int, 24>> found;
  for (int a = 0; a < p && found.size() < max_count; ++a)
    for (int b = 0; b < p && found.size() < max_count; ++b)
      for (int c = 0; c < p && found.size() < max_count; ++c)
        for (int d = 0; d < p; ++d) {
          int det = ((a * d - b * c) % p + p) % p;
          if (det != 1) continue;  // one representative per PSL element (up to +-)
          std::array<int, 24> perm{};
          for (int x = 0; x < 24; ++x) {
            int num, den;
            if (x == 23) { num = a; den = c; }
            else { num = a * x + b; den = c * x + d; }
            perm[x] = point_index(num, den);
          }
          bool ident = true;
          for (int x = 0; x < 24; ++x)
            if (perm[x] != x) { ident = false; break; }
          if (ident) continue;
          bool ok = true;
          for (int i = 0; i < golay.dim() && ok; ++i) {
            Word img = 0;
            Word w = golay.gen.row[i];
            for (int x = 0; x < 24; ++x)
              if ((w >> x) & 1) img |= Word(1) << perm[x];
            ok = span.contains(img);
          }
          if (!ok) continue;
          if (fixed_octad) {
            Word img = 0;
            for (int x = 0; x < 24; ++x)
              if ((*fixed_octad >> x) & 1) img |= Word(1) << perm[x];
            if (img != *fixed_octad) continue;
          }
          found.push_back(perm);
          if (found.size() >= max_count) return found;
        }
  return found;
}

inline std::vector<std::string> export_generator_rows(const BinaryCode& c) {
  std::vector<std::string> out;
  for (int i = 0; i < c.dim(); ++i) {
    std::string row(c.n, '0');
    for (int j = 0; j < c.n; ++j)
      if (c.gen.get(i, j)) row[j] = '1';
    out.push_back(row);
  }
  return out;
}

}  // namespace vlplus::codes
