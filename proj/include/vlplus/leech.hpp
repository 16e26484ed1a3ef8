#pragma once

// The Leech lattice in the coordinate frame where the ambient inner product
// is (1/32) * dot, so the orthogonal norm-2 basis alpha_j is 8 e_j. Provides
// the distinguished full sublattices cut out by Golay subcodes, the matching
// pairing-condition and dual descriptions, and the octad split U = U1 + U2
// into sqrt2 E8 and Barnes-Wall pieces.

#include <array>
#include <stdexcept>
#include <vector>

#include "vlplus/codes.hpp"
#include "vlplus/lattice.hpp"

namespace vlplus::leech {

using exact::QMat;
using exact::QVec;
using exact::Rat;
using lat::Frame;
using lat::Lattice;

inline Frame leech_frame() { return Frame{24, Rat(1, 32)}; }

// alpha_S scaled: sum of 8 e_j over the support of s, times factor.
inline QVec alpha(f2::Word s, const Rat& factor = 1) {
  QVec v(24, Rat(0));
  for (int j = 0; j < 24; ++j)
    if ((s >> j) & 1) v[j] = 8 * factor;
  return v;
}

// Sign flip on the coordinates in c; an automorphism of the Leech lattice
// exactly when c is a Golay word.
inline lat::Isometry eps(f2::Word c) { return lat::coordinate_signs(24, c); }

struct LeechContext {
  codes::BinaryCode golay;
  codes::SextetTriple triple;
  Lattice leech;
  f2::Word octad = 0;  // the split octad O_1

  LeechContext()
      : golay(codes::golay24()),
        triple(codes::standard_sextet_and_refinements(golay)),
        leech(lat::construction_b(golay, leech_frame()) +
              Lattice(leech_frame(), glue_row())),
        octad(triple.octad[0]) {}

 private:
  static QMat glue_row() {
    QVec v(24, Rat(2));
    v[0] = -6;  // alpha_Omega / 4 - alpha_1
    return QMat{v};
  }
};

// The subcode cutting out the index-2^{i-1} sublattice: words orthogonal to
// the first tetrads of the distinguished sextets.
inline codes::BinaryCode code_c(const LeechContext& ctx, int i) {
  switch (i) {
    case 1:
    case 2:
      return ctx.golay;
    case 3:
      return codes::subcode_orthogonal(ctx.golay, {ctx.triple.p1.tetrad[0]});
    case 5:
      return codes::subcode_orthogonal(
          ctx.golay, {ctx.triple.p1.tetrad[0], ctx.triple.p2.tetrad[0],
                      ctx.triple.p3.tetrad[0]});
    default:
      throw std::invalid_argument("code_c: i must be 1, 2, 3 or 5");
  }
}

inline Lattice lambda_sub(const LeechContext& ctx, int i) {
  if (i == 1) return ctx.leech;
  return lat::construction_b(code_c(ctx, i), leech_frame());
}

// Doubled companion lattices: D_1 = 2 Lambda, each next one adjoins one
// more alpha vector.
inline Lattice d_lattice(const LeechContext& ctx, int i) {
  Lattice d = ctx.leech.scaled(2);
  if (i == 1) return d;
  d = d + Lattice(leech_frame(), QMat{alpha(1, 2)});  // 2 alpha_1
  if (i == 2) return d;
  d = d + Lattice(leech_frame(), QMat{alpha(ctx.triple.p1.tetrad[0])});
  if (i == 3) return d;
  if (i != 5) throw std::invalid_argument("d_lattice: i must be 1, 2, 3 or 5");
  d = d + Lattice(leech_frame(), QMat{alpha(ctx.triple.p2.tetrad[0])});
  d = d + Lattice(leech_frame(), QMat{alpha(ctx.triple.p3.tetrad[0])});
  return d;
}

// {v in L : <v,w> in 2Z for all w in gens}. All pairings <basis, gen> must
// already be integral.
inline Lattice even_pairing_sublattice(const Lattice& l,
                                       const std::vector<QVec>& gens) {
  int r = l.rank();
  f2::Matrix cond((int)gens.size(), r);
  for (int j = 0; j < (int)gens.size(); ++j)
    for (int i = 0; i < r; ++i) {
      Rat p = lat::frame_ip(l.frame(), l.basis()[i], gens[j]);
      if (denominator(p) != 1)
        throw std::invalid_argument("even_pairing_sublattice: non-integral pairing");
      if (numerator(p) % 2 != 0) cond.set(j, i, 1);
    }
  auto k = f2::kernel(cond);
  QMat rows;
  for (f2::Word x : k.basis) {
    QVec row(l.dim(), Rat(0));
    for (int i = 0; i < r; ++i)
      if ((x >> i) & 1)
        for (int j = 0; j < l.dim(); ++j) row[j] += l.basis()[i][j];
    rows.push_back(row);
  }
  for (int i = 0; i < r; ++i) {
    QVec row(l.dim(), Rat(0));
    for (int j = 0; j < l.dim(); ++j) row[j] = 2 * l.basis()[i][j];
    rows.push_back(row);
  }
  return Lattice(l.frame(), rows);
}

// Same sublattice via the pairing condition against D_i.
inline Lattice lambda_via_pairing(const LeechContext& ctx, int i) {
  Lattice d = d_lattice(ctx, i);
  return even_pairing_sublattice(ctx.leech, d.basis());
}

// Same sublattice as 2 D_i^*: D_i contains 2 Lambda, so its dual sits inside
// Lambda / 2 and doubling lands back inside Lambda.
inline Lattice lambda_via_dual(const LeechContext& ctx, int i) {
  return d_lattice(ctx, i).dual().scaled(2);
}

struct USplit {
  Lattice u1;  // anti-fixed part of eps_octad, a sqrt2 E8
  Lattice u2;  // fixed part, a Barnes-Wall lattice of rank 16
  Lattice u;   // orthogonal sum inside Lambda
};

inline USplit u_split(const LeechContext& ctx) {
  lat::Isometry e = eps(ctx.octad);
  Lattice u1 = lat::fixed_sublattice(ctx.leech, e, -1);
  Lattice u2 = lat::fixed_sublattice(ctx.leech, e, +1);
  return USplit{u1, u2, u1 + u2};
}

}  // namespace vlplus::leech
