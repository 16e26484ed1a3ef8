#pragma once

// Irreducible-module bookkeeping for the plus fixed-point algebra of a
// 2-elementary totally even lattice. Each module gets a label: a coset of
// the discriminant group, a sign, and a twisted/untwisted flag. Graded
// dimensions are exact q-series; the mod-1 grading turns the label set into
// a quadratic space.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cache.hpp"
#include "f2.hpp"
#include "lattice.hpp"
#include "leech.hpp"
#include "qseries.hpp"
#include "qspace.hpp"

namespace vlplus::voa {

using exact::Int;
using exact::QVec;
using exact::Rat;
using lat::Lattice;

struct ModuleLabel {
  f2::Word coset = 0;
  int sign = +1;
  bool twisted = false;
  bool operator==(const ModuleLabel&) const = default;
};

struct ModuleContext {
  Lattice l;
  qspace::DiscForm disc;
  int n = 0;     // rank
  int m = 0;     // dimension of the discriminant group over F2
  int lval = 0;  // [L : 2 L*] = 2^{2 lval}
  lat::EnumBudget budget{};
  std::optional<std::filesystem::path> cache;  // theta cache directory
};

inline ModuleContext make_module_context(
    const Lattice& l, const lat::EnumBudget& budget = {},
    std::optional<std::filesystem::path> cache = std::nullopt) {
  if (!lat::is_even(l) || !lat::is_2elementary(l) || !lat::is_totally_even(l))
    throw std::invalid_argument(
        "make_module_context: need an even 2-elementary totally even lattice");
  ModuleContext c{l, qspace::discriminant_form(l), l.rank(), 0, 0, budget,
                  std::move(cache)};
  c.m = c.disc.space.n;
  if (c.n % 8 != 0 || (c.n - c.m) % 2 != 0)
    throw std::invalid_argument("make_module_context: unsupported rank");
  c.lval = (c.n - c.m) / 2;
  return c;
}

inline std::size_t label_count(const ModuleContext& c) {
  return std::size_t(1) << (c.m + 2);
}

inline std::size_t label_index(const ModuleContext& c, const ModuleLabel& lb) {
  return std::size_t(lb.coset) | (std::size_t(lb.sign < 0) << c.m) |
         (std::size_t(lb.twisted) << (c.m + 1));
}

inline ModuleLabel label_at(const ModuleContext& c, std::size_t idx) {
  ModuleLabel lb;
  lb.coset = idx & ((f2::Word(1) << c.m) - 1);
  lb.sign = (idx >> c.m) & 1 ? -1 : +1;
  lb.twisted = (idx >> (c.m + 1)) & 1;
  return lb;
}

// Graded dimension. Untwisted modules are half the coset theta series over
// the eta-like product, corrected by the symmetrized product on the zero
// coset; twisted ones are built from half-integer grid products with a
// q^{n/16} shift and ground-level multiplicity 2^lval.
inline qs::QSeries character(const ModuleContext& c, const ModuleLabel& lb,
                             int order2) {
  if (!lb.twisted) {
    qs::QSeries th =
        c.cache ? cache::theta_series_cached(c.l, c.disc.rep[lb.coset], order2,
                                             *c.cache, c.budget)
                : lat::theta_series(c.l, c.disc.rep[lb.coset], order2, c.budget);
    qs::QSeries s = th * qs::eta_like_integer(+1, c.n, order2);
    if (lb.coset == 0) {
      qs::QSeries t = qs::eta_like_integer(-1, c.n, order2);
      s = lb.sign > 0 ? s + t : s - t;
    }
    return s.div_exact(2);
  }
  qs::QSeries a = qs::eta_like_half(+1, c.n, order2);
  qs::QSeries b = qs::eta_like_half(-1, c.n, order2);
  qs::QSeries s = (lb.sign > 0 ? a + b : a - b).shifted2(c.n / 8);
  s *= Int(1) << c.lval;
  return s.div_exact(2);
}

// Grading mod 1: 0 if the graded dimension lives on integer powers of q,
// 1 if on half-integer powers.
inline int q_form(const ModuleContext& c, const ModuleLabel& lb) {
  if (!lb.twisted) return c.disc.space.eval(lb.coset);
  return (c.n / 8 + (lb.sign < 0 ? 1 : 0)) % 2;
}

// Same value read off the character itself, with a constancy check.
inline int q_form_from_series(const ModuleContext& c, const ModuleLabel& lb,
                              int order2) {
  qs::QSeries ch = character(c, lb, order2);
  if (ch.is_zero())
    throw std::runtime_error("q_form_from_series: truncation order too small");
  bool zi = ch.integral_exponents(), zh = ch.half_integral_exponents();
  if (zi == zh)
    throw std::runtime_error("q_form_from_series: grading not constant mod 1");
  int q = zh ? 1 : 0;
  if (q != q_form(c, lb))
    throw std::logic_error("q_form_from_series: grading disagrees with the form");
  return q;
}

struct LabeledQSpace {
  std::vector<ModuleLabel> labels;  // indexed by label_index
  std::vector<std::uint8_t> qval;
  std::size_t singular_count = 0;
  int type = 0;                // sign matching the singular count
  qspace::QuadSpace model;     // abstract space of the same dimension and type
};

inline LabeledQSpace labeled_space(const ModuleContext& c) {
  LabeledQSpace out;
  std::size_t tot = label_count(c);
  out.labels.reserve(tot);
  out.qval.reserve(tot);
  for (std::size_t idx = 0; idx < tot; ++idx) {
    ModuleLabel lb = label_at(c, idx);
    int q = q_form(c, lb);
    out.labels.push_back(lb);
    out.qval.push_back((std::uint8_t)q);
    if (q == 0) ++out.singular_count;
  }
  int d = c.m + 2;
  std::size_t half = std::size_t(1) << (d - 1), dev = std::size_t(1) << (d / 2 - 1);
  if (out.singular_count == half + dev)
    out.type = +1;
  else if (out.singular_count == half - dev)
    out.type = -1;
  else
    throw std::logic_error("labeled_space: singular count fits neither type");
  out.model = qspace::standard_space(d, out.type);
  return out;
}

// Action of the shift automorphism attached to a dual vector beta: untwisted
// labels flip sign when the pairing with the coset is half-integral, twisted
// labels translate their coset by the class of beta.
inline std::vector<std::size_t> shift_action(const ModuleContext& c,
                                             const QVec& beta) {
  f2::Word bl = c.disc.label_of(beta);
  std::size_t tot = label_count(c);
  std::vector<std::size_t> perm(tot);
  for (std::size_t idx = 0; idx < tot; ++idx) {
    ModuleLabel lb = label_at(c, idx);
    if (!lb.twisted) {
      Rat p = lat::frame_ip(c.l.frame(), beta, c.disc.rep[lb.coset]);
      Int den = denominator(p);
      if (den == 2)
        lb.sign = -lb.sign;
      else if (den != 1)
        throw std::logic_error("shift_action: unexpected pairing denominator");
    } else {
      lb.coset ^= bl;
    }
    perm[idx] = label_index(c, lb);
  }
  return perm;
}

// Action of a lattice automorphism: cosets move by the inverse, signs and
// the twist are kept (the pair-level convention).
inline std::vector<std::size_t> isometry_action(const ModuleContext& c,
                                                const lat::Isometry& g) {
  if (!g.preserves_frame() || !g.is_automorphism(c.l))
    throw std::invalid_argument("isometry_action: not an automorphism");
  lat::Isometry ginv{exact::q_inverse(g.m)};
  // the label map is additive, so images of the m generators determine it
  std::vector<f2::Word> gen_img(c.m);
  for (int j = 0; j < c.m; ++j)
    gen_img[j] =
        c.disc.label_of(ginv.apply(c.disc.rep[f2::Word(1) << j]));
  std::vector<f2::Word> cmap(std::size_t(1) << c.m, 0);
  for (f2::Word w = 0; w < (f2::Word(1) << c.m); ++w)
    for (int j = 0; j < c.m; ++j)
      if ((w >> j) & 1) cmap[w] ^= gen_img[j];
  std::size_t tot = label_count(c);
  std::vector<std::size_t> perm(tot);
  for (std::size_t idx = 0; idx < tot; ++idx) {
    ModuleLabel lb = label_at(c, idx);
    lb.coset = cmap[lb.coset];
    perm[idx] = label_index(c, lb);
  }
  return perm;
}

struct OrbitShadow {
  std::vector<std::vector<std::size_t>> generated;  // orbits of the label set
  std::vector<std::size_t> shadow_sizes;  // vacuum / other singular / nonsingular
  bool refines = false;          // each orbit sits in one shadow class
  bool under_generated = false;  // strictly finer than the shadow partition
};

// Orbits of the label set under the shift automorphisms for a spanning set
// of dual vectors together with the supplied lattice automorphisms, compared
// against the three-class shadow (vacuum, other singular, nonsingular).
// Lattice-type generators fix the twisted vacuum, so under-generation is
// expected and reported rather than hidden.
inline OrbitShadow orbit_shadow(const ModuleContext& c,
                                const LabeledQSpace& ls,
                                const std::vector<lat::Isometry>& committed) {
  std::vector<std::vector<std::size_t>> perms;
  for (int i = 0; i < c.n; ++i)
    perms.push_back(shift_action(c, c.disc.dual.basis()[i]));
  for (const auto& g : committed) perms.push_back(isometry_action(c, g));

  std::size_t tot = label_count(c);
  OrbitShadow out;
  std::vector<char> seen(tot, 0);
  for (std::size_t s = 0; s < tot; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> orbit{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (const auto& p : perms) {
        std::size_t t = p[orbit[h]];
        if (!seen[t]) {
          seen[t] = 1;
          orbit.push_back(t);
        }
      }
    out.generated.push_back(std::move(orbit));
  }

  std::size_t vacuum = label_index(c, ModuleLabel{0, +1, false});
  auto cls = [&](std::size_t idx) {
    if (idx == vacuum) return 0;
    return ls.qval[idx] ? 2 : 1;
  };
  out.shadow_sizes.assign(3, 0);
  for (std::size_t idx = 0; idx < tot; ++idx) ++out.shadow_sizes[cls(idx)];
  out.refines = true;
  for (const auto& orbit : out.generated)
    for (std::size_t idx : orbit)
      if (cls(idx) != cls(orbit.front())) out.refines = false;
  out.under_generated = out.generated.size() > 3;
  return out;
}

// --- Decomposition identities against the rank-24 algebra -----------------

struct DecompReport {
  bool ok = false;
  int order2 = 0;
  int mismatch2 = -1;  // first doubled exponent that disagrees, or -1
};

// Split of a Leech vector along the fixed octad: the on-octad part pairs
// integrally with the rank-8 piece, the off-octad part with the rank-16 one.
inline std::pair<QVec, QVec> octad_split(const leech::LeechContext& lc,
                                         const QVec& v) {
  QVec a(24, Rat(0)), b(24, Rat(0));
  for (int j = 0; j < 24; ++j) {
    if ((lc.octad >> j) & 1)
      a[j] = v[j];
    else
      b[j] = v[j];
  }
  return {a, b};
}

// Sum of the plus untwisted characters over the cosets of the index-2^{i-1}
// sublattice equals the plus character of the full lattice.
inline DecompReport untwisted_decomposition(
    const leech::LeechContext& lc, int i, int order2,
    const lat::EnumBudget& budget = {},
    std::optional<std::filesystem::path> cache = std::nullopt) {
  ModuleContext ci = make_module_context(leech::lambda_sub(lc, i), budget, cache);
  ModuleContext cl = make_module_context(lc.leech, budget, cache);
  auto reps = lat::coset_representatives(ci.l, lc.leech);
  qs::QSeries sum(order2);
  for (const auto& r : reps)
    sum = sum + character(ci, ModuleLabel{ci.disc.label_of(r), +1, false}, order2);
  qs::QSeries target = character(cl, ModuleLabel{0, +1, false}, order2);
  int mm = first_mismatch2(sum, target);
  return DecompReport{mm < 0, order2, mm};
}

// The twisted minus character of the full lattice is 2^{i-1} copies of the
// twisted minus character of the sublattice; also checks the ground-level
// bookkeeping 2^{i-1} * 2^{l_i} = 2^{l_1}.
inline DecompReport twisted_decomposition(const leech::LeechContext& lc, int i,
                                          int order2) {
  ModuleContext ci = make_module_context(leech::lambda_sub(lc, i));
  ModuleContext cl = make_module_context(lc.leech);
  qs::QSeries sum = character(ci, ModuleLabel{0, -1, true}, order2);
  sum *= Int(1) << (i - 1);
  qs::QSeries target = character(cl, ModuleLabel{0, -1, true}, order2);
  int mm = first_mismatch2(sum, target);
  bool book = (i - 1) + ci.lval == cl.lval;
  return DecompReport{book && mm < 0, order2, mm};
}

// Tensor decomposition along the octad split: the plus character of the full
// lattice is the sum over Lambda/U of the equal-sign untwisted products, and
// the twisted minus character is the sum of the opposite-sign twisted ones.
inline DecompReport split_decomposition(const leech::LeechContext& lc,
                                        const leech::USplit& us,
                                        const ModuleContext& c1,
                                        const ModuleContext& c2, int order2) {
  ModuleContext cl = make_module_context(lc.leech, c1.budget, c1.cache);
  auto reps = lat::coset_representatives(us.u, lc.leech);
  qs::QSeries unt(order2), tw(order2);
  for (const auto& r : reps) {
    auto [r1, r2] = octad_split(lc, r);
    f2::Word w1 = c1.disc.label_of(r1), w2 = c2.disc.label_of(r2);
    for (int s : {+1, -1})
      unt = unt + character(c1, ModuleLabel{w1, s, false}, order2) *
                      character(c2, ModuleLabel{w2, s, false}, order2);
    for (int s : {+1, -1})
      tw = tw + character(c1, ModuleLabel{0, s, true}, order2) *
                    character(c2, ModuleLabel{0, -s, true}, order2);
  }
  int mm = first_mismatch2(unt, character(cl, ModuleLabel{0, +1, false}, order2));
  if (mm < 0) {
    int mt = first_mismatch2(tw, character(cl, ModuleLabel{0, -1, true}, order2));
    return DecompReport{mt < 0, order2, mt};
  }
  return DecompReport{false, order2, mm};
}

// --- Pair labels for the octad split --------------------------------------

struct PairLabel {
  std::size_t coset = 0;  // index into the Lambda/U representative list
  int sign = +1;          // untwisted: common sign; twisted: sign of factor 1
  bool twisted = false;
};

struct PairedLabels {
  std::vector<QVec> reps;           // representatives of Lambda/U
  std::vector<PairLabel> labels;    // 4 * |Lambda/U|
  std::vector<std::uint8_t> q1, q2; // gradings of the two tensor factors
  bool q_consistent = false;        // q1 == q2 throughout
  std::size_t singular_count = 0;
  int type = 0;
};

// Labels of the tensor factors showing up in the octad-split decomposition,
// graded by either factor; the two gradings must agree, and the resulting
// quadratic space on 4 * 2^8 points is of plus type.
inline PairedLabels paired_labels(const leech::LeechContext& lc,
                                  const leech::USplit& us,
                                  const ModuleContext& c1,
                                  const ModuleContext& c2) {
  PairedLabels out;
  out.reps = lat::coset_representatives(us.u, lc.leech);
  out.q_consistent = true;
  for (std::size_t k = 0; k < out.reps.size(); ++k) {
    auto [r1, r2] = octad_split(lc, out.reps[k]);
    f2::Word w1 = c1.disc.label_of(r1), w2 = c2.disc.label_of(r2);
    for (int s : {+1, -1}) {
      out.labels.push_back(PairLabel{k, s, false});
      out.q1.push_back((std::uint8_t)q_form(c1, ModuleLabel{w1, s, false}));
      out.q2.push_back((std::uint8_t)q_form(c2, ModuleLabel{w2, s, false}));
    }
    for (int s : {+1, -1}) {
      out.labels.push_back(PairLabel{k, s, true});
      out.q1.push_back((std::uint8_t)q_form(c1, ModuleLabel{0, s, true}));
      out.q2.push_back((std::uint8_t)q_form(c2, ModuleLabel{0, -s, true}));
    }
  }
  for (std::size_t idx = 0; idx < out.labels.size(); ++idx) {
    if (out.q1[idx] != out.q2[idx]) out.q_consistent = false;
    if (out.q1[idx] == 0) ++out.singular_count;
  }
  std::size_t tot = out.labels.size();
  int d = 0;
  while ((std::size_t(1) << d) < tot) ++d;
  std::size_t half = tot / 2, dev = std::size_t(1) << (d / 2 - 1);
  if (out.singular_count == half + dev)
    out.type = +1;
  else if (out.singular_count == half - dev)
    out.type = -1;
  return out;
}

}  // namespace vlplus::voa
