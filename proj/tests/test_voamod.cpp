#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "vlplus/voamod.hpp"

using namespace vlplus;
using exact::Int;
using exact::QVec;
using exact::Rat;
using lat::Lattice;

namespace {

const leech::LeechContext& lctx() {
  static leech::LeechContext c;
  return c;
}

const leech::USplit& usplit() {
  static leech::USplit u = leech::u_split(lctx());
  return u;
}

// rank-8 factor of the octad split, a sqrt2 E8
const voa::ModuleContext& c8() {
  static voa::ModuleContext c = voa::make_module_context(usplit().u1);
  return c;
}

// rank-16 factor, a Barnes-Wall lattice
const voa::ModuleContext& c16() {
  static voa::ModuleContext c = voa::make_module_context(usplit().u2);
  return c;
}

std::vector<lat::Isometry> root_reflections(const Lattice& l) {
  std::vector<lat::Isometry> out;
  for (const auto& v : lat::vectors_of_norm(l, QVec(l.dim(), Rat(0)), 4))
    out.push_back(lat::reflection_in(l.frame(), v));
  return out;
}

}  // namespace

TEST_CASE("module contexts carry the expected invariants") {
  CHECK(c8().n == 8);
  CHECK(c8().m == 8);
  CHECK(c8().lval == 0);
  CHECK(c16().n == 16);
  CHECK(c16().m == 8);
  CHECK(c16().lval == 4);
  voa::ModuleContext cl = voa::make_module_context(lctx().leech);
  CHECK(cl.m == 0);
  CHECK(cl.lval == 12);
}

TEST_CASE("leading terms of the four distinguished characters") {
  // untwisted minus of the rank-8 lattice starts at 8q
  qs::QSeries a = voa::character(c8(), {0, -1, false}, 8);
  CHECK(a.leading_exp2() == 2);
  CHECK(a.coeff2(2) == 8);
  // its twisted plus module starts at q^{1/2} with a one-dimensional top
  qs::QSeries b = voa::character(c8(), {0, +1, true}, 8);
  CHECK(b.leading_exp2() == 1);
  CHECK(b.coeff2(1) == 1);
  // untwisted minus of the rank-16 lattice starts at 16q
  qs::QSeries c = voa::character(c16(), {0, -1, false}, 8);
  CHECK(c.leading_exp2() == 2);
  CHECK(c.coeff2(2) == 16);
  // its twisted minus module starts at 256 q^{3/2}
  qs::QSeries d = voa::character(c16(), {0, -1, true}, 8);
  CHECK(d.leading_exp2() == 3);
  CHECK(d.coeff2(3) == 256);
}

TEST_CASE("both label sets form the plus-type ten-dimensional space") {
  for (const voa::ModuleContext* c : {&c8(), &c16()}) {
    voa::LabeledQSpace ls = voa::labeled_space(*c);
    CHECK(ls.labels.size() == 1024);
    CHECK(ls.singular_count == 528);
    CHECK(ls.type == +1);
    CHECK(qspace::type_of(ls.model) == +1);
  }
}

TEST_CASE("the grading read off the characters matches the form") {
  // every label of the rank-8 side
  for (std::size_t idx = 0; idx < voa::label_count(c8()); ++idx) {
    voa::ModuleLabel lb = voa::label_at(c8(), idx);
    CHECK(voa::q_form_from_series(c8(), lb, 6) == voa::q_form(c8(), lb));
  }
  // a sample of the rank-16 side (full coset thetas are slower there)
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::size_t idx = rng() % voa::label_count(c16());
    voa::ModuleLabel lb = voa::label_at(c16(), idx);
    CHECK(voa::q_form_from_series(c16(), lb, 6) == voa::q_form(c16(), lb));
  }
}

TEST_CASE("shift automorphisms are involutions preserving the grading") {
  std::mt19937 rng(11);
  for (const voa::ModuleContext* cp : {&c8(), &c16()}) {
    const voa::ModuleContext& c = *cp;
    voa::LabeledQSpace ls = voa::labeled_space(c);
    for (int t = 0; t < 50; ++t) {
      QVec beta(c.l.dim(), Rat(0));
      for (int i = 0; i < c.n; ++i)
        if (rng() & 1)
          for (int j = 0; j < c.l.dim(); ++j)
            beta[j] += c.disc.dual.basis()[i][j];
      auto p = voa::shift_action(c, beta);
      bool inv = true, qok = true;
      for (std::size_t idx = 0; idx < p.size(); ++idx) {
        if (p[p[idx]] != idx) inv = false;
        if (ls.qval[p[idx]] != ls.qval[idx]) qok = false;
      }
      CHECK(inv);
      CHECK(qok);
    }
    // a half-integral pairing genuinely swaps a sign pair
    bool moved = false;
    for (int i = 0; i < c.n && !moved; ++i) {
      auto p = voa::shift_action(c, c.disc.dual.basis()[i]);
      for (std::size_t idx = 0; idx < p.size(); ++idx)
        if (p[idx] != idx) moved = true;
    }
    CHECK(moved);
  }
}

TEST_CASE("committed isometries act on labels and preserve the grading") {
  // rank-8 side: reflections in norm-4 vectors
  voa::LabeledQSpace l8 = voa::labeled_space(c8());
  auto refl = root_reflections(c8().l);
  REQUIRE(refl.size() == 240);
  std::mt19937 rng(13);
  for (int t = 0; t < 12; ++t) {
    auto p = voa::isometry_action(c8(), refl[rng() % refl.size()]);
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      CHECK(l8.qval[p[idx]] == l8.qval[idx]);
      CHECK(voa::label_at(c8(), p[idx]).twisted ==
            voa::label_at(c8(), idx).twisted);
    }
  }
  // rank-16 side: octad-preserving coordinate permutations and sign flips
  voa::LabeledQSpace l16 = voa::labeled_space(c16());
  auto perms = codes::golay_psl_automorphisms(lctx().golay, lctx().octad, 3);
  REQUIRE(!perms.empty());
  std::vector<lat::Isometry> gens;
  for (const auto& p : perms)
    gens.push_back(
        lat::coordinate_permutation(24, std::vector<int>(p.begin(), p.end())));
  gens.push_back(leech::eps(f2::apply_rows(lctx().golay.gen, 1)));
  gens.push_back(leech::eps(lctx().octad));
  for (const auto& g : gens) {
    auto p = voa::isometry_action(c16(), g);
    for (std::size_t idx = 0; idx < p.size(); ++idx)
      CHECK(l16.qval[p[idx]] == l16.qval[idx]);
  }
}

TEST_CASE("orbit shadow of the rank-8 label set") {
  voa::LabeledQSpace ls = voa::labeled_space(c8());
  voa::OrbitShadow sh = voa::orbit_shadow(c8(), ls, root_reflections(c8().l));
  CHECK(sh.shadow_sizes == std::vector<std::size_t>{1, 527, 496});
  CHECK(sh.refines);
  // lattice-type generators fix the twisted vacuum, so the generated
  // partition is strictly finer than the three shadow classes
  CHECK(sh.under_generated);
  std::vector<std::size_t> sizes;
  for (const auto& o : sh.generated) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 240, 256, 256, 270});
}

TEST_CASE("pair labels of the octad split") {
  voa::PairedLabels pl = voa::paired_labels(lctx(), usplit(), c8(), c16());
  CHECK(pl.reps.size() == 256);
  CHECK(pl.labels.size() == 1024);
  CHECK(pl.q_consistent);
  CHECK(pl.singular_count == 528);
  CHECK(pl.type == +1);
}

TEST_CASE("tensor decomposition along the octad split") {
  voa::DecompReport r =
      voa::split_decomposition(lctx(), usplit(), c8(), c16(), 4);
  CHECK(r.ok);
  CHECK(r.mismatch2 == -1);
}

TEST_CASE("twisted decompositions over the sublattice chain") {
  for (int i : {2, 3, 5}) {
    voa::DecompReport r = voa::twisted_decomposition(lctx(), i, 8);
    CHECK(r.ok);
  }
}

TEST_CASE("untwisted decompositions over the sublattice chain", "[slow]") {
  for (int i : {2, 3, 5}) {
    voa::DecompReport r = voa::untwisted_decomposition(lctx(), i, 6);
    CHECK(r.ok);
    CHECK(r.mismatch2 == -1);
  }
}
