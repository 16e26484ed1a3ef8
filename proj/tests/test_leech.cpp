#include <catch2/catch_amalgamated.hpp>

#include "vlplus/leech.hpp"

using namespace vlplus;
using exact::Int;
using exact::QVec;
using exact::Rat;
using lat::Lattice;

namespace {
const leech::LeechContext& ctx() {
  static leech::LeechContext c;
  return c;
}
}  // namespace

TEST_CASE("the Leech lattice is even, unimodular and rootless") {
  const Lattice& l = ctx().leech;
  CHECK(l.rank() == 24);
  CHECK(l.det() == 1);
  CHECK(lat::is_even(l));
  CHECK(l.dual() == l);
  auto counts = lat::coset_norm_counts(l, QVec(24, Rat(0)), 4);
  CHECK(counts.size() == 2);
  CHECK(counts.at(0) == 1);
  CHECK(counts.at(4) == 196560);
}

TEST_CASE("coordinate sign flips are automorphisms exactly on Golay words") {
  const auto& c = ctx();
  std::vector<f2::Word> words, nonwords;
  for (std::uint32_t x = 1; words.size() < 10; ++x)
    words.push_back(f2::apply_rows(c.golay.gen, x));
  for (f2::Word w = 1; nonwords.size() < 10; w += 0x9e3779b1u) {
    f2::Word m = w & ((f2::Word(1) << 24) - 1);
    if (m && !c.golay.contains(m)) nonwords.push_back(m);
  }
  for (f2::Word w : words) CHECK(leech::eps(w).is_automorphism(c.leech));
  for (f2::Word m : nonwords) CHECK(!leech::eps(m).is_automorphism(c.leech));
}

TEST_CASE("sublattice chain, indices, and the three descriptions agree") {
  const auto& c = ctx();
  Lattice l1 = leech::lambda_sub(c, 1);
  Lattice l2 = leech::lambda_sub(c, 2);
  Lattice l3 = leech::lambda_sub(c, 3);
  Lattice l5 = leech::lambda_sub(c, 5);
  CHECK(l1 == c.leech);
  CHECK(l1.contains(l2));
  CHECK(l2.contains(l3));
  CHECK(l3.contains(l5));
  CHECK(l2.index_in(l1) == 2);
  CHECK(l3.index_in(l1) == 4);
  CHECK(l5.index_in(l1) == 16);
  for (int i : {1, 2, 3, 5}) {
    Lattice li = leech::lambda_sub(c, i);
    CHECK(li == leech::lambda_via_pairing(c, i));
    CHECK(li == leech::lambda_via_dual(c, i));
    CHECK(lat::is_even(li));
    CHECK(lat::is_2elementary(li));
    CHECK(lat::is_totally_even(li));
  }
}

TEST_CASE("dual of the index-16 sublattice has the expected generators") {
  const auto& c = ctx();
  Lattice l5 = leech::lambda_sub(c, 5);
  Lattice dual = l5.dual();
  Lattice expect = c.leech + Lattice(leech::leech_frame(),
                                     {leech::alpha(1)});
  expect = expect + Lattice(leech::leech_frame(),
                            {leech::alpha(c.triple.p1.tetrad[0], Rat(1, 2))});
  expect = expect + Lattice(leech::leech_frame(),
                            {leech::alpha(c.triple.p2.tetrad[0], Rat(1, 2))});
  expect = expect + Lattice(leech::leech_frame(),
                            {leech::alpha(c.triple.p3.tetrad[0], Rat(1, 2))});
  CHECK(dual == expect);
  CHECK(l5.index_in(dual) == 256);
}

TEST_CASE("octad split: sqrt2 E8 and Barnes-Wall halves") {
  const auto& c = ctx();
  auto u = leech::u_split(c);
  CHECK(u.u1.rank() == 8);
  CHECK(u.u2.rank() == 16);
  CHECK(u.u1.det() == 256);
  CHECK(u.u2.det() == 256);
  CHECK(u.u.det() == Rat(65536));
  CHECK(u.u.index_in(c.leech) == 256);
  Lattice twice = c.leech.scaled(2);
  CHECK(u.u.contains(twice));
  CHECK(twice.index_in(u.u) == 65536);
  for (const auto& a : u.u1.basis())
    for (const auto& b : u.u2.basis())
      CHECK(lat::frame_ip(c.leech.frame(), a, b) == 0);
  for (const auto& l : {u.u1, u.u2}) {
    CHECK(lat::is_even(l));
    CHECK(lat::is_2elementary(l));
    CHECK(lat::is_totally_even(l));
  }
}

TEST_CASE("octad split fingerprints via theta series") {
  const auto& c = ctx();
  auto u = leech::u_split(c);
  QVec z24(24, Rat(0));

  auto comps = lat::root_components(u.u1, 4);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].rank == 8);
  CHECK(comps[0].root_count == 240);

  // Reference sqrt2 E8: the unimodular E8 basis in a doubled frame.
  exact::QMat rows;
  rows.push_back({1, 1, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 7; ++i) {
    QVec r(8, Rat(0));
    r[i] = 1;
    r[i + 1] = -1;
    rows.push_back(r);
  }
  rows.push_back(QVec(8, Rat(1, 2)));
  Lattice se8(lat::Frame{8, 2}, rows);
  CHECK(lat::theta_series(u.u1, z24, 8) ==
        lat::theta_series(se8, QVec(8, Rat(0)), 8));

  // Reference Barnes-Wall: Construction B over RM(1,4).
  Lattice bw = lat::construction_b(codes::reed_muller1(4),
                                   lat::Frame{16, Rat(1, 32)});
  auto thu2 = lat::theta_series(u.u2, z24, 8);
  CHECK(thu2 == lat::theta_series(bw, QVec(16, Rat(0)), 8));
  CHECK(thu2.coeff2(2) == 0);
  CHECK(thu2.coeff2(4) == 4320);
}
