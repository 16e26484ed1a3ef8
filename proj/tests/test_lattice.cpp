#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "vlplus/lattice.hpp"

using namespace vlplus;
using lat::Frame;
using lat::Lattice;
using exact::Int;
using exact::QMat;
using exact::QVec;
using exact::Rat;

namespace {

Lattice integer_lattice(int n, Rat scale = 1) {
  QMat rows = exact::qmat(n, n);
  for (int i = 0; i < n; ++i) rows[i][i] = 1;
  return Lattice(Frame{n, scale}, rows);
}

Lattice d4() {
  QMat rows = {{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}};
  return Lattice(Frame{4, 1}, rows);
}

Lattice e8(Rat scale = 1) {
  QMat rows;
  rows.push_back({1, 1, 0, 0, 0, 0, 0, 0});
  for (int i = 0; i < 7; ++i) {
    QVec r(8, Rat(0));
    r[i] = 1;
    r[i + 1] = -1;
    rows.push_back(r);
  }
  rows.push_back(QVec(8, Rat(1, 2)));
  return Lattice(Frame{8, scale}, rows);
}

// Brute-force norm histogram over a coefficient box, for small ranks.
std::map<Rat, std::uint64_t> brute_counts(const Lattice& l, const QVec& offset,
                                          const Rat& max_norm, int box) {
  int r = l.rank();
  std::map<Rat, std::uint64_t> out;
  std::vector<int> x(r, -box);
  bool ok = false;
  QVec coords(r, Rat(0));
  bool zero = true;
  for (const auto& t : offset) zero = zero && t == 0;
  if (!zero) {
    coords = l.coordinates(offset, &ok);
    REQUIRE(ok);
  }
  while (true) {
    QVec v(l.dim(), Rat(0));
    for (int i = 0; i < r; ++i) {
      Rat c = Rat(x[i]) + coords[i];
      for (int j = 0; j < l.dim(); ++j) v[j] += c * l.basis()[i][j];
    }
    Rat norm = lat::frame_ip(l.frame(), v, v);
    if (norm <= max_norm) ++out[norm];
    int k = 0;
    while (k < r && x[k] == box) x[k++] = -box;
    if (k == r) break;
    ++x[k];
  }
  return out;
}

}  // namespace

TEST_CASE("frames and gram matrices") {
  Lattice z2 = integer_lattice(2);
  CHECK(z2.det() == 1);
  CHECK(z2.dual() == z2);
  CHECK(lat::is_integral(z2));
  CHECK(!lat::is_even(z2));

  Lattice half = integer_lattice(2, Rat(1, 2));
  CHECK(half.det() == Rat(1, 4));
  CHECK(lat::frame_ip(half.frame(), {1, 1}, {1, 1}) == 1);
}

TEST_CASE("canonical bases give structural equality") {
  QMat a = {{1, 0}, {0, 1}};
  QMat b = {{3, 1}, {1, 1}, {0, 1}};
  CHECK(Lattice(Frame{2, 1}, a) == Lattice(Frame{2, 1}, b));
  QMat c = {{2, 0}, {0, 1}};
  CHECK(Lattice(Frame{2, 1}, a) != Lattice(Frame{2, 1}, c));
  // Same rational span from messier generators.
  QMat d = {{Rat(1, 2), Rat(1, 2)}, {Rat(1, 2), Rat(-1, 2)}, {1, 0}};
  QMat e = {{Rat(1, 2), Rat(1, 2)}, {1, 0}};
  CHECK(Lattice(Frame{2, 1}, d) == Lattice(Frame{2, 1}, e));
}

TEST_CASE("membership and index") {
  Lattice z2 = integer_lattice(2);
  Lattice two = z2.scaled(2);
  CHECK(z2.contains(two));
  CHECK(!two.contains(z2));
  CHECK(two.index_in(z2) == 4);
  CHECK(z2.contains(QVec{3, -5}));
  CHECK(!z2.contains(QVec{Rat(1, 2), 0}));
  CHECK(lat::intersect(two, integer_lattice(2).scaled(3)) ==
        integer_lattice(2).scaled(6));
}

TEST_CASE("D4: discriminant and roots") {
  Lattice l = d4();
  CHECK(lat::is_even(l));
  CHECK(l.det() == 4);
  auto dg = lat::discriminant_group(l);
  CHECK(dg == std::vector<Int>{2, 2});
  CHECK(lat::is_2elementary(l));
  CHECK(l.index_in(l.dual()) == 4);
  auto comps = lat::root_components(l, 2);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == "D4");
  CHECK(comps[0].root_count == 24);
}

TEST_CASE("E8: unimodular, even, 240 roots") {
  Lattice l = e8();
  CHECK(l.rank() == 8);
  CHECK(l.det() == 1);
  CHECK(lat::is_even(l));
  CHECK(l.dual() == l);
  auto comps = lat::root_components(l, 2);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == "E8");
  CHECK(comps[0].root_count == 240);
  auto th = lat::theta_series(l, QVec(8, Rat(0)), 4);
  CHECK(th.coeff2(0) == 1);
  CHECK(th.coeff2(2) == 240);
  CHECK(th.coeff2(4) == 2160);
}

TEST_CASE("sqrt2 E8 via a doubled frame") {
  Lattice l = e8(2);
  CHECK(l.det() == 256);
  CHECK(lat::is_even(l));
  CHECK(lat::is_2elementary(l));
  CHECK(lat::discriminant_group(l) == std::vector<Int>(8, Int(2)));
  CHECK(lat::is_totally_even(l));
  auto comps = lat::root_components(l, 4);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].rank == 8);
  CHECK(comps[0].root_count == 240);
}

TEST_CASE("enumeration matches brute force, with and without offsets") {
  Lattice z2 = integer_lattice(2);
  auto got = lat::coset_norm_counts(z2, QVec(2, Rat(0)), 8);
  auto want = brute_counts(z2, QVec(2, Rat(0)), 8, 4);
  CHECK(got == want);

  QVec off{Rat(1, 2), Rat(1, 2)};
  got = lat::coset_norm_counts(z2, off, 8);
  want = brute_counts(z2, off, 8, 4);
  CHECK(got == want);
  CHECK(got.at(Rat(1, 2)) == 4);

  Lattice l = d4();
  QVec doff{1, 0, 0, 0};  // nontrivial coset of D4 in Z^4
  got = lat::coset_norm_counts(l, doff, 6);
  want = brute_counts(l, doff, 6, 4);
  CHECK(got == want);
  CHECK(got.at(1) == 8);  // unit vectors of the odd coset
}

TEST_CASE("theta of Z in doubled exponents") {
  Lattice z1 = integer_lattice(1);
  auto th = lat::theta_series(z1, QVec(1, Rat(0)), 9);
  CHECK(th.coeff2(0) == 1);
  CHECK(th.coeff2(1) == 2);
  CHECK(th.coeff2(2) == 0);
  CHECK(th.coeff2(4) == 2);
  CHECK(th.coeff2(9) == 2);
}

TEST_CASE("vectors_of_norm returns the actual vectors") {
  Lattice z2 = integer_lattice(2);
  auto v1 = lat::vectors_of_norm(z2, QVec(2, Rat(0)), 1);
  CHECK(v1.size() == 4);
  auto v2 = lat::vectors_of_norm(z2, QVec(2, Rat(0)), 2);
  CHECK(v2.size() == 4);
  for (const auto& v : v2) CHECK(lat::frame_ip(z2.frame(), v, v) == 2);
}

TEST_CASE("isometries and fixed sublattices") {
  Lattice z2 = integer_lattice(2);
  lat::Isometry swap = lat::coordinate_permutation(2, {1, 0});
  CHECK(swap.preserves_frame());
  CHECK(swap.is_automorphism(z2));
  Lattice fix = lat::fixed_sublattice(z2, swap, +1);
  CHECK(fix.rank() == 1);
  CHECK(fix.contains(QVec{1, 1}));
  CHECK(!fix.contains(QVec{1, 0}));
  Lattice anti = lat::fixed_sublattice(z2, swap, -1);
  CHECK(anti.rank() == 1);
  CHECK(anti.contains(QVec{1, -1}));

  lat::Isometry flip = lat::coordinate_signs(2, 0b10);
  CHECK(flip.preserves_frame());
  CHECK(flip.is_automorphism(z2));
  Lattice d = d4();
  lat::Isometry rot = lat::coordinate_permutation(4, {1, 2, 3, 0});
  CHECK(rot.is_automorphism(d));
}

TEST_CASE("construction B over the Golay code") {
  auto golay = codes::golay24();
  Frame f{24, Rat(1, 32)};
  Lattice lb = lat::construction_b(golay, f);
  CHECK(lb.rank() == 24);
  CHECK(lb.det() == 4);
  CHECK(lat::is_even(lb));

  auto counts = lat::coset_norm_counts(lb, QVec(24, Rat(0)), 4);
  CHECK(counts.at(0) == 1);
  CHECK(counts.count(2) == 0);
  // 759 octads * 2^7 even sign patterns, plus 4 * C(24,2) two-coordinate
  // vectors.
  CHECK(counts.at(4) == 759 * 128 + 4 * 276);
}

TEST_CASE("construction B over RM(1,4)") {
  auto rm = codes::reed_muller1(4);
  Frame f{16, Rat(1, 32)};
  Lattice lb = lat::construction_b(rm, f);
  CHECK(lb.rank() == 16);
  CHECK(lb.det() == 256);
  CHECK(lat::is_even(lb));
  CHECK(lat::is_2elementary(lb));
}
