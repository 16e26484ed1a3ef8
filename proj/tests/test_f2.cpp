#include "vlplus/f2.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

using namespace vlplus;
using f2::Matrix;
using f2::Subspace;
using f2::Word;

namespace {

// Gaussian binomial [n choose k]_2, the subspace-count oracle.
long gaussian_binomial(int n, int k) {
  long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (1L << (n - i)) - 1;
    den *= (1L << (i + 1)) - 1;
  }
  return num / den;
}

Matrix random_matrix(std::mt19937& rng, int rows, int cols) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<Word> d(0, (Word(1) << cols) - 1);
  for (int i = 0; i < rows; ++i) m.row[i] = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  auto id = Matrix::identity(3);
  auto r = f2::rref(id);
  CHECK(r.mat == id);
  CHECK(r.rank == 3);

  Matrix zero(2, 4);
  auto rz = f2::rref(zero);
  CHECK(rz.rank == 0);
  CHECK(rz.mat == zero);

  // rows 1100, 0110, 1010: third is the sum of the first two.
  Matrix m = Matrix::from_rows({0b0011, 0b0110, 0b0101}, 4);
  CHECK(f2::rref(m).rank == 2);
}

TEST_CASE("rref is idempotent on random matrices") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 200; ++t) {
    Matrix m = random_matrix(rng, 1 + t % 6, 1 + (t / 2) % 10);
    auto r1 = f2::rref(m);
    auto r2 = f2::rref(r1.mat);
    CHECK(r1.mat == r2.mat);
    CHECK(r1.rank == r2.rank);
  }
}

TEST_CASE("kernel dimensions and membership") {
  CHECK(f2::kernel(Matrix::identity(4)).dim() == 0);
  CHECK(f2::kernel(Matrix(1, 3)).dim() == 3);

  Matrix ones = Matrix::from_rows({0b1111}, 4);
  Subspace k = f2::kernel(ones);
  CHECK(k.dim() == 3);
  // Oracle: the 16 vectors of F_2^4, even weight iff in kernel.
  for (Word v = 0; v < 16; ++v)
    CHECK(k.contains(v) == (f2::popcount(v) % 2 == 0));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(999);
  for (int t = 0; t < 200; ++t) {
    int rows = 1 + t % 7, cols = 1 + (7 * t) % 12;
    Matrix m = random_matrix(rng, rows, cols);
    CHECK(f2::rank(m) + f2::kernel(m).dim() == cols);
  }
}

TEST_CASE("canonical_key is a complete invariant (exhaustive, dim <= 4)") {
  // Build every subspace as a span of arbitrary generating sets and check
  // that point-set equality matches key equality.
  for (int n = 1; n <= 4; ++n) {
    std::map<std::set<Word>, std::string> seen;
    const Word top = Word(1) << n;
    // All pairs of generators cover all subspaces of dim <= 2; add triples
    // for dim 3+ when n >= 3.
    std::vector<std::vector<Word>> gensets;
    for (Word a = 0; a < top; ++a)
      for (Word b = 0; b < top; ++b) {
        gensets.push_back({a, b});
        for (Word c = 0; c < top && n >= 3; c += 3) gensets.push_back({a, b, c, Word(a ^ b ^ c)});
      }
    for (auto& g : gensets) {
      Subspace s = Subspace::span(n, g);
      std::set<Word> points;
      for (Word v = 0; v < top; ++v)
        if (s.contains(v)) points.insert(v);
      auto key = f2::canonical_key(s);
      auto it = seen.find(points);
      if (it == seen.end()) {
        for (auto& [pts, k] : seen) CHECK(k != key);  // distinct sets, distinct keys
        seen.emplace(points, key);
      } else {
        CHECK(it->second == key);
      }
    }
  }
}

TEST_CASE("canonical_key examples") {
  CHECK(f2::canonical_key(Subspace::span(2, {0b01, 0b10})) ==
        f2::canonical_key(Subspace::span(2, {0b11, 0b01})));
  CHECK(f2::canonical_key(Subspace::span(3, {0b001})) !=
        f2::canonical_key(Subspace::span(3, {0b010})));
  std::set<std::string> keys;
  for (Word v = 1; v < 8; ++v) keys.insert(f2::canonical_key(Subspace::span(3, {v})));
  CHECK(keys.size() == 7);
}

TEST_CASE("enumerate_subspaces counts match Gaussian binomials") {
  auto all = [](const Subspace&) { return true; };
  CHECK(f2::enumerate_subspaces(3, 1, all).size() == 7);
  CHECK(f2::enumerate_subspaces(4, 2, all).size() == 35);
  auto zero = f2::enumerate_subspaces(5, 0, all);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].dim() == 0);
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(static_cast<long>(f2::enumerate_subspaces(n, k, all).size()) ==
            gaussian_binomial(n, k));
}

TEST_CASE("subspace reduce gives canonical coset representatives") {
  Subspace s = Subspace::span(4, {0b0011, 0b1100});
  std::set<Word> reps;
  for (Word v = 0; v < 16; ++v) reps.insert(s.reduce(v));
  CHECK(reps.size() == 4);  // 16 / |s| = 4 cosets
  for (Word v = 0; v < 16; ++v) CHECK(s.contains(v ^ s.reduce(v)));
}
