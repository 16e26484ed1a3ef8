#include "vlplus/qseries.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace vlplus;
using qs::Int;
using qs::QSeries;

TEST_CASE("arithmetic basics") {
  QSeries a(6), b(6);
  a.set_coeff2(0, 1);
  a.set_coeff2(2, 3);
  b.set_coeff2(1, 2);
  QSeries s = a + b;
  CHECK(s.coeff2(0) == 1);
  CHECK(s.coeff2(1) == 2);
  CHECK(s.coeff2(2) == 3);
  QSeries p = a * b;  // (1 + 3q) * 2q^{1/2}
  CHECK(p.coeff2(1) == 2);
  CHECK(p.coeff2(3) == 6);
  CHECK((a - a).is_zero());
}

TEST_CASE("truncation behaves as min of orders") {
  QSeries a(4), b(8);
  a.set_coeff2(4, 1);
  b.set_coeff2(8, 1);
  QSeries p = a * b;
  CHECK(p.order2() == 4);
  CHECK(p.is_zero());
}

TEST_CASE("geometric_pow matches binomial expansion") {
  // (1 - q)^{-3} = 1 + 3q + 6q^2 + 10q^3 + ...
  QSeries s = qs::geometric_pow(2, +1, 3, 8);
  CHECK(s.coeff2(0) == 1);
  CHECK(s.coeff2(2) == 3);
  CHECK(s.coeff2(4) == 6);
  CHECK(s.coeff2(6) == 10);
  // (1 + q^{1/2})^{-2} = 1 - 2q^{1/2} + 3q - 4q^{3/2} + ...
  QSeries t = qs::geometric_pow(1, -1, 2, 4);
  CHECK(t.coeff2(0) == 1);
  CHECK(t.coeff2(1) == -2);
  CHECK(t.coeff2(2) == 3);
  CHECK(t.coeff2(3) == -4);
}

TEST_CASE("eta-like products match partition generating functions") {
  // prod (1-q^i)^{-1} = partition generating function 1,1,2,3,5,7,11.
  QSeries p = qs::eta_like_integer(+1, 1, 12);
  long expect[] = {1, 1, 2, 3, 5, 7, 11};
  for (int k = 0; k <= 6; ++k) CHECK(p.coeff2(2 * k) == expect[k]);
  // prod (1+q^i) = distinct-part partitions 1,1,1,2,2,3,4; its inverse
  // times itself is 1.
  QSeries d = qs::eta_like_integer(-1, 1, 12);
  QSeries e = qs::eta_like_integer(-1, -1, 12);
  CHECK((d * e) == QSeries::one(12));
}

TEST_CASE("half-integral product grid") {
  QSeries h = qs::eta_like_half(+1, 1, 5);  // prod (1-q^{i-1/2})^{-1}
  CHECK(h.coeff2(0) == 1);
  CHECK(h.coeff2(1) == 1);  // q^{1/2}
  CHECK(h.coeff2(2) == 1);  // q^{1} = q^{1/2}*q^{1/2}
  CHECK(h.coeff2(3) == 2);  // q^{3/2} and (q^{1/2})^3
}

TEST_CASE("exponent-grid predicates") {
  QSeries a(5);
  a.set_coeff2(2, 1);
  a.set_coeff2(4, 7);
  CHECK(a.integral_exponents());
  CHECK(!a.half_integral_exponents());
  QSeries b(5);
  b.set_coeff2(1, 1);
  CHECK(b.half_integral_exponents());
  CHECK(b.leading_exp2() == 1);
  CHECK(QSeries(3).leading_exp2() == -1);
}

TEST_CASE("exact scalar division") {
  QSeries a(4);
  a.set_coeff2(0, 6);
  a.set_coeff2(2, 9);
  a.div_exact(3);
  CHECK(a.coeff2(0) == 2);
  CHECK(a.coeff2(2) == 3);
  a.set_coeff2(2, 5);
  CHECK_THROWS(a.div_exact(2));
}

TEST_CASE("first_mismatch2 localizes disagreement") {
  QSeries a(6), b(6);
  a.set_coeff2(3, 1);
  b.set_coeff2(3, 1);
  CHECK(first_mismatch2(a, b) == -1);
  b.set_coeff2(5, 4);
  CHECK(first_mismatch2(a, b) == 5);
}
