#pragma once

// Exact truncated power series in q on the half-integer exponent grid.
// Exponents are stored doubled (so q^{1/2} lives at index 1), coefficients
// are arbitrary-precision integers. Every series carries its truncation
// order; arithmetic truncates to the smaller order.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace vlplus::qs {

using Int = boost::multiprecision::cpp_int;

class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int order2) : order2_(order2), c_(order2 + 1, 0) {
    if (order2 < 0) throw std::invalid_argument("QSeries: negative order");
  }

  static QSeries one(int order2) {
    QSeries s(order2);
    s.c_[0] = 1;
    return s;
  }

  int order2() const { return order2_; }

  const Int& coeff2(int e2) const {
    static const Int zero = 0;
    if (e2 < 0 || e2 > order2_) return zero;
    return c_[e2];
  }

  void add_coeff2(int e2, const Int& v) {
    if (e2 < 0) throw std::invalid_argument("QSeries: negative exponent");
    if (e2 > order2_) return;  // beyond truncation
    c_[e2] += v;
  }

  void set_coeff2(int e2, const Int& v) {
    if (e2 < 0 || e2 > order2_) throw std::invalid_argument("QSeries: exponent out of range");
    c_[e2] = v;
  }

  QSeries truncated(int order2) const {
    QSeries s(std::min(order2, order2_));
    for (int i = 0; i <= s.order2_; ++i) s.c_[i] = c_[i];
    s.order2_ = order2 < order2_ ? order2 : order2_;
    return s;
  }

  bool is_zero() const {
    for (const Int& x : c_)
      if (x != 0) return false;
    return true;
  }

  // Doubled exponent of the lowest nonzero term, or -1 for the zero series.
  int leading_exp2() const {
    for (int i = 0; i <= order2_; ++i)
      if (c_[i] != 0) return i;
    return -1;
  }

  // True if every nonzero exponent is an integer (doubled exponent even).
  bool integral_exponents() const {
    for (int i = 1; i <= order2_; i += 2)
      if (c_[i] != 0) return false;
    return true;
  }

  // True if every nonzero exponent is in 1/2 + Z.
  bool half_integral_exponents() const {
    for (int i = 0; i <= order2_; i += 2)
      if (c_[i] != 0) return false;
    return true;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order2_, b.order2_));
    for (int i = 0; i <= s.order2_; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
  }

  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order2_, b.order2_));
    for (int i = 0; i <= s.order2_; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries s(std::min(a.order2_, b.order2_));
    for (int i = 0; i <= std::min(a.order2_, s.order2_); ++i) {
      if (a.c_[i] == 0) continue;
      int jmax = s.order2_ - i;
      for (int j = 0; j <= std::min(b.order2_, jmax); ++j) {
        if (b.c_[j] == 0) continue;
        s.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return s;
  }

  QSeries& operator*=(const Int& k) {
    for (Int& x : c_) x *= k;
    return *this;
  }

  // Exact division by an integer scalar; throws if any coefficient fails.
  QSeries& div_exact(const Int& k) {
    for (Int& x : c_) {
      if (x % k != 0) throw std::runtime_error("QSeries: inexact scalar division");
      x /= k;
    }
    return *this;
  }

  // Shift by q^{e2/2}.
  QSeries shifted2(int e2) const {
    QSeries s(order2_);
    for (int i = 0; i + e2 <= order2_ && i <= order2_; ++i) s.c_[i + e2] = c_[i];
    return s;
  }

  bool operator==(const QSeries& o) const { return order2_ == o.order2_ && c_ == o.c_; }

  // First doubled exponent where the two series disagree (up to the common
  // truncation order), or -1 if they agree.
  friend int first_mismatch2(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order2_, b.order2_);
    for (int i = 0; i <= n; ++i)
      if (a.c_[i] != b.c_[i]) return i;
    return -1;
  }

  std::string str() const {
    std::string out;
    bool first = true;
    for (int i = 0; i <= order2_; ++i) {
      if (c_[i] == 0) continue;
      if (!first) out += " + ";
      out += c_[i].str();
      if (i > 0) {
        out += "*q^";
        if (i % 2 == 0) out += std::to_string(i / 2);
        else out += std::to_string(i) + "/2";
      }
      first = false;
    }
    if (first) out = "0";
    return out;
  }

 private:
  int order2_ = 0;
  std::vector<Int> c_;
};

// Binomial coefficient, valid for negative n as well (generalized).
inline Int binomial(long n, long k) {
  if (k < 0 || (n >= 0 && k > n)) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// (1 - s*q^{e2/2})^{-n} truncated: sum_k C(n-1+k, k) s^k q^{k*e2/2}.
inline QSeries geometric_pow(int e2, int sign, long n, int order2) {
  QSeries s(order2);
  Int sk = 1;
  for (long k = 0; k * e2 <= order2; ++k) {
    s.set_coeff2(static_cast<int>(k) * e2, binomial(n - 1 + k, k) * sk);
    sk *= sign;
  }
  return s;
}

// prod_{i>=1} (1 - sign*q^i)^{-n}
inline QSeries eta_like_integer(int sign, long n, int order2) {
  QSeries s = QSeries::one(order2);
  for (int i = 1; 2 * i <= order2; ++i) s = s * geometric_pow(2 * i, sign, n, order2);
  return s;
}

// prod_{i>=1} (1 - sign*q^{i-1/2})^{-n}
inline QSeries eta_like_half(int sign, long n, int order2) {
  QSeries s = QSeries::one(order2);
  for (int i = 1; 2 * i - 1 <= order2; ++i) s = s * geometric_pow(2 * i - 1, sign, n, order2);
  return s;
}

}  // namespace vlplus::qs
