#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "quadform/rational.hpp"

namespace quadform {

// Truncated one-variable power series over Q, exact through order trunc().
class FormalSeries {
 public:
  FormalSeries() : coeffs_(1, Rat(0)) {}
  explicit FormalSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Rat(0)) {}
  explicit FormalSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Rat(0));
  }

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& operator[](int n) const {
    static const Rat zero(0);
    return n <= trunc() ? coeffs_[n] : zero;
  }
  Rat& at(int n) { return coeffs_.at(n); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  static FormalSeries one(int order) {
    FormalSeries s(order);
    s.at(0) = Rat(1);
    return s;
  }
  static FormalSeries x(int order) {
    FormalSeries s(order);
    if (order >= 1) s.at(1) = Rat(1);
    return s;
  }

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= r.trunc(); ++n) r.at(n) = a[n] + b[n];
    return r;
  }
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= r.trunc(); ++n) r.at(n) = a[n] - b[n];
    return r;
  }
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    FormalSeries r(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= r.trunc(); ++n)
      for (int i = 0; i <= n; ++i) r.at(n) += a[i] * b[n - i];
    return r;
  }
  friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) {
    if (b[0] == Rat(0)) throw std::invalid_argument("series division needs an invertible constant term");
    FormalSeries r(std::min(a.trunc(), b.trunc()));
    for (int n = 0; n <= r.trunc(); ++n) {
      Rat acc = a[n];
      for (int i = 0; i < n; ++i) acc -= r[i] * b[n - i];
      r.at(n) = acc / b[0];
    }
    return r;
  }

  FormalSeries truncated(int order) const {
    FormalSeries r(order);
    for (int n = 0; n <= order; ++n) r.at(n) = (*this)[n];
    return r;
  }

  // substitute -x
  FormalSeries negated_variable() const {
    FormalSeries r = *this;
    for (int n = 1; n <= trunc(); n += 2) r.at(n) = -r.at(n);
    return r;
  }

  bool is_even() const {
    for (int n = 1; n <= trunc(); n += 2)
      if (!((*this)[n] == Rat(0))) return false;
    return true;
  }

  // composition a(b(x)); requires b(0) = 0
  friend FormalSeries compose(const FormalSeries& a, const FormalSeries& b) {
    if (!(b[0] == Rat(0))) throw std::invalid_argument("compose needs zero constant term");
    int order = std::min(a.trunc(), b.trunc());
    FormalSeries r(order), pw = FormalSeries::one(order);
    for (int n = 0; n <= order; ++n) {
      if (!(a[n] == Rat(0)))
        for (int m = 0; m <= order; ++m) r.at(m) += a[n] * pw[m];
      pw = pw * b;
    }
    return r;
  }
};

// sqrt with constant term 1: 2 y_n = s_n - sum_{1<=i<=n-1} y_i y_{n-i}
inline FormalSeries series_sqrt(const FormalSeries& s) {
  if (!(s[0] == Rat(1))) throw std::invalid_argument("series_sqrt needs constant term 1");
  FormalSeries y(s.trunc());
  y.at(0) = Rat(1);
  for (int n = 1; n <= s.trunc(); ++n) {
    Rat acc = s[n];
    for (int i = 1; i < n; ++i) acc -= y[i] * y[n - i];
    y.at(n) = acc / Rat(2);
  }
  return y;
}

// d/dx
inline FormalSeries derivative(const FormalSeries& s) {
  FormalSeries r(std::max(0, s.trunc() - 1));
  for (int n = 0; n <= r.trunc(); ++n) r.at(n) = Rat(n + 1) * s[n + 1];
  return r;
}

// log with constant term 1, via integration of s'/s
inline FormalSeries series_log(const FormalSeries& s) {
  if (!(s[0] == Rat(1))) throw std::invalid_argument("series_log needs constant term 1");
  FormalSeries ratio = derivative(s) / s.truncated(std::max(0, s.trunc() - 1));
  FormalSeries r(s.trunc());
  for (int n = 1; n <= s.trunc(); ++n) r.at(n) = ratio[n - 1] / Rat(n);
  return r;
}

// The line-bundle Wu series 1 + x + x^3 + x^7 + ...: coefficient 1 exactly
// at the exponents 2^n - 1.
inline FormalSeries wu_line_series(int order) {
  FormalSeries f(order);
  for (long n = 0;; ++n) {
    long e = (1L << n) - 1;
    if (e > order) break;
    f.at(static_cast<int>(e)) = Rat(1);
  }
  return f;
}

// spin Wu characteristic series g(x) = sqrt(f(x) f(-x))
inline FormalSeries spin_wu_series(int order) {
  FormalSeries f = wu_line_series(order);
  return series_sqrt(f * f.negated_variable());
}

// x / tanh(x) as an exact rational series
inline FormalSeries l_genus_series(int order) {
  // sinh x / x and cosh x
  FormalSeries sh(order), ch(order);
  Rat fact(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) fact *= Rat(n);
    if (n % 2 == 0) {
      ch.at(n) = Rat(1) / fact;      // x^n/n! in cosh
      sh.at(n) = Rat(1) / (fact * Rat(n + 1));  // x^{n+1}/(n+1)! shifted down
    }
  }
  return ch / sh;
}

// Two-variable series truncated by total degree.
class BiSeries {
 public:
  explicit BiSeries(int order)
      : order_(order),
        c_(static_cast<std::size_t>(order + 1) * (order + 2) / 2, Rat(0)) {}

  int trunc() const { return order_; }
  const Rat& get(int i, int j) const {
    static const Rat zero(0);
    if (i < 0 || j < 0 || i + j > order_) return zero;
    return c_[midx(i, j)];
  }
  void set(int i, int j, const Rat& v) { c_.at(midx(i, j)) = v; }

  static BiSeries one(int order) {
    BiSeries s(order);
    s.set(0, 0, Rat(1));
    return s;
  }

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i)
      for (int j = 0; i + j <= r.order_; ++j) r.set(i, j, a.get(i, j) + b.get(i, j));
    return r;
  }
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_, b.order_));
    for (int i = 0; i <= r.order_; ++i)
      for (int j = 0; i + j <= r.order_; ++j) r.set(i, j, a.get(i, j) - b.get(i, j));
    return r;
  }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    BiSeries r(std::min(a.order_, b.order_));
    for (int i1 = 0; i1 <= r.order_; ++i1)
      for (int j1 = 0; i1 + j1 <= r.order_; ++j1) {
        const Rat& av = a.get(i1, j1);
        if (av == Rat(0)) continue;
        for (int i2 = 0; i1 + j1 + i2 <= r.order_; ++i2)
          for (int j2 = 0; i1 + j1 + i2 + j2 <= r.order_; ++j2) {
            const Rat& bv = b.get(i2, j2);
            if (bv == Rat(0)) continue;
            r.set(i1 + i2, j1 + j2, r.get(i1 + i2, j1 + j2) + av * bv);
          }
      }
    return r;
  }
  // division by a unit, solving degree by degree
  friend BiSeries operator/(const BiSeries& a, const BiSeries& b) {
    if (b.get(0, 0) == Rat(0)) throw std::invalid_argument("BiSeries division by non-unit");
    BiSeries r(std::min(a.order_, b.order_));
    for (int d = 0; d <= r.order_; ++d)
      for (int i = 0; i <= d; ++i) {
        int j = d - i;
        Rat acc = a.get(i, j);
        for (int u = 0; u <= i; ++u)
          for (int v = 0; v <= j; ++v) {
            if (u + v == 0) continue;
            acc -= b.get(u, v) * r.get(i - u, j - v);
          }
        r.set(i, j, acc / b.get(0, 0));
      }
    return r;
  }
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    if (a.order_ != b.order_) return false;
    return a.c_ == b.c_;
  }

  BiSeries negated_variables() const {
    BiSeries r(order_);
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j)
        r.set(i, j, ((i + j) % 2 == 0) ? get(i, j) : -get(i, j));
    return r;
  }

  bool all_integer() const {
    for (const Rat& v : c_)
      if (!is_integer(v)) return false;
    return true;
  }

 private:
  std::size_t midx(int i, int j) const {
    std::size_t off = 0;
    for (int r = 0; r < i; ++r) off += static_cast<std::size_t>(order_ - r + 1);
    return off + static_cast<std::size_t>(j);
  }

  int order_;
  std::vector<Rat> c_;

 public:
  // substitute a one-variable series at the linear form ax + by
  static BiSeries from_linear_form(const FormalSeries& s, long a, long b, int order) {
    BiSeries lin(order);
    if (order >= 1) {
      lin.set(1, 0, Rat(a));
      lin.set(0, 1, Rat(b));
    }
    BiSeries r(order), pw = BiSeries::one(order);
    for (int n = 0; n <= std::min(order, s.trunc()); ++n) {
      if (!(s[n] == Rat(0))) {
        BiSeries term = pw;
        for (int i = 0; i <= order; ++i)
          for (int j = 0; i + j <= order; ++j) term.set(i, j, term.get(i, j) * s[n]);
        r = r + term;
      }
      pw = pw * lin;
    }
    return r;
  }
};

}  // namespace quadform
