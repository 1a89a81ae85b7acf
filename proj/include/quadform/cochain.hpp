#pragma once

#include <stdexcept>
#include <vector>

#include "quadform/simplicial.hpp"

namespace quadform {

// Simplicial cochain with values on the ordered simplex basis.
template <typename T>
struct Cochain {
  ComplexPtr cx;
  int degree{0};
  std::vector<T> values;

  Cochain() = default;
  Cochain(ComplexPtr c, int d)
      : cx(std::move(c)), degree(d), values(static_cast<std::size_t>(cx->num_simplices(d)), T(0)) {}
  Cochain(ComplexPtr c, int d, std::vector<T> v) : cx(std::move(c)), degree(d), values(std::move(v)) {
    if (static_cast<int>(values.size()) != cx->num_simplices(d))
      throw std::invalid_argument("cochain value count does not match simplex count");
  }

  bool is_zero() const {
    for (const auto& v : values)
      if (!(v == T(0))) return false;
    return true;
  }

  friend Cochain operator+(const Cochain& a, const Cochain& b) {
    check_compatible(a, b);
    Cochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
  }
  friend Cochain operator-(const Cochain& a, const Cochain& b) {
    check_compatible(a, b);
    Cochain r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
    return r;
  }
  friend Cochain operator*(const T& f, const Cochain& a) {
    Cochain r = a;
    for (auto& v : r.values) v *= f;
    return r;
  }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.values == b.values && a.cx == b.cx;
  }

  static void check_compatible(const Cochain& a, const Cochain& b) {
    if (a.cx != b.cx || a.degree != b.degree)
      throw std::invalid_argument("cochain mismatch (complex or degree)");
  }
};

// (delta a)(tau) = a(boundary tau)
template <typename T>
Cochain<T> delta(const Cochain<T>& a) {
  const auto& cx = *a.cx;
  Cochain<T> r(a.cx, a.degree + 1);
  if (a.degree + 1 > cx.dim() || a.degree < 0) return r;
  const IntMatrix& B = cx.boundary(a.degree + 1);
  for (int j = 0; j < cx.num_simplices(a.degree + 1); ++j) {
    T s(0);
    const auto& tau = cx.simplices(a.degree + 1)[j];
    for (std::size_t k = 0; k < tau.size(); ++k) {
      std::vector<int> face = tau;
      face.erase(face.begin() + static_cast<long>(k));
      int i = cx.index_of(a.degree, face);
      if (k % 2 == 0)
        s += a.values[i];
      else
        s -= a.values[i];
    }
    r.values[j] = s;
  }
  (void)B;
  return r;
}

template <typename T>
bool is_cocycle(const Cochain<T>& a) {
  return delta(a).is_zero();
}

// pairing <a, z> for a chain z of the same degree
template <typename T>
T evaluate(const Cochain<T>& a, const Chain<T>& z) {
  if (a.cx != z.cx || a.degree != z.degree)
    throw std::invalid_argument("evaluate: cochain/chain mismatch");
  T s(0);
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * z.coeffs[i];
  return s;
}

inline Rat evaluate_rat(const Cochain<Rat>& a, const Chain<Int>& z) {
  if (a.cx != z.cx || a.degree != z.degree)
    throw std::invalid_argument("evaluate: cochain/chain mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * Rat(z.coeffs[i]);
  return s;
}

template <typename T>
Cochain<Rat> to_rat(const Cochain<T>& a) {
  Cochain<Rat> r(a.cx, a.degree);
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values[i] = Rat(a.values[i]);
  return r;
}

inline Cochain<F2> to_f2(const Cochain<Int>& a) {
  Cochain<F2> r(a.cx, a.degree);
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values[i] = F2(a.values[i]);
  return r;
}

// 0/1 integer lift
inline Cochain<Int> lift_to_int(const Cochain<F2>& a) {
  Cochain<Int> r(a.cx, a.degree);
  for (std::size_t i = 0; i < a.values.size(); ++i) r.values[i] = Int(static_cast<int>(a.values[i].v));
  return r;
}

// Alexander-Whitney cup product: (a cup b)(v_0..v_{p+q}) =
// a(v_0..v_p) * b(v_p..v_{p+q}).
template <typename T>
Cochain<T> cup(const Cochain<T>& a, const Cochain<T>& b) {
  if (a.cx != b.cx) throw std::invalid_argument("cup: different complexes");
  const auto& cx = *a.cx;
  const int p = a.degree, q = b.degree;
  Cochain<T> r(a.cx, p + q);
  if (p < 0 || q < 0 || p + q > cx.dim()) return r;
  for (int j = 0; j < cx.num_simplices(p + q); ++j) {
    const auto& s = cx.simplices(p + q)[j];
    std::vector<int> front(s.begin(), s.begin() + p + 1);
    std::vector<int> back(s.begin() + p, s.end());
    int fi = cx.index_of(p, front);
    int bi = cx.index_of(q, back);
    r.values[j] = a.values[fi] * b.values[bi];
  }
  return r;
}

// Steenrod's cup-i product over Z/2, via the alternating-interval index
// sets: for each increasing sequence j_0 < ... < j_i inside {0..n} the
// vertices split into the "even" union of intervals [0..j_0],[j_1..j_2],...
// fed to a and the complementary "odd" union fed to b.
inline Cochain<F2> cup_i(const Cochain<F2>& a, const Cochain<F2>& b, int i) {
  if (a.cx != b.cx) throw std::invalid_argument("cup_i: different complexes");
  const auto& cx = *a.cx;
  const int p = a.degree, q = b.degree;
  const int n = p + q - i;
  Cochain<F2> r(a.cx, n);
  if (i < 0 || n < 0 || n > cx.dim()) return r;

  std::vector<int> js(i + 1);
  for (int idx = 0; idx < cx.num_simplices(n); ++idx) {
    const auto& s = cx.simplices(n)[idx];
    F2 acc(0);
    // enumerate increasing (i+1)-subsets of {0..n}
    for (int t = 0; t <= i; ++t) js[t] = t;
    while (true) {
      std::vector<int> even, odd;
      int pos = 0;
      for (int t = 0; t <= i + 1; ++t) {
        int lo = (t == 0) ? 0 : js[t - 1];
        int hi = (t == i + 1) ? n : js[t];
        auto& dst = (t % 2 == 0) ? even : odd;
        for (int v = lo; v <= hi; ++v) {
          if (!dst.empty() && dst.back() == s[v]) continue;
          dst.push_back(s[v]);
        }
        pos = hi;
      }
      (void)pos;
      if (static_cast<int>(even.size()) == p + 1 && static_cast<int>(odd.size()) == q + 1) {
        int ia = cx.index_of(p, even);
        int ib = cx.index_of(q, odd);
        acc += a.values[ia] * b.values[ib];
      }
      // next subset
      int t = i;
      while (t >= 0 && js[t] == n - (i - t)) --t;
      if (t < 0) break;
      ++js[t];
      for (int u = t + 1; u <= i; ++u) js[u] = js[u - 1] + 1;
    }
    r.values[idx] = acc;
  }
  return r;
}

// Representative cocycle of Sq^k(a) for a cocycle a: a cup_{n-k} a.
inline Cochain<F2> steenrod_square_rep(int k, const Cochain<F2>& a) {
  const int n = a.degree;
  if (k < 0 || k > n) return Cochain<F2>(a.cx, n + k);
  return cup_i(a, a, n - k);
}

// Integer cochain (delta lift(a))/2 representing the Bockstein of a mod-2
// cocycle; independent of the chosen lift up to coboundary.
inline Cochain<Int> bockstein_rep(const Cochain<F2>& a) {
  Cochain<Int> lift = lift_to_int(a);
  Cochain<Int> d = delta(lift);
  for (auto& v : d.values) {
    if (mpz_odd_p(v.get_mpz_t())) throw std::invalid_argument("bockstein: input is not a cocycle");
    v /= 2;
  }
  return d;
}

}  // namespace quadform
