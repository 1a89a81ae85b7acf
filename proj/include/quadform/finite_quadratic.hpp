#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "quadform/abelian.hpp"
#include "quadform/linalg.hpp"
#include "quadform/matrix.hpp"
#include "quadform/smith.hpp"

namespace quadform {

struct DegenerateFormError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnclassifiableGaussSum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value known to be an eighth root of unity: e^{2 pi i k/8} plus the
// distance of the computed floating-point sum from that root.
struct EighthRootValue {
  int k{0};         // in 0..7
  double residual{0.0};
};

// Quadratic function q : A -> Q/Z on a finite abelian group, stored as a
// rational symmetric coefficient matrix with q(x) = x^T Q x mod 1 on
// generator-exponent tuples.  Well-definedness against the generator
// orders is checked at construction.
class FiniteQuadraticForm {
 public:
  FiniteQuadraticForm() = default;
  FiniteQuadraticForm(FiniteAbelianGroup group, RatMatrix coeffs)
      : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    const int k = static_cast<int>(group_.num_generators());
    if (coeffs_.rows() != k || coeffs_.cols() != k)
      throw std::invalid_argument("coefficient matrix size does not match generator count");
    if (!coeffs_.is_symmetric())
      throw std::invalid_argument("coefficient matrix must be symmetric");
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) coeffs_(i, j) = reduce_entry(coeffs_(i, j));
    // q(x + n_i e_i) - q(x) = 2 n_i (Qx)_i + n_i^2 Q_ii must be integral
    // for every integer x, which amounts to the constraints below.
    for (int i = 0; i < k; ++i) {
      const Int& n = group_.factors()[i];
      for (int j = 0; j < k; ++j)
        if (!is_integer(Rat(2 * n) * coeffs_(i, j)))
          throw std::invalid_argument("ill-defined quadratic form: 2*n_i*Q_ij not integral");
      if (!is_integer(Rat(n * n) * coeffs_(i, i)))
        throw std::invalid_argument("ill-defined quadratic form: n_i^2*Q_ii not integral");
    }
  }

  const FiniteAbelianGroup& group() const { return group_; }
  const RatMatrix& coeffs() const { return coeffs_; }

  // q(x) mod 1, exact
  Rat value(const std::vector<Int>& x) const {
    Rat s(0);
    const int k = coeffs_.rows();
    for (int i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < k; ++j) {
        if (x[j] == 0 || coeffs_(i, j) == Rat(0)) continue;
        s += Rat(x[i] * x[j]) * coeffs_(i, j);
      }
    }
    return mod1(s);
  }

  // B(x,y) = q(x+y) - q(x) - q(y) = 2 x^T Q y mod 1, exact
  Rat bilinear(const std::vector<Int>& x, const std::vector<Int>& y) const {
    Rat s(0);
    const int k = coeffs_.rows();
    for (int i = 0; i < k; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < k; ++j) {
        if (y[j] == 0 || coeffs_(i, j) == Rat(0)) continue;
        s += Rat(2 * x[i] * y[j]) * coeffs_(i, j);
      }
    }
    return mod1(s);
  }

  // true iff x -> B(x,.) is injective into the character group
  bool is_nondegenerate() const {
    const int k = coeffs_.rows();
    if (k == 0) return true;
    // radical = {x : 2Qx integral} modulo the generator relations
    Int m(1);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rat twice = Rat(2) * coeffs_(i, j);
        m = lcm(m, twice.get_den());
      }
    IntMatrix P(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Rat e = Rat(2) * coeffs_(i, j) * Rat(m);
        P(i, j) = e.get_num();
      }
    IntMatrix mI(k, k);
    for (int i = 0; i < k; ++i) mI(i, i) = m;
    IntMatrix rad = preimage_lattice(P, mI);
    // relations lattice
    IntMatrix R(k, k);
    for (int i = 0; i < k; ++i) R(i, i) = group_.factors()[i];
    SmithDecomposition sr = smith_normal_form(R);
    for (int j = 0; j < rad.cols(); ++j)
      if (!solve_integer(sr, rad.column(j))) return false;
    return true;
  }

 private:
  static Rat reduce_entry(const Rat& q) { return mod1(q); }

  FiniteAbelianGroup group_;
  RatMatrix coeffs_;
};

namespace detail {

// Shared accumulation: visits every element of the group once and adds
// e^{-2 pi i q(x)}.  Numerators are tracked exactly mod the common
// denominator; only the final phase of each term is converted to double.
template <typename Visit>
void enumerate_phases_int64(const std::vector<std::int64_t>& orders,
                            const std::vector<std::vector<std::int64_t>>& N, std::int64_t m,
                            Visit visit) {
  const int k = static_cast<int>(orders.size());
  if (k == 0) {
    visit(0);
    return;
  }
  std::vector<std::int64_t> lin(k, 0);  // lin[i] = (N x)_i mod m
  std::int64_t val = 0;                 // x^T N x mod m

  // recursive odometer with snapshot/restore per level
  std::vector<std::vector<std::int64_t>> lin_stack(k + 1, std::vector<std::int64_t>(k));
  std::vector<std::int64_t> val_stack(k + 1);

  auto step = [&](int t) {
    // x_t += 1:  delta = 2*lin[t] + N_tt
    val = (val + 2 * lin[t] + N[t][t]) % m;
    for (int j = 0; j < k; ++j) lin[j] = (lin[j] + N[j][t]) % m;
  };

  std::vector<std::int64_t> counter(k, 0);
  auto rec = [&](auto&& self, int level) -> void {
    if (level < 0) {
      visit(val);
      return;
    }
    lin_stack[level] = lin;
    val_stack[level] = val;
    for (std::int64_t c = 0;; ++c) {
      self(self, level - 1);
      if (c + 1 >= orders[level]) break;
      step(level);
    }
    lin = lin_stack[level];
    val = val_stack[level];
  };
  rec(rec, k - 1);
}

}  // namespace detail

// (1/sqrt|A|) sum over A of e^{-2 pi i q(x)}, snapped to the nearest eighth
// root of unity.  Milgram guarantees the exact value is such a root for a
// nondegenerate form, so double precision plus a residual bound is sound;
// both |value|-1 and the snap distance must stay below tol.
inline EighthRootValue gauss_sum(const FiniteQuadraticForm& qf, double tol = 1e-6) {
  const int k = static_cast<int>(qf.group().num_generators());
  Int m_int(1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m_int = lcm(m_int, qf.coeffs()(i, j).get_den());
  if (!m_int.fits_slong_p() || m_int > Int("2305843009213693951"))
    throw std::overflow_error("gauss_sum: common denominator too large");
  const std::int64_t m = m_int.get_si();

  std::vector<std::int64_t> orders(k);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    const Int& f = qf.group().factors()[i];
    if (!f.fits_slong_p()) throw std::overflow_error("gauss_sum: group too large");
    orders[i] = f.get_si();
    total *= static_cast<std::uint64_t>(orders[i]);
    if (total > (1ULL << 32)) throw std::overflow_error("gauss_sum: group too large to enumerate");
  }
  std::vector<std::vector<std::int64_t>> N(k, std::vector<std::int64_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat e = qf.coeffs()(i, j) * Rat(m_int);
      N[i][j] = static_cast<std::int64_t>(e.get_num().get_si());
    }

  double re = 0.0, im = 0.0;
  const double two_pi = 6.283185307179586476925286766559;
  detail::enumerate_phases_int64(orders, N, m == 0 ? 1 : m, [&](std::int64_t val) {
    double ang = -two_pi * (static_cast<double>(val) / static_cast<double>(m));
    re += std::cos(ang);
    im += std::sin(ang);
  });
  double root = std::sqrt(static_cast<double>(total));
  re /= root;
  im /= root;

  double mag = std::hypot(re, im);
  if (std::fabs(mag - 1.0) > tol)
    throw DegenerateFormError("gauss_sum: |sum| deviates from 1 (degenerate form?)");
  double arg = std::atan2(im, re);             // in (-pi, pi]
  double idx = arg / (two_pi / 8.0);           // eighths
  int kk = static_cast<int>(std::llround(idx));
  kk = ((kk % 8) + 8) % 8;
  double target = two_pi / 8.0 * kk;
  EighthRootValue v;
  v.k = kk;
  v.residual = std::hypot(re - std::cos(target), im - std::sin(target));
  if (v.residual > tol)
    throw UnclassifiableGaussSum("gauss_sum: value does not snap to an eighth root of unity");
  return v;
}

// q restricted to the isotropic subgroup generated by the given columns
// must vanish; returns the induced form on (annihilator of A0)/A0.
inline FiniteQuadraticForm isotropic_reduce(const FiniteQuadraticForm& qf,
                                            const IntMatrix& subgroup_gens) {
  const int k = static_cast<int>(qf.group().num_generators());
  if (subgroup_gens.cols() > 0 && subgroup_gens.rows() != k)
    throw std::invalid_argument("isotropic_reduce: generator length mismatch");
  const int w = subgroup_gens.cols();

  // q vanishes on the subgroup iff q(g_i) and B(g_i, g_j) are integral
  for (int i = 0; i < w; ++i) {
    if (qf.value(subgroup_gens.column(i)) != Rat(0))
      throw std::invalid_argument("isotropic_reduce: q does not vanish on the subgroup");
    for (int j = i; j < w; ++j)
      if (qf.bilinear(subgroup_gens.column(i), subgroup_gens.column(j)) != Rat(0))
        throw std::invalid_argument("isotropic_reduce: q does not vanish on the subgroup");
  }

  if (k == 0 || subgroup_gens.cols() == 0 ||
      [&] {
        for (int j = 0; j < w; ++j)
          if (!qf.group().is_zero(subgroup_gens.column(j))) return false;
        return true;
      }())
    return qf;

  // annihilator: x with B(x, g_j) integral for all j
  RatMatrix Brows(w, k);
  Int m(1);
  for (int j = 0; j < w; ++j)
    for (int c = 0; c < k; ++c) {
      Rat s(0);
      for (int i = 0; i < k; ++i)
        s += Rat(2 * subgroup_gens(i, j)) * qf.coeffs()(i, c);
      Brows(j, c) = s;
      m = lcm(m, s.get_den());
    }
  IntMatrix P(w, k);
  for (int j = 0; j < w; ++j)
    for (int c = 0; c < k; ++c) {
      Rat e = Brows(j, c) * Rat(m);
      P(j, c) = e.get_num();
    }
  IntMatrix mI(w, w);
  for (int j = 0; j < w; ++j) mI(j, j) = m;
  IntMatrix annihilator = preimage_lattice(P, mI);

  IntMatrix R(k, k);
  for (int i = 0; i < k; ++i) R(i, i) = qf.group().factors()[i];
  IntMatrix I = IntMatrix::hcat(subgroup_gens, R);
  QuotientPresentation pres = present_quotient(annihilator, I);

  std::vector<Int> orders;
  for (const Int& o : pres.orders) {
    if (o == 0) throw std::logic_error("isotropic_reduce: quotient unexpectedly infinite");
    orders.push_back(o);
  }
  const int k2 = static_cast<int>(orders.size());
  RatMatrix Q2(k2, k2);
  for (int a = 0; a < k2; ++a)
    for (int b = 0; b < k2; ++b) {
      Rat s(0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          s += Rat(pres.generators(i, a) * pres.generators(j, b)) * qf.coeffs()(i, j);
      Q2(a, b) = s;
    }
  return FiniteQuadraticForm(FiniteAbelianGroup(orders), Q2);
}

}  // namespace quadform
