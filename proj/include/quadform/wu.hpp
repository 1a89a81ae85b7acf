#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "quadform/cochain.hpp"
#include "quadform/cohomology.hpp"
#include "quadform/signature.hpp"

namespace quadform {

// Gram matrix of the middle cup pairing <x cup y, [M]> on H^{2k}(M;Q).
inline RatMatrix cup_pairing_gram(const CohomologyField<Rat>& h, const Chain<Int>& mu) {
  const int n = h.dimension();
  RatMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = evaluate_rat(cup(h.basis[i], h.basis[j]), mu);
  if (!G.is_symmetric())
    throw std::logic_error("cup pairing Gram unexpectedly non-symmetric");
  return G;
}

// Signature of a closed oriented 4k-manifold from the middle cup pairing.
inline int manifold_signature(const ComplexPtr& cx, const Chain<Int>& mu) {
  if (cx->dim() % 2 != 0) throw std::invalid_argument("signature needs even dimension");
  CohomologyField<Rat> h = cohomology_q(cx, cx->dim() / 2);
  return signature_of_symmetric(cup_pairing_gram(h, mu)).signature();
}

// Wu class nu_k: the unique class with <nu_k cup x, [M]> = <Sq^k x, [M]>
// for every x in H^{n-k}(M;Z/2).  Errors when the Poincare pairing between
// H^k and H^{n-k} is degenerate (input not a closed manifold triangulation).
inline Cochain<F2> wu_class(const ComplexPtr& cx, int k) {
  const int n = cx->dim();
  if (k < 0 || k > n) throw std::invalid_argument("wu_class: degree out of range");
  Chain<F2> mu = fundamental_cycle_f2(cx);
  CohomologyField<F2> hk = cohomology_f2(cx, k);
  CohomologyField<F2> hc = cohomology_f2(cx, n - k);
  const int a = hk.dimension(), b = hc.dimension();
  // pairing P_{ji} = <y_i cup x_j, [M]>, unknowns c_i with P c = s
  Matrix<F2> P(b, a);
  std::vector<F2> s(b);
  for (int j = 0; j < b; ++j) {
    for (int i = 0; i < a; ++i) P(j, i) = evaluate(cup(hk.basis[i], hc.basis[j]), mu);
    s[j] = evaluate(steenrod_square_rep(k, hc.basis[j]), mu);
  }
  if (rank_field(P) != std::max(a, b) || a != b)
    throw std::invalid_argument("wu_class: Poincare pairing degenerate");
  auto c = solve_field(P, s);
  if (!c) throw std::invalid_argument("wu_class: characteristic system unsolvable");
  Cochain<F2> nu(cx, k);
  for (int i = 0; i < a; ++i)
    if ((*c)[i] == F2(1)) nu = nu + hk.basis[i];
  return nu;
}

// Integer cocycle lambda with lambda = nu mod 2, via an integer solve;
// errors when no lift exists (obstructed Bockstein).
inline Cochain<Int> integral_wu_lift(const ComplexPtr& cx, const Cochain<F2>& nu) {
  if (!is_cocycle(nu)) throw std::invalid_argument("integral_wu_lift: nu is not a cocycle");
  Cochain<Int> tilde = lift_to_int(nu);
  Cochain<Int> obstruction = delta(tilde);
  for (auto& v : obstruction.values) {
    if (mpz_odd_p(v.get_mpz_t())) throw std::logic_error("lift parity failure");
    v = -v / 2;
  }
  IntMatrix d = cx->coboundary_matrix(nu.degree);
  auto u = solve_integer(d, obstruction.values);
  if (!u) throw std::invalid_argument("integral_wu_lift: no integral lift (nonzero Bockstein)");
  Cochain<Int> lambda = tilde + Int(2) * Cochain<Int>(cx, nu.degree, *u);
  if (!is_cocycle(lambda)) throw std::logic_error("integral_wu_lift: lift is not a cocycle");
  return lambda;
}

// kappa = (<lambda cup lambda, [M]> - sigma)/8 for an integral Wu lift.
inline Rat kappa_manifold(const ComplexPtr& cx, const Cochain<Int>& lambda, const Chain<Int>& mu) {
  Int l2 = evaluate(cup(lambda, lambda), mu);
  int sigma = manifold_signature(cx, mu);
  return Rat(l2 - sigma) / Rat(8);
}

// q^lambda(x) = (<x cup x, [M]> - <x cup lambda, [M]>)/2 for integer
// cocycles x on a 4k-manifold with integral Wu lift lambda.
inline Rat q_lambda(const ComplexPtr& cx, const Cochain<Int>& lambda, const Cochain<Int>& x,
                    const Chain<Int>& mu) {
  if (!is_cocycle(x)) throw std::invalid_argument("q_lambda: x is not a cocycle");
  Int xx = evaluate(cup(x, x), mu);
  Int xl = evaluate(cup(x, lambda), mu);
  return Rat(xx - xl) / Rat(2);
}

inline Rat q_lambda_defect(const ComplexPtr& cx, const Cochain<Int>& lambda, const Cochain<Int>& x,
                           const Cochain<Int>& y, const Chain<Int>& mu) {
  return q_lambda(cx, lambda, x + y, mu) - q_lambda(cx, lambda, x, mu) -
         q_lambda(cx, lambda, y, mu);
}

// Change-of-spin shift: the integral class beta(sum over powers
// alpha^{2^l - 1} cup nu_{2k - 2^l}) acting on integral Wu structures.
inline Cochain<Int> change_of_spin_shift(const ComplexPtr& cx, const Cochain<F2>& alpha, int k2) {
  if (alpha.degree != 1) throw std::invalid_argument("change_of_spin_shift: alpha must have degree 1");
  if (!is_cocycle(alpha)) throw std::invalid_argument("change_of_spin_shift: alpha not closed");
  const int target = 2 * k2 - 1;  // degree of the mod-2 sum
  Cochain<F2> total(cx, target);
  Cochain<F2> alpha_pow = alpha;  // alpha^1
  int pw = 1;
  for (int l = 1;; ++l) {
    int want = (1 << l) - 1;  // exponent 2^l - 1
    int nu_deg = 2 * k2 - (1 << l);
    if (nu_deg < 0) break;
    while (pw < want) {
      alpha_pow = cup(alpha_pow, alpha);
      ++pw;
    }
    if (want > cx->dim()) break;
    Cochain<F2> nu = wu_class(cx, nu_deg);
    Cochain<F2> term = cup(alpha_pow, nu);
    if (term.degree == target) total = total + term;
  }
  return bockstein_rep(total);
}

}  // namespace quadform
