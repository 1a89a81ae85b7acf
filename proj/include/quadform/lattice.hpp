#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadform/finite_quadratic.hpp"
#include "quadform/linalg.hpp"
#include "quadform/matrix.hpp"
#include "quadform/signature.hpp"
#include "quadform/smith.hpp"

namespace quadform {

// Free abelian group of finite rank with a nondegenerate symmetric
// integer bilinear form.
class IntegralLattice {
 public:
  explicit IntegralLattice(IntMatrix gram, std::string label = "")
      : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_symmetric()) throw std::invalid_argument("lattice: Gram matrix must be symmetric");
    det_ = determinant(gram_);
    if (det_ == 0) throw std::invalid_argument("lattice: Gram matrix must be nondegenerate");
  }

  int rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const Int& det() const { return det_; }
  const std::string& label() const { return label_; }

  Int bilinear(const std::vector<Int>& x, const std::vector<Int>& y) const {
    Int s(0);
    for (int i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) {
        if (y[j] == 0 || gram_(i, j) == 0) continue;
        s += x[i] * gram_(i, j) * y[j];
      }
    }
    return s;
  }

  Inertia inertia() const { return signature_of_symmetric(to_rat(gram_)); }
  int signature() const { return inertia().signature(); }

  // lambda is characteristic iff B(x,x) = B(x,lambda) mod 2 for all x,
  // equivalently G*lambda = diag(G) mod 2.
  bool is_characteristic(const std::vector<Int>& lambda) const {
    if (static_cast<int>(lambda.size()) != rank()) return false;
    std::vector<Int> gl = gram_.apply(lambda);
    for (int i = 0; i < rank(); ++i)
      if (mod_pos(gl[i] - gram_(i, i), Int(2)) != 0) return false;
    return true;
  }

 private:
  IntMatrix gram_;
  Int det_;
  std::string label_;
};

// Canonical characteristic vector: the lexicographically smallest 0/1
// solution of G*lambda = diag(G) over F2, lifted with zeros.  The mod-2
// system is always solvable for a symmetric matrix.
inline std::vector<Int> characteristic_vector(const IntegralLattice& L) {
  const int n = L.rank();
  Matrix<F2> A = to_f2(L.gram());
  std::vector<F2> b(n);
  for (int i = 0; i < n; ++i) b[i] = F2(L.gram()(i, i));
  auto sol = solve_f2_lex_min(A, b);
  if (!sol) throw std::logic_error("characteristic system unsolvable (cannot happen)");
  std::vector<Int> lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = Int(static_cast<int>((*sol)[i].v));
  return lambda;
}

// q(x) = (B(x,x) - B(x,lambda))/2, an exact integer.
inline Int quadratic_refinement(const IntegralLattice& L, const std::vector<Int>& lambda,
                                const std::vector<Int>& x) {
  if (!L.is_characteristic(lambda))
    throw std::invalid_argument("quadratic_refinement: lambda is not characteristic");
  Int num = L.bilinear(x, x) - L.bilinear(x, lambda);
  if (mpz_odd_p(num.get_mpz_t())) throw std::logic_error("parity failure in quadratic refinement");
  return num / 2;
}

// q(x+y) - q(x) - q(y) + q(0); contract: equals B(x,y).
inline Int refinement_defect(const IntegralLattice& L, const std::vector<Int>& lambda,
                             const std::vector<Int>& x, const std::vector<Int>& y) {
  std::vector<Int> xy = vec_add(x, y);
  return quadratic_refinement(L, lambda, xy) - quadratic_refinement(L, lambda, x) -
         quadratic_refinement(L, lambda, y);
}

// Residue (B(lambda,lambda) - sigma) mod 8.  Van der Blij forces 0 for
// unimodular lattices; for |det| > 1 the residue is reported, not asserted.
inline Int van_der_blij_residue(const IntegralLattice& L, const std::vector<Int>& lambda) {
  if (!L.is_characteristic(lambda))
    throw std::invalid_argument("van_der_blij_residue: lambda is not characteristic");
  Int r = L.bilinear(lambda, lambda) - L.signature();
  return mod_pos(r, Int(8));
}

// kappa = (B(lambda,lambda) - sigma)/8; an integer whenever |det| = 1.
inline Rat kappa_4k_lattice(const IntegralLattice& L, const std::vector<Int>& lambda) {
  if (!L.is_characteristic(lambda))
    throw std::invalid_argument("kappa_4k_lattice: lambda is not characteristic");
  return Rat(L.bilinear(lambda, lambda) - L.signature()) / Rat(8);
}

// Discriminant group L*/L with rational generator lifts and the induced
// quadratic function q(x) = (B(x,x) - B(x,lambda))/2 mod 1 on lifts.
struct DiscriminantData {
  FiniteAbelianGroup group;
  RatMatrix lifts;           // columns: generator lifts in L (x) Q coordinates
  std::vector<Rat> q_values; // q on the generators, in [0,1)
  FiniteQuadraticForm form;
};

inline DiscriminantData discriminant_form(const IntegralLattice& L,
                                          const std::vector<Int>& lambda) {
  if (!L.is_characteristic(lambda))
    throw std::invalid_argument("discriminant_form: lambda is not characteristic");
  const int n = L.rank();
  SmithDecomposition s = smith_normal_form(L.gram());
  std::vector<Int> factors;
  std::vector<int> kept;
  for (int i = 0; i < n; ++i)
    if (s.D(i, i) > 1) {
      factors.push_back(s.D(i, i));
      kept.push_back(i);
    }
  const int k = static_cast<int>(kept.size());

  DiscriminantData d;
  d.group = FiniteAbelianGroup(factors);
  d.lifts = RatMatrix(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) d.lifts(i, j) = make_rat(s.V(i, kept[j]), s.D(kept[j], kept[j]));

  RatMatrix G = to_rat(L.gram());
  RatMatrix S = d.lifts.transposed() * G * d.lifts;
  std::vector<Int> parity(k);
  for (int j = 0; j < k; ++j) {
    Rat v(0);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) v += d.lifts(i, j) * Rat(L.gram()(i, t) * lambda[t]);
    if (!is_integer(v)) throw std::logic_error("dual-lattice pairing with lambda not integral");
    parity[j] = mod_pos(v.get_num(), Int(2));
  }
  RatMatrix Q(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Q(a, b) = S(a, b) / Rat(2);
      if (a == b && parity[a] == 1) Q(a, b) -= Rat(1, 2);
    }
  d.form = FiniteQuadraticForm(d.group, Q);
  for (int j = 0; j < k; ++j) {
    std::vector<Int> e(k, Int(0));
    e[j] = 1;
    d.q_values.push_back(d.form.value(e));
  }
  return d;
}

// Gauss-sum side against the lattice side of Milgram's identity.
inline bool milgram_check(const IntegralLattice& L, const std::vector<Int>& lambda) {
  DiscriminantData d = discriminant_form(L, lambda);
  EighthRootValue g = gauss_sum(d.form);
  Int rhs = van_der_blij_residue(L, lambda);
  return Int(g.k) == rhs;
}

}  // namespace quadform
