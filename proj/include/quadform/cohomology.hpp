#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "quadform/cochain.hpp"
#include "quadform/linalg.hpp"
#include "quadform/smith.hpp"

namespace quadform {

// H^k(M;Z) via Smith forms of the coboundary matrices.  orders[i] = 0 marks
// a free generator, else the invariant factor (>= 2).
struct CohomologyZ {
  ComplexPtr cx;
  int degree{0};
  std::vector<Int> orders;
  std::vector<Cochain<Int>> basis;
  QuotientPresentation pres;

  int free_rank() const {
    int r = 0;
    for (const Int& o : orders)
      if (o == 0) ++r;
    return r;
  }
  std::vector<Int> torsion() const {
    std::vector<Int> t;
    for (const Int& o : orders)
      if (o > 1) t.push_back(o);
    return t;
  }
  AbelianDescription description() const { return {torsion(), free_rank()}; }

  // coordinates of [z] with respect to basis, torsion coords reduced
  std::vector<Int> class_coordinates(const Cochain<Int>& z) const {
    return pres.coordinates(z.values);
  }
  bool is_trivial_class(const Cochain<Int>& z) const { return pres.is_zero_class(z.values); }
};

inline CohomologyZ cohomology_z(const ComplexPtr& cx, int k) {
  CohomologyZ h;
  h.cx = cx;
  h.degree = k;
  if (k < 0 || k > cx->dim()) {
    h.pres = present_quotient(IntMatrix(0, 0), IntMatrix(0, 0));
    return h;
  }
  IntMatrix dk = cx->coboundary_matrix(k);
  IntMatrix kernel = dk.rows() == 0 ? IntMatrix::identity(cx->num_simplices(k)) : integer_kernel(dk);
  IntMatrix image = k == 0 ? IntMatrix(cx->num_simplices(0), 0) : cx->coboundary_matrix(k - 1);
  h.pres = present_quotient(kernel, image);
  h.orders = h.pres.orders;
  for (int j = 0; j < h.pres.generators.cols(); ++j)
    h.basis.emplace_back(cx, k, h.pres.generators.column(j));
  return h;
}

// Field-coefficient cohomology (F2 or Q): basis cocycles plus coordinate
// solves against basis and coboundaries.
template <typename T>
struct CohomologyField {
  ComplexPtr cx;
  int degree{0};
  std::vector<Cochain<T>> basis;
  Matrix<T> basis_mat;      // columns = basis cocycles
  Matrix<T> image_mat;      // columns span the coboundaries
  int dimension() const { return static_cast<int>(basis.size()); }

  std::vector<T> class_coordinates(const Cochain<T>& z) const {
    Matrix<T> aug = Matrix<T>::hcat(basis_mat, image_mat);
    auto sol = solve_field(aug, z.values);
    if (!sol) throw std::invalid_argument("class_coordinates: not a cocycle class member");
    return std::vector<T>(sol->begin(), sol->begin() + basis.size());
  }
  bool is_trivial_class(const Cochain<T>& z) const {
    for (const T& c : class_coordinates(z))
      if (!(c == T(0))) return false;
    return true;
  }
};

template <typename T>
CohomologyField<T> cohomology_field(const ComplexPtr& cx, int k) {
  CohomologyField<T> h;
  h.cx = cx;
  h.degree = k;
  const int nk = cx->num_simplices(k);
  h.basis_mat = Matrix<T>(nk, 0);
  h.image_mat = Matrix<T>(nk, 0);
  if (k < 0 || k > cx->dim()) return h;

  auto convert = [](const IntMatrix& m) { return m.template map<T>([](const Int& x) { return T(x); }); };
  Matrix<T> dk = convert(cx->coboundary_matrix(k));
  Matrix<T> kernel = dk.rows() == 0 ? Matrix<T>::identity(nk) : kernel_field(dk);
  Matrix<T> image =
      k == 0 ? Matrix<T>(nk, 0) : convert(cx->coboundary_matrix(k - 1));
  h.image_mat = image;

  // choose kernel vectors extending a column basis of the image
  Matrix<T> acc = image;
  int rank = rank_field(acc);
  for (int j = 0; j < kernel.cols(); ++j) {
    Matrix<T> cand(nk, acc.cols() + 1);
    for (int i = 0; i < nk; ++i) {
      for (int c = 0; c < acc.cols(); ++c) cand(i, c) = acc(i, c);
      cand(i, acc.cols()) = kernel(i, j);
    }
    int r2 = rank_field(cand);
    if (r2 > rank) {
      rank = r2;
      acc = cand;
      h.basis.emplace_back(cx, k, kernel.column(j));
    }
  }
  h.basis_mat = Matrix<T>(nk, static_cast<int>(h.basis.size()));
  for (std::size_t j = 0; j < h.basis.size(); ++j)
    h.basis_mat.set_column(static_cast<int>(j), h.basis[j].values);
  return h;
}

inline CohomologyField<F2> cohomology_f2(const ComplexPtr& cx, int k) {
  return cohomology_field<F2>(cx, k);
}
inline CohomologyField<Rat> cohomology_q(const ComplexPtr& cx, int k) {
  return cohomology_field<Rat>(cx, k);
}

// Integral homology H_k(M;Z), for validation of the built-in complexes.
inline AbelianDescription homology_z(const ComplexPtr& cx, int k) {
  if (k < 0 || k > cx->dim()) return {{}, 0};
  const int nk = cx->num_simplices(k);
  IntMatrix bk = cx->boundary(k);  // C_k -> C_{k-1}; empty when k == 0
  IntMatrix kernel = (k == 0) ? IntMatrix::identity(nk) : integer_kernel(bk);
  IntMatrix image = (k + 1 > cx->dim()) ? IntMatrix(nk, 0) : cx->boundary(k + 1);
  QuotientPresentation q = present_quotient(kernel, image);
  return {q.torsion(), q.free_rank()};
}

}  // namespace quadform
