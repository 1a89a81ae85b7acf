#pragma once

#include <optional>
#include <vector>

#include "quadform/matrix.hpp"

namespace quadform {

// Row reduction over a field (Rat or F2).  Returns pivot columns.
template <typename T>
std::vector<int> rref_in_place(Matrix<T>& A) {
  std::vector<int> pivots;
  int r = 0;
  for (int j = 0; j < A.cols() && r < A.rows(); ++j) {
    int p = -1;
    for (int i = r; i < A.rows(); ++i)
      if (!(A(i, j) == T(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) A.swap_rows(p, r);
    T inv = T(1) / A(r, j);
    if (!(inv == T(1))) A.scale_row(r, inv);
    for (int i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, j) == T(0)) continue;
      A.add_row(i, r, -A(i, j));
    }
    pivots.push_back(j);
    ++r;
  }
  return pivots;
}

template <typename T>
int rank_field(Matrix<T> A) {
  return static_cast<int>(rref_in_place(A).size());
}

// One solution of A x = b, or nullopt.
template <typename T>
std::optional<std::vector<T>> solve_field(const Matrix<T>& A, const std::vector<T>& b) {
  Matrix<T> aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  std::vector<int> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;  // inconsistent
  std::vector<T> x(A.cols(), T(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), A.cols());
  return x;
}

// Basis of {x : A x = 0}, one column per basis vector.
template <typename T>
Matrix<T> kernel_field(Matrix<T> A) {
  const int n = A.cols();
  std::vector<int> piv = rref_in_place(A);
  std::vector<bool> is_piv(n, false);
  for (int j : piv) is_piv[j] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  Matrix<T> K(n, static_cast<int>(free_cols.size()));
  for (std::size_t c = 0; c < free_cols.size(); ++c) {
    int f = free_cols[c];
    K(f, static_cast<int>(c)) = T(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      K(piv[r], static_cast<int>(c)) = -A(static_cast<int>(r), f);
  }
  return K;
}

// Lexicographically smallest element of the affine solution set of A x = b
// over F2, preferring 0 in earlier coordinates.  nullopt if unsolvable.
inline std::optional<std::vector<F2>> solve_f2_lex_min(const Matrix<F2>& A,
                                                       const std::vector<F2>& b) {
  auto x0 = solve_field(A, b);
  if (!x0) return std::nullopt;
  Matrix<F2> K = kernel_field(A);
  // Reduce the kernel basis so each vector has a distinct leading coordinate,
  // then clear the particular solution at those coordinates.
  std::vector<std::vector<F2>> basis;
  for (int j = 0; j < K.cols(); ++j) basis.push_back(K.column(j));
  std::vector<int> lead;
  std::vector<std::vector<F2>> reduced;
  for (auto v : basis) {
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      int l = lead[k];
      if (v[l] == F2(1)) v = vec_add(v, reduced[k]);
    }
    int l = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == F2(1)) {
        l = static_cast<int>(i);
        break;
      }
    if (l < 0) continue;
    // keep earlier reduced vectors clear at l
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (reduced[k][l] == F2(1)) reduced[k] = vec_add(reduced[k], v);
    reduced.push_back(v);
    lead.push_back(l);
  }
  std::vector<F2> x = *x0;
  // visit leads in increasing coordinate order
  std::vector<std::size_t> idx(reduced.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b2) { return lead[a] < lead[b2]; });
  for (std::size_t k : idx)
    if (x[lead[k]] == F2(1)) x = vec_add(x, reduced[k]);
  return x;
}

}  // namespace quadform
