#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quadform/matrix.hpp"

namespace quadform {

// U * A * V = D with U, V unimodular and D = diag(d1, d2, ...) satisfying
// d1 | d2 | ... , di >= 0.  U_inv and V_inv are accumulated alongside so no
// matrix inversion is ever needed downstream.
struct SmithDecomposition {
  IntMatrix U, V, D, U_inv, V_inv;
  int rank{0};

  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i) d.push_back(D(i, i));
    return d;
  }
  // invariant factors > 1
  std::vector<Int> elementary_divisors() const {
    std::vector<Int> r;
    for (const Int& d : diagonal())
      if (d > 1) r.push_back(d);
    return r;
  }
};

// Classical elimination.  Pivot rule: smallest nonzero absolute value in the
// trailing submatrix, scanning rows first, then columns, first hit wins.
// This keeps entry growth modest and makes the output deterministic.
inline SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const int m = A.rows(), n = A.cols();
  SmithDecomposition s;
  s.D = A;
  s.U = IntMatrix::identity(m);
  s.U_inv = IntMatrix::identity(m);
  s.V = IntMatrix::identity(n);
  s.V_inv = IntMatrix::identity(n);
  IntMatrix& D = s.D;

  auto row_add = [&](int a, int b, const Int& f) {
    // row_a += f * row_b on D and U; inverse op on U_inv columns
    D.add_row(a, b, f);
    s.U.add_row(a, b, f);
    s.U_inv.add_col(b, a, -f);
  };
  auto col_add = [&](int a, int b, const Int& f) {
    D.add_col(a, b, f);
    s.V.add_col(a, b, f);
    s.V_inv.add_row(b, a, -f);
  };
  auto row_swap = [&](int a, int b) {
    D.swap_rows(a, b);
    s.U.swap_rows(a, b);
    s.U_inv.swap_cols(a, b);
  };
  auto col_swap = [&](int a, int b) {
    D.swap_cols(a, b);
    s.V.swap_cols(a, b);
    s.V_inv.swap_rows(a, b);
  };
  auto row_negate = [&](int a) {
    D.scale_row(a, Int(-1));
    s.U.scale_row(a, Int(-1));
    s.U_inv.scale_col(a, Int(-1));
  };

  int t = 0;
  const int lim = std::min(m, n);
  while (t < lim) {
    // locate pivot
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (D(i, j) == 0) continue;
        Int a = abs(D(i, j));
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) row_swap(t, pi);
    if (pj != t) col_swap(t, pj);
    if (D(t, t) < 0) row_negate(t);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // clear column t
      for (int i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        if (q != 0) row_add(i, t, -q);
        if (D(i, t) != 0) {
          // remainder became the smaller pivot
          row_swap(t, i);
          dirty = true;
        }
      }
      // clear row t
      for (int j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        if (q != 0) col_add(j, t, -q);
        if (D(t, j) != 0) {
          col_swap(t, j);
          dirty = true;
        }
      }
      if (D(t, t) < 0) row_negate(t);
    }

    // enforce divisibility d_t | trailing entries
    bool fixed = true;
    for (int i = t + 1; i < m && fixed; ++i)
      for (int j = t + 1; j < n && fixed; ++j)
        if (mod_pos(D(i, j), D(t, t)) != 0) {
          row_add(t, i, Int(1));
          fixed = false;
        }
    if (!fixed) continue;  // re-eliminate at the same t
    ++t;
  }
  s.rank = t;
  return s;
}

// Exact determinant by Bareiss fraction-free elimination.
inline Int determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: square matrix required");
  const int n = A.rows();
  if (n == 0) return Int(1);
  IntMatrix M = A;
  Int sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

// One solution of A x = b over the integers, or nullopt if none exists.
inline std::optional<std::vector<Int>> solve_integer(const SmithDecomposition& s,
                                                     const std::vector<Int>& b) {
  const int m = s.D.rows(), n = s.D.cols();
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("solve_integer: dimension mismatch");
  std::vector<Int> c = s.U.apply(b);
  std::vector<Int> y(n, Int(0));
  for (int i = 0; i < std::min(m, n); ++i) {
    if (s.D(i, i) == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.D(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), s.D(i, i).get_mpz_t());
    }
  }
  for (int i = n; i < m; ++i)
    if (c[i] != 0) return std::nullopt;
  return s.V.apply(y);
}

inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                                     const std::vector<Int>& b) {
  return solve_integer(smith_normal_form(A), b);
}

// Basis of {x : A x = 0}, one column per basis vector.
inline IntMatrix integer_kernel(const SmithDecomposition& s) {
  const int n = s.D.cols();
  IntMatrix K(n, n - s.rank);
  for (int j = s.rank; j < n; ++j)
    for (int i = 0; i < n; ++i) K(i, j - s.rank) = s.V(i, j);
  return K;
}

inline IntMatrix integer_kernel(const IntMatrix& A) {
  return integer_kernel(smith_normal_form(A));
}

// Basis for the lattice spanned by the columns of G.
inline IntMatrix column_span_basis(const IntMatrix& G) {
  SmithDecomposition s = smith_normal_form(G);
  IntMatrix B(G.rows(), s.rank);
  // span(G) = span(G V) = span(U_inv D); basis vectors d_i * U_inv e_i
  for (int j = 0; j < s.rank; ++j)
    for (int i = 0; i < G.rows(); ++i) B(i, j) = s.U_inv(i, j) * s.D(j, j);
  return B;
}

// Generators (columns) of the sublattice {x in Z^g : M x lies in col-span(R)}.
inline IntMatrix preimage_lattice(const IntMatrix& M, const IntMatrix& R) {
  if (R.cols() == 0) return integer_kernel(M);
  IntMatrix aug = IntMatrix::hcat(M, R);
  IntMatrix ker = integer_kernel(aug);
  IntMatrix proj(M.cols(), ker.cols());
  for (int i = 0; i < M.cols(); ++i)
    for (int j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  return column_span_basis(proj);
}

// Presentation of span(K)/span(I) for sublattices I <= span(K) of Z^g.
// K's columns must be a basis.  Generators are returned in ambient
// coordinates; orders[i] is 0 for a free generator, else >= 2 (order-1
// generators are dropped).
struct QuotientPresentation {
  std::vector<Int> orders;
  IntMatrix generators;            // ambient coords, one column per generator
  IntMatrix basis;                 // the basis K used
  IntMatrix coord_map;             // U from the SNF of the relation matrix
  SmithDecomposition basis_snf;    // SNF of K, for coordinate solves
  std::vector<int> kept;           // indices into 0..l-1 of kept generators
  std::vector<Int> all_orders;     // per basis direction, before dropping

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

  // Coordinates of an ambient vector (which must lie in span(K)) with
  // respect to the kept generators, reduced mod orders.
  std::vector<Int> coordinates(const std::vector<Int>& x) const {
    auto y = solve_integer(basis_snf, x);
    if (!y) throw std::invalid_argument("quotient coordinates: vector not in lattice");
    std::vector<Int> full = coord_map.apply(*y);
    std::vector<Int> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      Int c = full[kept[i]];
      if (orders[i] > 1) c = mod_pos(c, orders[i]);
      out.push_back(c);
    }
    return out;
  }

  bool is_zero_class(const std::vector<Int>& x) const {
    for (const Int& c : coordinates(x))
      if (c != 0) return false;
    return true;
  }
};

inline QuotientPresentation present_quotient(const IntMatrix& K, const IntMatrix& I) {
  QuotientPresentation q;
  q.basis = K;
  q.basis_snf = smith_normal_form(K);
  const int l = K.cols();
  // express the columns of I in the basis K
  IntMatrix Y(l, I.cols());
  for (int j = 0; j < I.cols(); ++j) {
    auto y = solve_integer(q.basis_snf, I.column(j));
    if (!y) throw std::invalid_argument("present_quotient: relations not inside the lattice");
    Y.set_column(j, *y);
  }
  SmithDecomposition sy = smith_normal_form(Y);
  q.coord_map = sy.U;
  q.all_orders.assign(l, Int(0));
  for (int i = 0; i < std::min(l, Y.cols()); ++i) q.all_orders[i] = sy.D(i, i);
  for (int i = 0; i < l; ++i) {
    if (q.all_orders[i] == 1) continue;
    q.kept.push_back(i);
    q.orders.push_back(q.all_orders[i]);
  }
  q.generators = IntMatrix(K.rows(), static_cast<int>(q.kept.size()));
  for (std::size_t jj = 0; jj < q.kept.size(); ++jj) {
    // generator = K * (column kept[jj] of U_inv)
    std::vector<Int> col = sy.U_inv.column(q.kept[jj]);
    std::vector<Int> amb = K.apply(col);
    q.generators.set_column(static_cast<int>(jj), amb);
  }
  return q;
}

// Z^cols(A) / row-span(A): the matrix is read as a presentation whose rows
// are relations among cols(A) generators.
struct AbelianDescription {
  std::vector<Int> torsion;  // invariant factors >= 2, divisibility chain
  int free_rank{0};
  Int order() const {  // torsion order
    Int o(1);
    for (const Int& t : torsion) o *= t;
    return o;
  }
  friend bool operator==(const AbelianDescription& a, const AbelianDescription& b) {
    return a.torsion == b.torsion && a.free_rank == b.free_rank;
  }
};

inline AbelianDescription cokernel_presentation(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  AbelianDescription d;
  d.torsion = s.elementary_divisors();
  d.free_rank = A.cols() - s.rank;
  return d;
}

}  // namespace quadform
