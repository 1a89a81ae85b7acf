#include <catch2/catch_amalgamated.hpp>

#include "quadform/linalg.hpp"
#include "quadform/matrix.hpp"
#include "quadform/rng.hpp"
#include "quadform/signature.hpp"
#include "quadform/smith.hpp"

using namespace quadform;

namespace {

IntMatrix random_int_matrix(Rng& rng, int rows, int cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Int(rng.range(lo, hi));
  return m;
}

// random unimodular matrix as a product of elementary row operations
IntMatrix random_unimodular(Rng& rng, int n, int ops, long coeff = 2) {
  IntMatrix u = IntMatrix::identity(n);
  for (int t = 0; t < ops; ++t) {
    int a = static_cast<int>(rng.below(n));
    int b = static_cast<int>(rng.below(n));
    if (a == b) continue;
    u.add_row(a, b, Int(rng.range(-coeff, coeff)));
  }
  return u;
}

void check_snf(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  REQUIRE(s.U * A * s.V == s.D);
  REQUIRE(s.U * s.U_inv == IntMatrix::identity(A.rows()));
  REQUIRE(s.V * s.V_inv == IntMatrix::identity(A.cols()));
  Int du = determinant(s.U), dv = determinant(s.V);
  REQUIRE(abs(du) == 1);
  REQUIRE(abs(dv) == 1);
  for (int i = 0; i + 1 < std::min(s.D.rows(), s.D.cols()); ++i) {
    REQUIRE(s.D(i, i) >= 0);
    if (s.D(i + 1, i + 1) != 0) {
      REQUIRE(s.D(i, i) >= 0);
      if (s.D(i, i) != 0) REQUIRE(mod_pos(s.D(i + 1, i + 1), s.D(i, i)) == 0);
    }
  }
  for (int i = 0; i < s.D.rows(); ++i)
    for (int j = 0; j < s.D.cols(); ++j)
      if (i != j) REQUIRE(s.D(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form on the named examples") {
  IntMatrix A{{Int(2), Int(0)}, {Int(0), Int(3)}};
  SmithDecomposition s = smith_normal_form(A);
  check_snf(A);
  REQUIRE(s.elementary_divisors() == std::vector<Int>{Int(6)});
  REQUIRE(s.diagonal() == std::vector<Int>{Int(1), Int(6)});

  IntMatrix id = IntMatrix::identity(4);
  SmithDecomposition si = smith_normal_form(id);
  REQUIRE(si.D == id);
  check_snf(id);

  IntMatrix z(3, 2);
  SmithDecomposition sz = smith_normal_form(z);
  REQUIRE(sz.rank == 0);
  REQUIRE(sz.D.is_zero());
  check_snf(z);
}

TEST_CASE("smith normal form properties on random matrices") {
  Rng rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(5));
    int cols = 1 + static_cast<int>(rng.below(5));
    IntMatrix A = random_int_matrix(rng, rows, cols, -9, 9);
    check_snf(A);
  }
}

TEST_CASE("solve_integer basic cases") {
  IntMatrix A1{{Int(2)}};
  auto x1 = solve_integer(A1, {Int(4)});
  REQUIRE(x1.has_value());
  REQUIRE((*x1)[0] == 2);
  REQUIRE(!solve_integer(A1, {Int(3)}).has_value());

  IntMatrix A2{{Int(1), Int(1)}, {Int(0), Int(2)}};
  auto x2 = solve_integer(A2, {Int(1), Int(2)});
  REQUIRE(x2.has_value());
  REQUIRE(A2.apply(*x2) == std::vector<Int>{Int(1), Int(2)});
  REQUIRE((*x2) == std::vector<Int>{Int(0), Int(1)});
}

TEST_CASE("solve_integer agrees with the Smith-form solvability criterion") {
  Rng rng(777);
  for (int trial = 0; trial < 80; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(4));
    int cols = 1 + static_cast<int>(rng.below(4));
    IntMatrix A = random_int_matrix(rng, rows, cols, -5, 5);
    std::vector<Int> b(rows);
    for (int i = 0; i < rows; ++i) b[i] = Int(rng.range(-8, 8));
    auto x = solve_integer(A, b);
    if (x) {
      REQUIRE(A.apply(*x) == b);
    } else {
      // brute-force small search confirms insolvability
      bool found = false;
      std::vector<long> v(cols, -6);
      while (true) {
        std::vector<Int> xx(cols);
        for (int j = 0; j < cols; ++j) xx[j] = Int(v[j]);
        if (A.apply(xx) == b) {
          found = true;
          break;
        }
        int j = 0;
        while (j < cols && ++v[j] > 6) v[j++] = -6;
        if (j == cols) break;
      }
      REQUIRE(!found);
    }
  }
}

TEST_CASE("integer kernel columns really span the kernel") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(4));
    int cols = 1 + static_cast<int>(rng.below(4));
    IntMatrix A = random_int_matrix(rng, rows, cols, -6, 6);
    IntMatrix K = integer_kernel(A);
    REQUIRE((A * K).is_zero());
    SmithDecomposition s = smith_normal_form(A);
    REQUIRE(K.cols() == cols - s.rank);
  }
}

TEST_CASE("cokernel presentation") {
  AbelianDescription d1 = cokernel_presentation(IntMatrix{{Int(2)}});
  REQUIRE(d1.torsion == std::vector<Int>{Int(2)});
  REQUIRE(d1.free_rank == 0);

  // CRT oracle: Z/2 x Z/3 = Z/6
  AbelianDescription d2 = cokernel_presentation(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(3)}});
  REQUIRE(d2.torsion == std::vector<Int>{Int(6)});
  REQUIRE(d2.free_rank == 0);

  AbelianDescription d3 = cokernel_presentation(IntMatrix{{Int(0)}});
  REQUIRE(d3.torsion.empty());
  REQUIRE(d3.free_rank == 1);
}

TEST_CASE("present_quotient with coordinates") {
  // Z^2 / <(2,0),(0,3)> = Z/2 x Z/3 = Z/6 up to normal form
  IntMatrix K = IntMatrix::identity(2);
  IntMatrix I{{Int(2), Int(0)}, {Int(0), Int(3)}};
  QuotientPresentation q = present_quotient(K, I);
  REQUIRE(q.torsion() == std::vector<Int>{Int(6)});
  REQUIRE(q.free_rank() == 0);
  // the generator has order 6
  std::vector<Int> g = q.generators.column(0);
  auto c1 = q.coordinates(g);
  REQUIRE(c1.size() == 1);
  std::vector<Int> g6 = scaled(g, Int(6));
  REQUIRE(q.is_zero_class(g6));
  REQUIRE(!q.is_zero_class(g));
}

TEST_CASE("signature of symmetric forms") {
  RatMatrix d2{{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
  REQUIRE(signature_of_symmetric(d2) == Inertia{1, 1, 0});

  RatMatrix h{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  REQUIRE(signature_of_symmetric(h) == Inertia{1, 1, 0});

  RatMatrix z(3, 3);
  REQUIRE(signature_of_symmetric(z) == Inertia{0, 0, 3});

  REQUIRE_THROWS(signature_of_symmetric(RatMatrix{{Rat(0), Rat(1)}, {Rat(2), Rat(0)}}));
}

namespace {

// Descartes-bound sign count through the characteristic polynomial: for a
// symmetric matrix all eigenvalues are real, so the number of positive
// roots equals the sign changes of p(x) and negatives those of p(-x).
Inertia descartes_inertia(const RatMatrix& G) {
  const int n = G.rows();
  // Faddeev-LeVerrier for characteristic polynomial coefficients
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  RatMatrix M(n, n);
  RatMatrix I = RatMatrix::identity(n);
  RatMatrix Ak(n, n);
  for (int k = 1; k <= n; ++k) {
    if (k == 1) {
      Ak = G;
    } else {
      RatMatrix tmp = Ak;
      for (int i = 0; i < n; ++i) tmp(i, i) += c[n - k + 1];
      Ak = G * tmp;
    }
    Rat tr(0);
    for (int i = 0; i < n; ++i) tr += Ak(i, i);
    c[n - k] = -tr / Rat(k);
  }
  auto sign_changes = [&](bool flip) {
    int changes = 0;
    int last = 0;
    for (int k = n; k >= 0; --k) {
      Rat coef = c[k];
      if (flip && ((n - k) % 2 == 1)) coef = -coef;
      if (coef == Rat(0)) continue;
      int s = coef > 0 ? 1 : -1;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  Inertia r;
  r.positive = sign_changes(false);
  r.negative = sign_changes(true);
  r.zero = n - r.positive - r.negative;
  return r;
}

IntMatrix e8_gram() {
  IntMatrix g(8, 8);
  for (int i = 0; i < 8; ++i) g(i, i) = 2;
  auto link = [&](int a, int b) { g(a, b) = -1; g(b, a) = -1; };
  link(0, 2);
  link(1, 3);
  link(2, 3);
  link(3, 4);
  link(4, 5);
  link(5, 6);
  link(6, 7);
  return g;
}

}  // namespace

TEST_CASE("E8 is unimodular, even, positive definite") {
  IntMatrix g = e8_gram();
  REQUIRE(determinant(g) == 1);
  Inertia in = signature_of_symmetric(to_rat(g));
  REQUIRE(in == Inertia{8, 0, 0});
  REQUIRE(descartes_inertia(to_rat(g)) == Inertia{8, 0, 0});
}

TEST_CASE("signature is a congruence invariant") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    IntMatrix A = random_int_matrix(rng, n, n, -4, 4);
    IntMatrix G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G(i, j) = A(i, j) + A(j, i);
    IntMatrix P = random_unimodular(rng, n, 8);
    IntMatrix Gp = P * G * P.transposed();
    REQUIRE(signature_of_symmetric(to_rat(G)) == signature_of_symmetric(to_rat(Gp)));
    REQUIRE(signature_of_symmetric(to_rat(G)) == descartes_inertia(to_rat(G)));
  }
}

TEST_CASE("field linear algebra over F2 and Q") {
  Matrix<F2> A(2, 3);
  A(0, 0) = F2(1);
  A(0, 1) = F2(1);
  A(1, 2) = F2(1);
  Matrix<F2> K = kernel_field(A);
  REQUIRE(K.cols() == 1);
  REQUIRE((A * K).is_zero());

  auto x = solve_field(A, std::vector<F2>{F2(1), F2(1)});
  REQUIRE(x.has_value());
  REQUIRE(A.apply(*x) == std::vector<F2>({F2(1), F2(1)}));

  RatMatrix B{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
  auto y = solve_field(B, std::vector<Rat>{Rat(5), Rat(11)});
  REQUIRE(y.has_value());
  REQUIRE(B.apply(*y) == std::vector<Rat>({Rat(5), Rat(11)}));
  REQUIRE(rank_field(B) == 2);
}
