#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "quadform/cochain.hpp"
#include "quadform/cohomology.hpp"
#include "quadform/smith.hpp"

namespace quadform {

// Rational model of the filtered differential cochain complex: a degree-k
// element of the q-filtered complex is (c, h, omega) with c integral, h
// rational of degree k-1 and omega rational of degree k, where omega is
// required to vanish for k < q.  Forms are modeled by rational simplicial
// cochains throughout, so R and R/Z become Q and Q/Z; torsion phenomena
// are unchanged.
struct DifferentialCochain {
  int filtration{0};  // q
  int degree{0};      // k
  Cochain<Int> c;
  Cochain<Rat> h;
  Cochain<Rat> omega;

  DifferentialCochain(ComplexPtr cx, int q, int k)
      : filtration(q), degree(k), c(cx, k), h(cx, k - 1), omega(cx, k) {}
  DifferentialCochain(int q, Cochain<Int> c_, Cochain<Rat> h_, Cochain<Rat> omega_)
      : filtration(q), degree(c_.degree), c(std::move(c_)), h(std::move(h_)), omega(std::move(omega_)) {
    if (h.degree != degree - 1 || omega.degree != degree)
      throw std::invalid_argument("differential cochain degree mismatch");
    if (degree < filtration && !omega.is_zero())
      throw std::invalid_argument("filtration violated: omega must vanish below the filtration degree");
  }

  ComplexPtr complex() const { return c.cx; }

  friend DifferentialCochain operator+(const DifferentialCochain& a, const DifferentialCochain& b) {
    require_same(a, b);
    return DifferentialCochain(a.filtration, a.c + b.c, a.h + b.h, a.omega + b.omega);
  }
  friend DifferentialCochain operator-(const DifferentialCochain& a, const DifferentialCochain& b) {
    require_same(a, b);
    return DifferentialCochain(a.filtration, a.c - b.c, a.h - b.h, a.omega - b.omega);
  }
  friend bool operator==(const DifferentialCochain& a, const DifferentialCochain& b) {
    return a.filtration == b.filtration && a.c == b.c && a.h == b.h && a.omega == b.omega;
  }

  static void require_same(const DifferentialCochain& a, const DifferentialCochain& b) {
    if (a.filtration != b.filtration || a.degree != b.degree || a.c.cx != b.c.cx)
      throw std::invalid_argument("differential cochain mismatch");
  }
};

// d(c, h, omega) = (delta c, omega - c - delta h, delta omega); below the
// filtration the omega slot of the result is forced to zero.
inline DifferentialCochain differential_d(const DifferentialCochain& x) {
  Cochain<Int> dc = delta(x.c);
  Cochain<Rat> mid = x.omega - to_rat(x.c) - delta(x.h);
  Cochain<Rat> dom = x.degree + 1 < x.filtration ? Cochain<Rat>(x.c.cx, x.degree + 1)
                                                 : delta(x.omega);
  return DifferentialCochain(x.filtration, std::move(dc), std::move(mid), std::move(dom));
}

inline bool is_closed(const DifferentialCochain& x) {
  DifferentialCochain d = differential_d(x);
  return d.c.is_zero() && d.h.is_zero() && d.omega.is_zero();
}

inline const Cochain<Rat>& curvature(const DifferentialCochain& x) {
  if (!is_closed(x)) throw std::invalid_argument("curvature: cochain is not closed");
  return x.omega;
}

inline std::vector<Int> characteristic_class(const DifferentialCochain& x, const CohomologyZ& h) {
  if (!is_closed(x)) throw std::invalid_argument("characteristic_class: cochain is not closed");
  return h.class_coordinates(x.c);
}

// differential character: h(z) mod 1 on (k-1)-cycles z
inline Rat differential_character(const DifferentialCochain& x, const Chain<Int>& z) {
  if (!is_closed(x)) throw std::invalid_argument("differential_character: cochain is not closed");
  if (z.degree != x.degree - 1) throw std::invalid_argument("differential_character: cycle degree");
  if (x.degree - 1 >= 1) {
    std::vector<Int> bd = z.cx->boundary(z.degree).apply(z.coeffs);
    for (const Int& v : bd)
      if (v != 0) throw std::invalid_argument("differential_character: z is not a cycle");
  }
  Rat s(0);
  for (std::size_t i = 0; i < x.h.values.size(); ++i) s += x.h.values[i] * Rat(z.coeffs[i]);
  return mod1(s);
}

// Product from the filtered cup formula with wedge modeled by cup and the
// form/cochain homotopy B = 0:
//   (c1, h1, w1) * (c2, h2, w2) =
//   (c1 c2, (-1)^{|c1|} c1 h2 + h1 w2, w1 w2).
inline DifferentialCochain diff_product(const DifferentialCochain& x, const DifferentialCochain& y) {
  if (x.c.cx != y.c.cx) throw std::invalid_argument("diff_product: different complexes");
  Cochain<Int> c = cup(x.c, y.c);
  Cochain<Rat> h = cup(x.h, y.omega);
  Cochain<Rat> ch = cup(to_rat(x.c), y.h);
  if (x.degree % 2 == 1)
    h = h - ch;
  else
    h = h + ch;
  Cochain<Rat> w = cup(x.omega, y.omega);
  return DifferentialCochain(x.filtration + y.filtration, std::move(c), std::move(h), std::move(w));
}

// Structured description of the group of closed degree-k classes in the
// q-filtered model.
struct DiffGroupDescription {
  int filtration{0};
  int degree{0};
  // k > q: the group is H^k(M;Z)
  // k < q: the group is H^{k-1}(M;Q/Z), reported as a divisible rank plus
  //        the torsion of H^k(M;Z)
  // k = q: extension data of the three exact sequences
  std::string regime;
  AbelianDescription integral;        // H^k(M;Z)
  int divisible_rank{0};              // rank of H^{k-1}(M;Q) when relevant
  std::vector<Int> qz_torsion;        // torsion of H^k(M;Z) (= torsion of H^{k-1}(M;Q/Z))
  // k = q only: dims of the form-model slots
  int dim_forms{0};                   // dim C^q as Q-space
  int dim_closed_forms{0};            // dim of closed rational q-cochains
  int dim_exact_forms{0};             // dim of exact ones
  AbelianDescription a_group;         // A^q: pairs (integral class, representing form)
};

inline DiffGroupDescription diff_group_description(const ComplexPtr& cx, int q, int k) {
  DiffGroupDescription d;
  d.filtration = q;
  d.degree = k;
  CohomologyZ hk = cohomology_z(cx, k);
  d.integral = hk.description();
  if (k > q) {
    d.regime = "k>q";
    return d;
  }
  CohomologyField<Rat> hq1 = cohomology_q(cx, k - 1);
  d.divisible_rank = hq1.dimension();
  d.qz_torsion = hk.torsion();
  if (k < q) {
    d.regime = "k<q";
    return d;
  }
  d.regime = "k=q";
  d.dim_forms = cx->num_simplices(k);
  IntMatrix db = cx->coboundary_matrix(k);
  d.dim_closed_forms = d.dim_forms - rank_field(to_rat(db));
  d.dim_exact_forms = k >= 1 ? rank_field(to_rat(cx->coboundary_matrix(k - 1))) : 0;
  // A^q = {(class, closed form representing it)}: free part of H^k(Z) plus
  // all exact-form freedom; as a group description report H^k(Z) free part
  d.a_group = AbelianDescription{{}, d.integral.free_rank};
  return d;
}

// ---- membership and lifting witnesses for the three exact sequences ----

// Curvature surjectivity witness: a closed differential cocycle with a
// prescribed closed rational cochain of integral class as curvature.
inline std::optional<DifferentialCochain> curvature_preimage(const ComplexPtr& cx, int q,
                                                             const Cochain<Rat>& omega) {
  const int k = omega.degree;
  if (k < q) return std::nullopt;
  if (!delta(omega).is_zero()) return std::nullopt;
  // find an integer cocycle c with the same rational class: solve
  // omega - c = delta h over Q with c an integer cocycle
  CohomologyZ hz = cohomology_z(cx, k);
  // candidate: integer combination of basis cocycles matching rational coords
  CohomologyField<Rat> hq = cohomology_q(cx, k);
  std::vector<Rat> coords = hq.class_coordinates(omega);
  // express each integral basis class in rational coordinates
  Cochain<Int> c(cx, k);
  {
    const int nb = static_cast<int>(hz.basis.size());
    RatMatrix M(hq.dimension(), nb);
    for (int j = 0; j < nb; ++j) {
      std::vector<Rat> cc = hq.class_coordinates(to_rat(hz.basis[j]));
      for (int i = 0; i < hq.dimension(); ++i) M(i, j) = cc[i];
    }
    auto sol = solve_field(M, coords);
    if (!sol) return std::nullopt;
    for (int j = 0; j < nb; ++j) {
      if (!is_integer((*sol)[j])) return std::nullopt;  // non-integral periods
      c = c + Int((*sol)[j].get_num()) * hz.basis[j];
    }
  }
  // solve delta h = omega - c
  Cochain<Rat> rhs = omega - to_rat(c);
  RatMatrix D = to_rat(cx->coboundary_matrix(k - 1));
  auto h = k >= 1 ? solve_field(D, rhs.values) : std::nullopt;
  if (k >= 1 && !h) return std::nullopt;
  Cochain<Rat> hh = k >= 1 ? Cochain<Rat>(cx, k - 1, *h) : Cochain<Rat>(cx, k - 1);
  DifferentialCochain x(q, c, hh, omega);
  if (!is_closed(x)) return std::nullopt;
  return x;
}

// Kernel of curvature: a closed x with omega = 0 determines a class in
// H^{k-1}(M;Q/Z); its character values on a basis of integral homology
// cycles identify it.  Conversely a rational cocycle-mod-1 representative
// of such a class produces a flat differential cocycle.
inline DifferentialCochain flat_from_qz_cocycle(const ComplexPtr& cx, int q,
                                                const Cochain<Rat>& hbar) {
  const int k = hbar.degree + 1;
  Cochain<Rat> dh = delta(hbar);
  Cochain<Int> c(cx, k);
  for (std::size_t i = 0; i < dh.values.size(); ++i) {
    if (!is_integer(dh.values[i]))
      throw std::invalid_argument("flat_from_qz_cocycle: input is not a Q/Z cocycle");
    c.values[i] = -dh.values[i].get_num();
  }
  DifferentialCochain x(q, c, hbar, Cochain<Rat>(cx, k));
  if (!is_closed(x)) throw std::logic_error("flat_from_qz_cocycle: construction failed");
  return x;
}

// Characteristic-class surjectivity witness at k = q: (c, 0, c_Q).
inline DifferentialCochain from_integral_cocycle(const ComplexPtr& cx, int q,
                                                 const Cochain<Int>& c) {
  if (!is_cocycle(c)) throw std::invalid_argument("from_integral_cocycle: c is not a cocycle");
  if (c.degree < q) throw std::invalid_argument("from_integral_cocycle: degree below filtration");
  DifferentialCochain x(q, c, Cochain<Rat>(cx, c.degree - 1), to_rat(c));
  return x;
}

// Topological triviality witness: for closed x with trivial characteristic
// class, produce theta with x isomorphic to (0, theta, delta theta), the
// image of a "form"; returns theta and the integer cochain b realizing the
// isomorphism x + d(-b, 0) = (0, theta, delta theta).
struct FormTrivialization {
  Cochain<Rat> theta;
  Cochain<Int> b;
};
inline std::optional<FormTrivialization> trivialize_topologically(const DifferentialCochain& x) {
  if (!is_closed(x)) return std::nullopt;
  const ComplexPtr cx = x.complex();
  const int k = x.degree;
  IntMatrix D = cx->coboundary_matrix(k - 1);
  auto b = solve_integer(D, x.c.values);
  if (!b) return std::nullopt;
  Cochain<Int> bb(cx, k - 1, *b);
  FormTrivialization f{x.h + to_rat(bb), bb};
  return f;
}

// Isomorphism test for closed cochains of equal degree and filtration at
// k = q: true iff the curvatures agree and the characters agree, in which
// case an explicit morphism witness (c', h') with x - y = d(c', h', 0) is
// produced.
struct IsoWitness {
  bool isomorphic{false};
  Cochain<Int> c1;   // degree k-1 integer part of the witness
  Cochain<Rat> h1;   // degree k-2 rational part
};

inline IsoWitness iso_test(const DifferentialCochain& x, const DifferentialCochain& y) {
  DifferentialCochain::require_same(x, y);
  const ComplexPtr cx = x.complex();
  const int k = x.degree;
  IsoWitness w;
  w.c1 = Cochain<Int>(cx, k - 1);
  w.h1 = Cochain<Rat>(cx, k - 2);
  if (!is_closed(x) || !is_closed(y)) throw std::invalid_argument("iso_test: inputs must be closed");
  if (!(x.omega == y.omega)) return w;
  // difference of h parts must be an integral cochain plus a rational
  // coboundary: solve c' + delta h' = -(h_x - h_y) with c' integral
  Cochain<Rat> dh = x.h - y.h;
  Int den(1);
  for (const Rat& v : dh.values) den = lcm(den, v.get_den());
  const int rows = cx->num_simplices(k - 1);
  const int hcols = cx->num_simplices(k - 2);
  IntMatrix A(rows, hcols + rows);
  if (k - 2 >= 0) {
    IntMatrix D = cx->coboundary_matrix(k - 2);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < hcols; ++j) A(i, j) = D(i, j);
  }
  for (int i = 0; i < rows; ++i) A(i, hcols + i) = den;
  std::vector<Int> rhs(rows);
  for (int i = 0; i < rows; ++i) {
    Rat r = -dh.values[i] * Rat(den);
    rhs[i] = r.get_num();
  }
  auto sol = solve_integer(A, rhs);
  if (!sol) return w;
  // h' = u/den, c' = m
  for (int j = 0; j < hcols; ++j) w.h1.values[j] = make_rat((*sol)[j], den);
  for (int i = 0; i < rows; ++i) w.c1.values[i] = (*sol)[hcols + i];
  // verify x - y = d(c', h', 0)
  DifferentialCochain morphism(x.filtration, w.c1, w.h1, Cochain<Rat>(cx, k - 1));
  DifferentialCochain d = differential_d(morphism);
  if (!(x - y == d)) return w;  // characters differ (class-level obstruction)
  w.isomorphic = true;
  return w;
}

}  // namespace quadform
