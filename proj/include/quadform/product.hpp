#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadform/cochain.hpp"
#include "quadform/simplicial.hpp"

namespace quadform {

// Ordered staircase triangulation of M x N.  Product vertices are the pairs
// (v, w) in lexicographic order, so every monotone grid path through a
// facet pair is a sorted vertex tuple of the product.
struct ProductComplex {
  ComplexPtr complex;
  ComplexPtr left, right;
  std::vector<std::pair<int, int>> vertex_pairs;         // product vertex -> (v, w)
  std::map<std::pair<int, int>, int> vertex_index;       // (v, w) -> product vertex

  int pair_index(int v, int w) const {
    auto it = vertex_index.find({v, w});
    if (it == vertex_index.end()) throw std::logic_error("product vertex lookup failed");
    return it->second;
  }
};

inline ProductComplex product_complex(const ComplexPtr& M, const ComplexPtr& N,
                                      std::string name = "") {
  ProductComplex P;
  P.left = M;
  P.right = N;
  for (int v = 0; v < M->num_vertices(); ++v)
    for (int w = 0; w < N->num_vertices(); ++w) {
      P.vertex_index[{v, w}] = static_cast<int>(P.vertex_pairs.size());
      P.vertex_pairs.push_back({v, w});
    }
  std::vector<std::vector<int>> facets;
  for (const auto& s : M->facets())
    for (const auto& t : N->facets()) {
      const int p = static_cast<int>(s.size()) - 1;
      const int q = static_cast<int>(t.size()) - 1;
      // monotone paths from (0,0) to (p,q)
      std::vector<std::pair<int, int>> path{{0, 0}};
      auto rec = [&](auto&& self) -> void {
        auto [a, b] = path.back();
        if (a == p && b == q) {
          std::vector<int> f;
          for (auto [x, y] : path) f.push_back(P.vertex_index[{s[x], t[y]}]);
          facets.push_back(f);
          return;
        }
        if (a < p) {
          path.push_back({a + 1, b});
          self(self);
          path.pop_back();
        }
        if (b < q) {
          path.push_back({a, b + 1});
          self(self);
          path.pop_back();
        }
      };
      rec(rec);
    }
  P.complex = make_complex(static_cast<int>(P.vertex_pairs.size()), std::move(facets),
                           name.empty() ? M->name() + "x" + N->name() : std::move(name));
  return P;
}

inline ComplexPtr interval_complex() { return make_complex(2, {{0, 1}}, "interval"); }

inline ProductComplex prism(const ComplexPtr& M) {
  return product_complex(M, interval_complex(), M->name() + "xI");
}

namespace detail {

// Eilenberg-Zilber shuffle sum: visit(product simplex vertices, sign) for
// each (p,q)-shuffle of sigma x tau.
template <typename Visit>
void ez_shuffles(const ProductComplex& P, const std::vector<int>& sigma,
                 const std::vector<int>& tau, Visit visit) {
  const int p = static_cast<int>(sigma.size()) - 1;
  const int q = static_cast<int>(tau.size()) - 1;
  std::vector<int> moves;  // 0 = advance sigma, 1 = advance tau
  auto rec = [&](auto&& self, int a, int b, int inversions) -> void {
    if (a == p && b == q) {
      std::vector<int> verts;
      int x = 0, y = 0;
      verts.push_back(P.pair_index(sigma[0], tau[0]));
      for (int m : moves) {
        if (m == 0)
          ++x;
        else
          ++y;
        verts.push_back(P.pair_index(sigma[x], tau[y]));
      }
      visit(verts, inversions % 2 == 0 ? 1 : -1);
      return;
    }
    if (a < p) {
      // count preceding tau-moves as inversions
      int inv = 0;
      for (int m : moves)
        if (m == 1) ++inv;
      moves.push_back(0);
      self(self, a + 1, b, inversions + inv);
      moves.pop_back();
    }
    if (b < q) {
      moves.push_back(1);
      self(self, a, b + 1, inversions);
      moves.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace detail

// Slant product a/z for a cochain a on M x N and a chain z on N:
// (a/z)(c) = a(EZ(c (x) z)).  Together with the standard shuffle signs this
// satisfies delta(a/z) = (delta a)/z + (-1)^{|a|+|z|} a/(boundary z).
template <typename T>
Cochain<T> slant(const ProductComplex& P, const Cochain<T>& a, const Chain<T>& z) {
  if (a.cx != P.complex) throw std::invalid_argument("slant: cochain not on the product");
  if (z.cx != P.right) throw std::invalid_argument("slant: chain not on the right factor");
  const int p = a.degree - z.degree;
  Cochain<T> r(P.left, p);
  if (p < 0 || p > P.left->dim()) return r;
  const auto& sigmas = P.left->simplices(p);
  for (int si = 0; si < static_cast<int>(sigmas.size()); ++si) {
    T acc(0);
    for (int ti = 0; ti < P.right->num_simplices(z.degree); ++ti) {
      if (z.coeffs[ti] == T(0)) continue;
      const auto& tau = P.right->simplices(z.degree)[ti];
      T inner(0);
      detail::ez_shuffles(P, sigmas[si], tau, [&](const std::vector<int>& verts, int sign) {
        int idx = P.complex->index_of(a.degree, verts);
        if (idx < 0) throw std::logic_error("slant: staircase simplex missing from product");
        if (sign > 0)
          inner += a.values[idx];
        else
          inner -= a.values[idx];
      });
      acc += z.coeffs[ti] * inner;
    }
    r.values[si] = acc;
  }
  return r;
}

// restriction of a product cochain to the slice M x {w}
template <typename T>
Cochain<T> restrict_to_slice(const ProductComplex& P, const Cochain<T>& a, int w) {
  if (a.cx != P.complex) throw std::invalid_argument("restrict_to_slice: cochain not on the product");
  Cochain<T> r(P.left, a.degree);
  const auto& sims = P.left->simplices(a.degree);
  for (int i = 0; i < static_cast<int>(sims.size()); ++i) {
    std::vector<int> image;
    for (int v : sims[i]) image.push_back(P.pair_index(v, w));
    int idx = P.complex->index_of(a.degree, image);
    if (idx < 0) throw std::logic_error("restrict_to_slice: image simplex missing");
    r.values[i] = a.values[idx];
  }
  return r;
}

// fundamental chain of the interval factor (the single edge)
template <typename T>
Chain<T> interval_fundamental_chain(const ProductComplex& P) {
  Chain<T> z{P.right, 1, std::vector<T>(P.right->num_simplices(1), T(0))};
  z.coeffs[0] = T(1);
  return z;
}

// interval integral of a cochain on M x I
template <typename T>
Cochain<T> interval_integral(const ProductComplex& P, const Cochain<T>& s) {
  return slant(P, s, interval_fundamental_chain<T>(P));
}

}  // namespace quadform
