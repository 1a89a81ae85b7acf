#pragma once

#include <stdexcept>
#include <vector>

#include "quadform/matrix.hpp"

namespace quadform {

struct Inertia {
  int positive{0}, negative{0}, zero{0};
  int signature() const { return positive - negative; }
  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

// Sylvester inertia by exact symmetric (congruence) diagonalization.
// When no remaining diagonal entry is nonzero but some off-diagonal is,
// a row+column addition turns the hyperbolic block into a usable pivot.
inline Inertia signature_of_symmetric(RatMatrix G) {
  if (!G.is_symmetric()) throw std::invalid_argument("signature_of_symmetric: matrix not symmetric");
  const int n = G.rows();
  std::vector<bool> active(n, true);
  Inertia res;
  int remaining = n;
  while (remaining > 0) {
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (active[i] && !(G(i, i) == Rat(0))) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i) {
        if (!active[i]) continue;
        for (int j = i + 1; j < n; ++j)
          if (active[j] && !(G(i, j) == Rat(0))) {
            a = i;
            b = j;
            break;
          }
      }
      if (a < 0) {
        res.zero += remaining;
        break;
      }
      // congruence E G E^T with E = I + e_ab makes G(a,a) = 2 G(a,b) != 0
      G.add_row(a, b, Rat(1));
      G.add_col(a, b, Rat(1));
      continue;
    }
    if (G(piv, piv) > 0)
      ++res.positive;
    else
      ++res.negative;
    for (int j = 0; j < n; ++j) {
      if (!active[j] || j == piv || G(j, piv) == Rat(0)) continue;
      Rat f = -G(j, piv) / G(piv, piv);
      G.add_row(j, piv, f);
      G.add_col(j, piv, f);
    }
    active[piv] = false;
    --remaining;
  }
  return res;
}

}  // namespace quadform
