#pragma once

#include <stdexcept>
#include <string>

#include "quadform/cohomology.hpp"
#include "quadform/simplicial.hpp"

namespace quadform {
namespace builtin_data {

// boundary of the (n+1)-simplex
inline std::vector<std::vector<int>> sphere_facets(int n) {
  std::vector<std::vector<int>> facets;
  const int v = n + 2;
  for (int omit = 0; omit < v; ++omit) {
    std::vector<int> f;
    for (int i = 0; i < v; ++i)
      if (i != omit) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return facets;
}

// minimal 6-vertex projective plane (antipodal quotient of the icosahedron)
inline std::vector<std::vector<int>> rp2_facets() {
  return {{0, 1, 3}, {0, 1, 5}, {0, 2, 3}, {0, 2, 4}, {0, 4, 5},
          {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}};
}

// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7
inline std::vector<std::vector<int>> torus_facets() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return facets;
}

// 9-vertex complex projective plane (36 facets, f-vector 9/36/84/90/36)
inline std::vector<std::vector<int>> cp2_facets() {
  return {
      {0, 1, 2, 3, 4}, {0, 1, 2, 3, 5}, {0, 1, 2, 4, 5}, {0, 1, 3, 4, 6}, {0, 1, 3, 5, 7},
      {0, 1, 3, 6, 7}, {0, 1, 4, 5, 6}, {0, 1, 5, 6, 8}, {0, 1, 5, 7, 8}, {0, 1, 6, 7, 8},
      {0, 2, 3, 4, 8}, {0, 2, 3, 5, 8}, {0, 2, 4, 5, 6}, {0, 2, 4, 6, 7}, {0, 2, 4, 7, 8},
      {0, 2, 5, 6, 8}, {0, 2, 6, 7, 8}, {0, 3, 4, 6, 7}, {0, 3, 4, 7, 8}, {0, 3, 5, 7, 8},
      {1, 2, 3, 4, 8}, {1, 2, 3, 5, 7}, {1, 2, 3, 6, 7}, {1, 2, 3, 6, 8}, {1, 2, 4, 5, 7},
      {1, 2, 4, 7, 8}, {1, 2, 6, 7, 8}, {1, 3, 4, 6, 8}, {1, 4, 5, 6, 8}, {1, 4, 5, 7, 8},
      {2, 3, 5, 6, 7}, {2, 3, 5, 6, 8}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}, {3, 4, 5, 6, 8},
      {3, 4, 5, 7, 8}};
}

// real projective 3-space: antipodal quotient of the barycentrically
// subdivided boundary of the 4-dimensional cross-polytope (40 vertices,
// 192 tetrahedra)
inline std::vector<std::vector<int>> rp3_facets() {
  return {
      {0,4,16,32}, {0,4,16,33}, {0,4,17,32}, {0,4,17,34}, {0,4,18,33}, {0,4,18,35},
      {0,4,19,34}, {0,4,19,35}, {0,5,16,32}, {0,5,16,33}, {0,5,20,32}, {0,5,20,36},
      {0,5,21,33}, {0,5,21,37}, {0,5,22,36}, {0,5,22,37}, {0,6,17,32}, {0,6,17,34},
      {0,6,20,32}, {0,6,20,36}, {0,6,23,34}, {0,6,23,38}, {0,6,24,36}, {0,6,24,38},
      {0,7,18,33}, {0,7,18,35}, {0,7,21,33}, {0,7,21,37}, {0,7,25,35}, {0,7,25,39},
      {0,7,26,37}, {0,7,26,39}, {0,8,19,34}, {0,8,19,35}, {0,8,23,34}, {0,8,23,38},
      {0,8,25,35}, {0,8,25,39}, {0,8,27,38}, {0,8,27,39}, {0,9,22,36}, {0,9,22,37},
      {0,9,24,36}, {0,9,24,38}, {0,9,26,37}, {0,9,26,39}, {0,9,27,38}, {0,9,27,39},
      {1,4,16,32}, {1,4,16,33}, {1,4,17,32}, {1,4,17,34}, {1,4,18,33}, {1,4,18,35},
      {1,4,19,34}, {1,4,19,35}, {1,9,22,36}, {1,9,22,37}, {1,9,24,36}, {1,9,24,38},
      {1,9,26,37}, {1,9,26,39}, {1,9,27,38}, {1,9,27,39}, {1,10,16,32}, {1,10,16,33},
      {1,10,27,38}, {1,10,27,39}, {1,10,28,32}, {1,10,28,39}, {1,10,29,33}, {1,10,29,38},
      {1,11,17,32}, {1,11,17,34}, {1,11,26,37}, {1,11,26,39}, {1,11,28,32}, {1,11,28,39},
      {1,11,30,34}, {1,11,30,37}, {1,12,18,33}, {1,12,18,35}, {1,12,24,36}, {1,12,24,38},
      {1,12,29,33}, {1,12,29,38}, {1,12,31,35}, {1,12,31,36}, {1,13,19,34}, {1,13,19,35},
      {1,13,22,36}, {1,13,22,37}, {1,13,30,34}, {1,13,30,37}, {1,13,31,35}, {1,13,31,36},
      {2,5,16,32}, {2,5,16,33}, {2,5,20,32}, {2,5,20,36}, {2,5,21,33}, {2,5,21,37},
      {2,5,22,36}, {2,5,22,37}, {2,8,19,34}, {2,8,19,35}, {2,8,23,34}, {2,8,23,38},
      {2,8,25,35}, {2,8,25,39}, {2,8,27,38}, {2,8,27,39}, {2,10,16,32}, {2,10,16,33},
      {2,10,27,38}, {2,10,27,39}, {2,10,28,32}, {2,10,28,39}, {2,10,29,33}, {2,10,29,38},
      {2,13,19,34}, {2,13,19,35}, {2,13,22,36}, {2,13,22,37}, {2,13,30,34}, {2,13,30,37},
      {2,13,31,35}, {2,13,31,36}, {2,14,20,32}, {2,14,20,36}, {2,14,25,35}, {2,14,25,39},
      {2,14,28,32}, {2,14,28,39}, {2,14,31,35}, {2,14,31,36}, {2,15,21,33}, {2,15,21,37},
      {2,15,23,34}, {2,15,23,38}, {2,15,29,33}, {2,15,29,38}, {2,15,30,34}, {2,15,30,37},
      {3,6,17,32}, {3,6,17,34}, {3,6,20,32}, {3,6,20,36}, {3,6,23,34}, {3,6,23,38},
      {3,6,24,36}, {3,6,24,38}, {3,7,18,33}, {3,7,18,35}, {3,7,21,33}, {3,7,21,37},
      {3,7,25,35}, {3,7,25,39}, {3,7,26,37}, {3,7,26,39}, {3,11,17,32}, {3,11,17,34},
      {3,11,26,37}, {3,11,26,39}, {3,11,28,32}, {3,11,28,39}, {3,11,30,34}, {3,11,30,37},
      {3,12,18,33}, {3,12,18,35}, {3,12,24,36}, {3,12,24,38}, {3,12,29,33}, {3,12,29,38},
      {3,12,31,35}, {3,12,31,36}, {3,14,20,32}, {3,14,20,36}, {3,14,25,35}, {3,14,25,39},
      {3,14,28,32}, {3,14,28,39}, {3,14,31,35}, {3,14,31,36}, {3,15,21,33}, {3,15,21,37},
      {3,15,23,34}, {3,15,23,38}, {3,15,29,33}, {3,15,29,38}, {3,15,30,34}, {3,15,30,37}
  };
}

}  // namespace builtin_data
}  // namespace quadform
