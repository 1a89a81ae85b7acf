#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadform/builtin_data.hpp"
#include "quadform/cohomology.hpp"
#include "quadform/product.hpp"
#include "quadform/simplicial.hpp"

namespace quadform {

namespace detail {

struct ExpectedHomology {
  int degree;
  int free_rank;
  std::vector<Int> torsion;
};

inline void validate_homology(const ComplexPtr& cx, const std::vector<ExpectedHomology>& table) {
  for (const auto& e : table) {
    AbelianDescription h = homology_z(cx, e.degree);
    if (h.free_rank != e.free_rank || h.torsion != e.torsion)
      throw std::logic_error("builtin complex '" + cx->name() + "' failed homology validation at H_" +
                             std::to_string(e.degree));
  }
}

}  // namespace detail

// Every builtin is validated by its integral homology when constructed.

inline ComplexPtr sphere_complex(int n) {
  ComplexPtr cx = make_complex(n + 2, builtin_data::sphere_facets(n), "s" + std::to_string(n));
  std::vector<detail::ExpectedHomology> table{{0, 1, {}}, {n, 1, {}}};
  for (int k = 1; k < n; ++k) table.push_back({k, 0, {}});
  detail::validate_homology(cx, table);
  return cx;
}

inline ComplexPtr rp2_complex() {
  ComplexPtr cx = make_complex(6, builtin_data::rp2_facets(), "rp2");
  detail::validate_homology(cx, {{0, 1, {}}, {1, 0, {Int(2)}}, {2, 0, {}}});
  return cx;
}

inline ComplexPtr torus_complex() {
  ComplexPtr cx = make_complex(7, builtin_data::torus_facets(), "t2");
  detail::validate_homology(cx, {{0, 1, {}}, {1, 2, {}}, {2, 1, {}}});
  return cx;
}

inline ComplexPtr rp3_complex() {
  ComplexPtr cx = make_complex(40, builtin_data::rp3_facets(), "rp3");
  detail::validate_homology(cx, {{0, 1, {}}, {1, 0, {Int(2)}}, {2, 0, {}}, {3, 1, {}}});
  return cx;
}

// Oriented so that the canonical fundamental cycle gives signature +1.
inline ComplexPtr cp2_complex() {
  ComplexPtr cx = make_complex(9, builtin_data::cp2_facets(), "cp2");
  detail::validate_homology(cx, {{0, 1, {}}, {1, 0, {}}, {2, 1, {}}, {3, 0, {}}, {4, 1, {}}});
  return cx;
}

inline ProductComplex s2xs2_product() {
  ProductComplex P = product_complex(sphere_complex(2), sphere_complex(2), "s2xs2");
  detail::validate_homology(P.complex, {{0, 1, {}}, {1, 0, {}}, {2, 2, {}}, {3, 0, {}}, {4, 1, {}}});
  return P;
}

inline ComplexPtr builtin_complex(const std::string& name) {
  if (name == "s1") return sphere_complex(1);
  if (name == "s2") return sphere_complex(2);
  if (name == "s3") return sphere_complex(3);
  if (name == "s4") return sphere_complex(4);
  if (name == "rp2") return rp2_complex();
  if (name == "rp3") return rp3_complex();
  if (name == "t2") return torus_complex();
  if (name == "cp2") return cp2_complex();
  if (name == "s2xs2") return s2xs2_product().complex;
  throw std::invalid_argument("unknown builtin complex: " + name);
}

inline std::vector<std::string> builtin_names() {
  return {"s1", "s2", "s3", "s4", "rp2", "rp3", "t2", "cp2", "s2xs2"};
}

// Fundamental cycle in the builtin's preferred orientation.  The cp2 facet
// table is reversed so that its signature comes out +1, matching the usual
// orientation of the complex projective plane.
inline Chain<Int> oriented_fundamental_cycle(const ComplexPtr& cx) {
  return fundamental_cycle_z(cx, cx->name() == "cp2");
}

}  // namespace quadform
