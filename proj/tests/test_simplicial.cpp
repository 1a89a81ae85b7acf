#include <catch2/catch_amalgamated.hpp>

#include "quadform/builtin.hpp"
#include "quadform/cohomology.hpp"
#include "quadform/simplicial.hpp"

using namespace quadform;

TEST_CASE("closure and boundary squared zero") {
  ComplexPtr cx = make_complex(4, {{0, 1, 2}, {1, 2, 3}});
  REQUIRE(cx->dim() == 2);
  REQUIRE(cx->num_simplices(0) == 4);
  REQUIRE(cx->num_simplices(1) == 5);
  REQUIRE(cx->num_simplices(2) == 2);
  IntMatrix b1 = cx->boundary(1), b2 = cx->boundary(2);
  REQUIRE((b1 * b2).is_zero());
}

TEST_CASE("cohomology of the 2-sphere") {
  ComplexPtr s2 = sphere_complex(2);
  CohomologyZ h2 = cohomology_z(s2, 2);
  REQUIRE(h2.free_rank() == 1);
  REQUIRE(h2.torsion().empty());
  CohomologyZ h1 = cohomology_z(s2, 1);
  REQUIRE(h1.free_rank() == 0);
  REQUIRE(h1.torsion().empty());
  CohomologyZ h0 = cohomology_z(s2, 0);
  REQUIRE(h0.free_rank() == 1);
}

TEST_CASE("cohomology of RP2") {
  ComplexPtr rp2 = rp2_complex();
  // H^1(RP2; Z/2) = Z/2
  CohomologyField<F2> h1 = cohomology_f2(rp2, 1);
  REQUIRE(h1.dimension() == 1);
  // H^2(RP2; Z) = Z/2
  CohomologyZ h2 = cohomology_z(rp2, 2);
  REQUIRE(h2.free_rank() == 0);
  REQUIRE(h2.torsion() == std::vector<Int>{Int(2)});
  // H^1(RP2; Z) = 0
  CohomologyZ h1z = cohomology_z(rp2, 1);
  REQUIRE(h1z.free_rank() == 0);
  REQUIRE(h1z.torsion().empty());
}

TEST_CASE("cohomology of the torus") {
  ComplexPtr t2 = torus_complex();
  REQUIRE(cohomology_q(t2, 1).dimension() == 2);
  REQUIRE(cohomology_z(t2, 2).free_rank() == 1);
  REQUIRE(cohomology_f2(t2, 1).dimension() == 2);
}

TEST_CASE("builtin validation catches wrong complexes") {
  // RP3 and CP2 load-time checks pass
  REQUIRE_NOTHROW(rp3_complex());
  REQUIRE_NOTHROW(cp2_complex());
  ComplexPtr cp2 = cp2_complex();
  REQUIRE(cohomology_z(cp2, 2).free_rank() == 1);
  REQUIRE(cohomology_z(cp2, 3).free_rank() == 0);
  REQUIRE(cohomology_z(cp2, 4).free_rank() == 1);
}

TEST_CASE("fundamental cycles") {
  ComplexPtr s2 = sphere_complex(2);
  Chain<Int> mu = fundamental_cycle_z(s2);
  // boundary zero
  IntMatrix b = s2->boundary(2);
  REQUIRE(std::all_of(mu.coeffs.begin(), mu.coeffs.end(), [](const Int& c) { return abs(c) == 1; }));
  std::vector<Int> bd = b.apply(mu.coeffs);
  for (const Int& v : bd) REQUIRE(v == 0);

  ComplexPtr rp2 = rp2_complex();
  REQUIRE_THROWS(fundamental_cycle_z(rp2));  // non-orientable
  Chain<F2> mu2 = fundamental_cycle_f2(rp2);
  Matrix<F2> b2 = to_f2(rp2->boundary(2));
  std::vector<F2> bd2 = b2.apply(mu2.coeffs);
  for (F2 v : bd2) REQUIRE(v == F2(0));

  ComplexPtr rp3 = rp3_complex();
  REQUIRE_NOTHROW(fundamental_cycle_z(rp3));  // orientable

  // reversed orientation negates
  Chain<Int> mur = fundamental_cycle_z(s2, true);
  for (std::size_t i = 0; i < mu.coeffs.size(); ++i) REQUIRE(mur.coeffs[i] == -mu.coeffs[i]);
}

TEST_CASE("pseudomanifold checks") {
  ComplexPtr disk = make_complex(3, {{0, 1, 2}});
  REQUIRE(!disk->is_closed_pseudomanifold());
  REQUIRE(sphere_complex(3)->is_closed_pseudomanifold());
  REQUIRE(s2xs2_product().complex->is_closed_pseudomanifold());
}

TEST_CASE("class coordinates over Z") {
  ComplexPtr rp2 = rp2_complex();
  CohomologyZ h2 = cohomology_z(rp2, 2);
  const Cochain<Int>& g = h2.basis[0];
  // 2g is a coboundary
  Cochain<Int> twice = Int(2) * g;
  REQUIRE(h2.is_trivial_class(twice));
  REQUIRE(!h2.is_trivial_class(g));
  auto coords = h2.class_coordinates(g);
  REQUIRE(coords == std::vector<Int>{Int(1)});
}
