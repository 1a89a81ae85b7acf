#include <catch2/catch_amalgamated.hpp>

#include "quadform/builtin.hpp"
#include "quadform/cochain.hpp"
#include "quadform/cohomology.hpp"
#include "quadform/rng.hpp"

using namespace quadform;

namespace {

Cochain<Int> random_int_cochain(Rng& rng, const ComplexPtr& cx, int d, long bound = 4) {
  Cochain<Int> a(cx, d);
  for (auto& v : a.values) v = Int(rng.range(-bound, bound));
  return a;
}

Cochain<F2> random_f2_cochain(Rng& rng, const ComplexPtr& cx, int d) {
  Cochain<F2> a(cx, d);
  for (auto& v : a.values) v = F2(static_cast<int>(rng.below(2)));
  return a;
}

}  // namespace

TEST_CASE("delta squared is zero") {
  Rng rng(11);
  for (const auto& name : {std::string("s2"), std::string("rp2"), std::string("t2"), std::string("cp2")}) {
    ComplexPtr cx = builtin_complex(name);
    for (int d = 0; d < cx->dim(); ++d)
      for (int t = 0; t < 10; ++t) {
        Cochain<Int> a = random_int_cochain(rng, cx, d);
        REQUIRE(delta(delta(a)).is_zero());
      }
  }
}

TEST_CASE("cup product Leibniz rule") {
  Rng rng(22);
  for (const auto& name : {std::string("rp2"), std::string("t2"), std::string("cp2")}) {
    ComplexPtr cx = builtin_complex(name);
    for (int t = 0; t < 30; ++t) {
      int p = static_cast<int>(rng.below(cx->dim()));
      int q = static_cast<int>(rng.below(cx->dim() - p));
      Cochain<Int> a = random_int_cochain(rng, cx, p);
      Cochain<Int> b = random_int_cochain(rng, cx, q);
      Cochain<Int> lhs = delta(cup(a, b));
      Cochain<Int> rhs = cup(delta(a), b);
      Cochain<Int> second = cup(a, delta(b));
      if (p % 2 == 1)
        rhs = rhs - second;
      else
        rhs = rhs + second;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("unit cochain is a left unit for cup") {
  Rng rng(33);
  ComplexPtr cx = torus_complex();
  Cochain<Int> unit(cx, 0);
  for (auto& v : unit.values) v = 1;
  for (int q = 0; q <= 2; ++q) {
    Cochain<Int> b = random_int_cochain(rng, cx, q);
    REQUIRE(cup(unit, b) == b);
  }
}

TEST_CASE("cup_i coboundary identity over Z/2") {
  // mod 2: delta(a cup_i b) = da cup_i b + a cup_i db + a cup_{i-1} b + b cup_{i-1} a
  Rng rng(44);
  for (const auto& name : {std::string("rp2"), std::string("t2"), std::string("rp3")}) {
    ComplexPtr cx = builtin_complex(name);
    for (int t = 0; t < 60; ++t) {
      int p = static_cast<int>(rng.below(cx->dim() + 1));
      int q = static_cast<int>(rng.below(cx->dim() + 1));
      int i = static_cast<int>(rng.below(std::min(p, q) + 1));
      Cochain<F2> a = random_f2_cochain(rng, cx, p);
      Cochain<F2> b = random_f2_cochain(rng, cx, q);
      Cochain<F2> lhs = delta(cup_i(a, b, i));
      Cochain<F2> rhs = cup_i(delta(a), b, i) + cup_i(a, delta(b), i);
      Cochain<F2> extra(cx, p + q - i + 1);
      if (i > 0)
        extra = cup_i(a, b, i - 1) + cup_i(b, a, i - 1);
      if (extra.degree == lhs.degree) rhs = rhs + extra;
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("cup_0 equals the cup product mod 2") {
  Rng rng(55);
  ComplexPtr cx = rp2_complex();
  for (int t = 0; t < 20; ++t) {
    Cochain<F2> a = random_f2_cochain(rng, cx, 1);
    Cochain<F2> b = random_f2_cochain(rng, cx, 1);
    Cochain<F2> viaInt = cup_i(a, b, 0);
    Cochain<F2> direct = cup(a, b);
    REQUIRE(viaInt == direct);
  }
}

TEST_CASE("RP2 cup structure") {
  ComplexPtr rp2 = rp2_complex();
  CohomologyField<F2> h1 = cohomology_f2(rp2, 1);
  REQUIRE(h1.dimension() == 1);
  const Cochain<F2>& a = h1.basis[0];
  Chain<F2> mu = fundamental_cycle_f2(rp2);
  // <a cup a, [M]> = 1
  REQUIRE(evaluate(cup(a, a), mu) == F2(1));
}

TEST_CASE("torus cup structure") {
  ComplexPtr t2 = torus_complex();
  CohomologyField<Rat> h1 = cohomology_q(t2, 1);
  REQUIRE(h1.dimension() == 2);
  Chain<Int> muz = fundamental_cycle_z(t2);
  Chain<Rat> mu{t2, 2, {}};
  for (const Int& c : muz.coeffs) mu.coeffs.push_back(Rat(c));
  const Cochain<Rat>& alpha = h1.basis[0];
  const Cochain<Rat>& beta = h1.basis[1];
  Rat ab = evaluate(cup(alpha, beta), mu);
  Rat aa = evaluate(cup(alpha, alpha), mu);
  Rat bb = evaluate(cup(beta, beta), mu);
  REQUIRE((ab == Rat(1) || ab == Rat(-1)));
  REQUIRE(aa == Rat(0));
  REQUIRE(bb == Rat(0));
}

TEST_CASE("steenrod squares on RP2") {
  ComplexPtr rp2 = rp2_complex();
  CohomologyField<F2> h1 = cohomology_f2(rp2, 1);
  CohomologyField<F2> h2 = cohomology_f2(rp2, 2);
  const Cochain<F2>& a = h1.basis[0];

  // Sq^1 a = a cup a, nonzero in H^2
  Cochain<F2> sq1 = steenrod_square_rep(1, a);
  REQUIRE(is_cocycle(sq1));
  REQUIRE(!h2.is_trivial_class(sq1));
  REQUIRE(h2.class_coordinates(sq1) == h2.class_coordinates(cup(a, a)));

  // Sq^0 = identity on classes
  Cochain<F2> sq0 = steenrod_square_rep(0, a);
  REQUIRE(is_cocycle(sq0));
  REQUIRE(h1.class_coordinates(sq0) == h1.class_coordinates(a));

  // Sq^2 on degree 1 vanishes
  Cochain<F2> sq2 = steenrod_square_rep(2, a);
  REQUIRE(sq2.is_zero());
}

TEST_CASE("steenrod Sq^0 is the identity on RP3 and T2 classes") {
  for (const auto& name : {std::string("rp3"), std::string("t2")}) {
    ComplexPtr cx = builtin_complex(name);
    for (int d = 1; d <= cx->dim(); ++d) {
      CohomologyField<F2> h = cohomology_f2(cx, d);
      for (const auto& x : h.basis) {
        Cochain<F2> s = steenrod_square_rep(0, x);
        REQUIRE(is_cocycle(s));
        REQUIRE(h.class_coordinates(s) == h.class_coordinates(x));
      }
    }
  }
}

TEST_CASE("bockstein on RP2") {
  ComplexPtr rp2 = rp2_complex();
  CohomologyField<F2> h1 = cohomology_f2(rp2, 1);
  const Cochain<F2>& a = h1.basis[0];
  Cochain<Int> beta = bockstein_rep(a);
  REQUIRE(is_cocycle(beta));
  CohomologyZ h2 = cohomology_z(rp2, 2);
  REQUIRE(!h2.is_trivial_class(beta));  // generator of H^2 = Z/2

  // beta of the zero cochain is zero
  Cochain<F2> z(rp2, 1);
  REQUIRE(bockstein_rep(z).is_zero());

  // independence of the lift: lift shifted by 2*(anything) has the same class
  Cochain<Int> lift = lift_to_int(a);
  Rng rng(9);
  Cochain<Int> shift = random_int_cochain(rng, rp2, 1);
  Cochain<Int> lift2 = lift + Int(2) * shift;
  Cochain<Int> beta2 = delta(lift2);
  for (auto& v : beta2.values) v /= 2;
  REQUIRE(h2.class_coordinates(beta) == h2.class_coordinates(beta2));
}

TEST_CASE("bockstein composed with itself vanishes") {
  Rng rng(66);
  for (const auto& name : {std::string("rp2"), std::string("rp3")}) {
    ComplexPtr cx = builtin_complex(name);
    for (int d = 1; d < cx->dim(); ++d) {
      CohomologyField<F2> h = cohomology_f2(cx, d);
      CohomologyZ htop = cohomology_z(cx, d + 2);
      for (const auto& x : h.basis) {
        Cochain<Int> b1 = bockstein_rep(x);
        Cochain<F2> b1m2 = to_f2(b1);
        REQUIRE(is_cocycle(b1m2));
        Cochain<Int> b2 = bockstein_rep(b1m2);
        if (d + 2 <= cx->dim()) REQUIRE(htop.is_trivial_class(b2));
      }
    }
  }
}

TEST_CASE("Sq^1 equals the mod-2 Bockstein on classes") {
  for (const auto& name : {std::string("rp2"), std::string("rp3")}) {
    ComplexPtr cx = builtin_complex(name);
    for (int d = 1; d < cx->dim(); ++d) {
      CohomologyField<F2> h = cohomology_f2(cx, d);
      CohomologyField<F2> ht = cohomology_f2(cx, d + 1);
      for (const auto& x : h.basis) {
        Cochain<F2> sq1 = steenrod_square_rep(1, x);
        Cochain<F2> bmod2 = to_f2(bockstein_rep(x));
        REQUIRE(ht.class_coordinates(sq1) == ht.class_coordinates(bmod2));
      }
    }
  }
}
