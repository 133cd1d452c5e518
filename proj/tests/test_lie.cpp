#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carnot/lie.hpp"

using namespace carnot;

namespace {

LieAlgebra heisenberg3() {
  LieAlgebra l(3, make_table({}));
  l.add_bracket(1, 2, 3, Rat(1));
  return l;
}

LieAlgebra n521() { // filiform of dimension 5
  LieAlgebra l(5, make_table({}));
  l.add_bracket(1, 2, 3, Rat(1));
  l.add_bracket(1, 3, 4, Rat(1));
  l.add_bracket(1, 4, 5, Rat(1));
  return l;
}

} // namespace

TEST_CASE("bracket expansion") {
  LieAlgebra l = heisenberg3();
  BoundAlgebra bound(l, l.params());
  auto basis = [&](int i) {
    Element e = Element::zero(l.params(), 3);
    e.coords[i - 1] = Polynomial::constant(l.params(), 1);
    return e;
  };
  Element b = bound.bracket(basis(1), basis(2));
  CHECK(b.coords[2] == Polynomial::constant(l.params(), 1));
  CHECK(b.coords[0].is_zero());
  // antisymmetry on a random-ish element
  Element u = basis(1) + basis(2) * Rat(3, 2) + basis(3) * Rat(-2);
  CHECK(bound.bracket(u, u).is_zero());
}

TEST_CASE("jacobi residual") {
  CHECK(jacobi_residual(heisenberg3()).empty());
  CHECK(jacobi_residual(n521()).empty());
  LieAlgebra abelian(5, make_table({}));
  CHECK(jacobi_residual(abelian).empty());
  // a spurious extra bracket [X2,X3]=X2 breaks Jacobi
  // (note [X1,X3]=X2 would not: that mutation is the Poincare algebra)
  LieAlgebra bad = heisenberg3();
  bad.add_bracket(2, 3, 2, Rat(1));
  CHECK(!jacobi_residual(bad).empty());
  LieAlgebra poincare = heisenberg3();
  poincare.add_bracket(1, 3, 2, Rat(1));
  CHECK(jacobi_residual(poincare).empty());
  CHECK_THROWS_AS(series(poincare, SeriesKind::LowerCentral),
                  std::domain_error); // but it is not nilpotent
}

TEST_CASE("series dimensions") {
  auto dims = [](const std::vector<QMat> &s) {
    std::vector<int> d;
    for (const auto &m : s) d.push_back(static_cast<int>(m.size()));
    return d;
  };
  SUBCASE("N_5_2_1 lower central series") {
    auto s = series(n521(), SeriesKind::LowerCentral);
    CHECK(dims(s) == std::vector<int>{5, 3, 2, 1, 0});
  }
  SUBCASE("abelian") {
    LieAlgebra abelian(4, make_table({}));
    auto s = series(abelian, SeriesKind::LowerCentral);
    CHECK(dims(s) == std::vector<int>{4, 0});
  }
  SUBCASE("derived series of the Heisenberg algebra") {
    auto s = series(heisenberg3(), SeriesKind::Derived);
    CHECK(dims(s) == std::vector<int>{3, 1, 0});
  }
}

TEST_CASE("rank and step") {
  auto [r1, s1] = rank_step(heisenberg3());
  CHECK(r1 == 2);
  CHECK(s1 == 2);
  LieAlgebra line(1, make_table({}));
  auto [r2, s2] = rank_step(line);
  CHECK(r2 == 1);
  CHECK(s2 == 1);
  auto [r3, s3] = rank_step(n521());
  CHECK(r3 == 2);
  CHECK(s3 == 4);
}

TEST_CASE("depths and generators") {
  auto d = depths(n521());
  CHECK(d == std::vector<int>{1, 1, 1, 2, 3, 4});
  CHECK(generator_indices(n521()) == std::vector<int>{1, 2});
}

TEST_CASE("triangular basis validation") {
  CHECK(is_triangular_basis(n521()));
  LieAlgebra bad(3, make_table({}));
  bad.add_bracket(1, 3, 2, Rat(1));
  CHECK(!is_triangular_basis(bad));
}

TEST_CASE("direct products") {
  LieAlgebra p = direct_product(heisenberg3(), heisenberg3());
  CHECK(p.dim() == 6);
  CHECK(jacobi_residual(p).empty());
  auto [r, s] = rank_step(p);
  CHECK(r == 4);
  CHECK(s == 2);
}

TEST_CASE("parametric specialization") {
  auto params = make_table({}, {"lam"});
  LieAlgebra l(3, params);
  l.add_bracket(1, 2, 3, Polynomial::variable(params, 0));
  CHECK(l.is_parametric());
  LieAlgebra at2 = l.specialize({Rat(2)});
  CHECK(!at2.is_parametric());
  CHECK(at2.pair_coeffs(1, 2).at(0).second.constant_value() == Rat(2));
  // specializing the coefficient to zero drops the bracket entirely
  LieAlgebra at0 = l.specialize({Rat(0)});
  CHECK(at0.pair_coeffs(1, 2).empty());
}
