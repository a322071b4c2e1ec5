#include <doctest.h>

#include <random>

#include "gfk/errors.hpp"
#include "gfk/fan_engine.hpp"
#include "gfk/ring.hpp"

using namespace gfk;

namespace {

Ideal example1() {
  Ring r = Ring::standard(3);
  return Ideal(3, {r.parse("x^3 - y*z^2"), r.parse("x^2*y - z^3")});
}

Ideal example2() {
  Ring r = Ring::standard(4);
  return Ideal(4, {r.parse("x^5 - w^5"), r.parse("x^2 - y*w"), r.parse("x^3 - z*w^2")});
}

Ideal parse_ideal(std::size_t arity, std::initializer_list<const char*> gens) {
  Ring r = Ring::standard(arity);
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(r.parse(g));
  return Ideal(arity, std::move(ps));
}

RationalCone cone_from(std::size_t dim, IntMatrix ge) { return RationalCone::from_inequalities(dim, ge); }

}  // namespace

TEST_CASE("example 1 has the eleven listed cones") {
  // Each row is >= 0; rows written "<= 0" in the listing are negated here.
  // c[w8] reads 3x - y - 2y in the listing; the neighbouring cones force 3x - y - 2z.
  const std::vector<IntMatrix> listed = {
      {{0, 1, -1}, {1, -2, 1}},   {{-1, 2, -1}, {3, -1, -2}}, {{-3, 1, 2}, {1, 0, -1}},
      {{-1, 0, 1}, {2, 1, -3}},   {{-2, -1, 3}, {-1, 2, -1}}, {{1, -2, 1}, {-1, 1, 0}},
      {{1, -1, 0}, {-4, 3, 1}},   {{4, -3, -1}, {-3, 1, 2}},  {{3, -1, -2}, {-2, -1, 3}},
      {{2, 1, -3}, {-1, -3, 4}},  {{1, 3, -4}, {0, -1, 1}},
  };
  GroebnerFan gf = groebner_fan(example1());
  REQUIRE(gf.cones.size() == 11);
  for (const auto& ineqs : listed) {
    RationalCone expected = cone_from(3, ineqs);
    bool found = false;
    for (const auto& c : gf.cones) found = found || c.cone == expected;
    CHECK(found);
  }
  CHECK(gf.fan.is_complete());
  CHECK(gf.fan.satisfies_fan_condition());
}

TEST_CASE("small homogeneous fans") {
  GroebnerFan line = groebner_fan(parse_ideal(2, {"x - y"}));
  CHECK(line.cones.size() == 2);
  CHECK(line.fan.is_complete());

  GroebnerFan monomial = groebner_fan(parse_ideal(3, {"x"}));
  REQUIRE(monomial.cones.size() == 1);
  CHECK(monomial.cones[0].cone == RationalCone::full_space(3));
}

TEST_CASE("random generic weights land in the cone of their reduced basis") {
  Ideal I = example1();
  GroebnerFan gf = groebner_fan(I);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  int generic = 0;
  for (int trial = 0; trial < 200; ++trial) {
    WeightVector w = {Rational(d(rng)), Rational(d(rng)), Rational(d(rng))};
    auto idx = gf.find_cone(w);
    REQUIRE(idx >= 0);
    Ideal in = initial_ideal(I, w, MatrixTermOrder(3, {}, Fallback::Lex));
    if (!in.is_monomial()) continue;
    ++generic;
    // Independent oracle: the reduced basis for <_w from scratch.
    GroebnerBasis gb = reduced_basis(I, weight_order(I, w, MatrixTermOrder(3, {}, Fallback::Lex)));
    CHECK(gb.same_elements(gf.cones[static_cast<std::size_t>(idx)].basis));
  }
  CHECK(generic > 150);
}

TEST_CASE("every wall is shared by exactly two cones") {
  GroebnerFan gf = groebner_fan(example1());
  for (const auto& c : gf.cones)
    for (const auto& normal : c.cone.facets()) {
      RationalCone wall = c.cone.face(normal);
      int owners = 0;
      for (const auto& other : gf.cones) owners += other.cone.contains(wall) ? 1 : 0;
      CHECK(owners == 2);
    }
}

TEST_CASE("traversal does not depend on thread count") {
  TraversalOptions one{Fallback::Lex, 1}, many{Fallback::Lex, 4};
  GroebnerFan a = groebner_fan(example2(), one), b = groebner_fan(example2(), many);
  REQUIRE(a.cones.size() == b.cones.size());
  for (std::size_t i = 0; i < a.cones.size(); ++i) {
    CHECK(a.cones[i].cone == b.cones[i].cone);
    CHECK(a.cones[i].basis.same_elements(b.cones[i].basis));
  }
  CHECK(a.fan == b.fan);
}

TEST_CASE("fallback order changes the start cone, not the fan") {
  GroebnerFan lex = groebner_fan(example1(), {Fallback::Lex, 0});
  GroebnerFan grevlex = groebner_fan(example1(), {Fallback::GrevLex, 0});
  CHECK(lex.fan == grevlex.fan);
}

TEST_CASE("affine fans") {
  Ring r1(std::vector<std::string>{"u"});
  GroebnerFan one = groebner_fan(Ideal(1, {r1.parse("u - 1")}));
  REQUIRE(one.cones.size() == 1);
  CHECK(one.cones[0].cone == RationalCone::from_inequalities(1, {{1}}));
  CHECK_FALSE(one.homogeneous);

  Ideal J = example2();
  auto q = quotient_lattice(GroupSpec::parse("5:1,2,3,0"), 3);
  GroebnerFan chart = affine_fan_of_chart(J, 3, {}, &q.lattice);
  CHECK(chart.fan.f_vector() == std::vector<std::size_t>{15, 32, 18});
  CHECK(chart.fan.count_simplicial() == 17);
  CHECK(chart.fan.count_smooth() == 17);

  // The saturated ideal of the same orbit has more cones, while the fan of
  // the affine ideal itself (one cone per initial ideal) is coarser.
  Ideal lattice = lattice_ideal(orbit_lattice(GroupSpec::parse("5:1,2,3,0")), 4);
  CHECK(affine_fan_of_chart(lattice, 3, {}, &q.lattice).fan.f_vector() == std::vector<std::size_t>{17, 35, 19});
  GroebnerFan direct = affine_fan_direct(dehomogenize_ideal(J, 3));
  CHECK(direct.fan.f_vector() == std::vector<std::size_t>{8, 17, 10});

  for (const auto& c : chart.cones) {
    for (const auto& ray : c.cone.rays())
      for (const auto& x : ray) CHECK(x >= 0);
    CHECK(c.basis.arity() == 3);
  }
  CHECK_THROWS_AS(affine_fan_of_chart(parse_ideal(2, {"x^2 - y"}), 1), DomainError);
}

TEST_CASE("example 1 dehomogenized at z") {
  Ideal I = example1();
  GroebnerFan hom = groebner_fan(I);
  GroebnerFan chart = affine_fan_of_chart(I, 2);
  const RationalCone quadrant = RationalCone::from_inequalities(2, RationalCone::identity(2));
  std::size_t meeting = 0;
  for (const auto& c : hom.cones) {
    RationalCone image = project_cone(c.cone, chart_projection(3, 2));
    if (!image.intersect(quadrant).is_full_dimensional()) continue;
    ++meeting;
    bool found = false;
    for (const auto& a : chart.cones) found = found || a.cone == image;
    CHECK(found);
  }
  CHECK(chart.cones.size() == meeting);
}

TEST_CASE("chart fans cover the projected fan") {
  Ideal I = example1();
  auto q = quotient_lattice(GroupSpec::parse("5:1,3,0"), 2);
  ChartFans charts = union_of_chart_fans(I, q);
  CHECK(charts.charts.size() == 3);
  CHECK(charts.union_fan == projected_fan(groebner_fan(I), q));
  CHECK(charts.union_fan.cones().size() == 11);

  ChartFans trivial = union_of_chart_fans(parse_ideal(2, {"x - y"}), quotient_lattice(GroupSpec::parse("1:0,0"), 1));
  CHECK(trivial.union_fan.cones().size() == 2);
  CHECK(trivial.union_fan.is_complete());

  auto q2 = quotient_lattice(GroupSpec::parse("5:1,2,3,0"), 3);
  ChartFans ex2 = union_of_chart_fans(example2(), q2);
  for (const auto& c : ex2.mapped[3].cones()) {
    bool found = false;
    for (const auto& u : ex2.union_fan.cones()) found = found || u == c;
    CHECK(found);
  }
  CHECK(ex2.mapped[3].f_vector() == std::vector<std::size_t>{15, 32, 18});
}

TEST_CASE("state polytopes") {
  Ideal I = example1();
  GroebnerFan gf = groebner_fan(I);
  auto q = quotient_lattice(GroupSpec::parse("5:1,3,0"), 2);
  StatePolytope st = state_polytope_auto(gf, 2);
  CHECK(st.polytope.vertices().size() == 11);
  CHECK(verify_normal_fan_equals_projection(gf, st, q));
  CHECK_THROWS_AS(state_polytope(gf, max_basis_degree(gf) - 1, 2), DegreeError);

  // Example 2: two pairs of initial ideals agree in every degree >= 12, so
  // the single-degree polytope merges their vertices.
  GroebnerFan gf2 = groebner_fan(example2());
  auto q2 = quotient_lattice(GroupSpec::parse("5:1,2,3,0"), 3);
  StatePolytope st2 = state_polytope_auto(gf2, 3);
  CHECK(st2.polytope.vertices().size() == gf2.cones.size());
  CHECK(verify_normal_fan_equals_projection(gf2, st2, q2));
  StatePolytope single = state_polytope(gf2, st2.degree, 3, StateKind::SingleDegree);
  CHECK(single.polytope.vertices().size() < gf2.cones.size());
  CHECK_FALSE(verify_normal_fan_equals_projection(gf2, single, q2));

  GroebnerFan point = groebner_fan(parse_ideal(3, {"x"}));
  CHECK(state_polytope(point, 3, 2).polytope.vertices().size() == 1);

  GroebnerFan line = groebner_fan(parse_ideal(2, {"x - y"}));
  StatePolytope seg = state_polytope(line, 1, 1);
  CHECK(seg.polytope.vertices().size() == 2);
  CHECK(verify_normal_fan_equals_projection(line, seg, quotient_lattice(GroupSpec::parse("1:0,0"), 1)));
}
