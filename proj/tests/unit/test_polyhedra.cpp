#include <doctest.h>

#include <algorithm>
#include <random>

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"
#include "gfk/polytope.hpp"

using namespace gfk;

namespace {

IntMatrix M(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix out;
  for (auto r : rows) out.push_back(from_ints(r));
  return out;
}

RatVector Q(std::initializer_list<long> v) { return to_rational(from_ints(v)); }

AmbientLattice n_prime() { return AmbientLattice(2, {{1, 0}, {0, 1}, {Rational(1, 5), Rational(3, 5)}}); }

}  // namespace

TEST_CASE("linear algebra basics") {
  CHECK(hermite_normal_form(M({{2, 4}, {3, 1}})) == M({{1, 7}, {0, 10}}));
  CHECK(elementary_divisors(M({{2, 4}, {3, 1}})) == from_ints({1, 10}));
  CHECK(integer_kernel(M({{1, 1, 1}}), 3) == M({{1, 0, -1}, {0, 1, -1}}));
  CHECK(determinant(to_rational(M({{2, 1}, {1, 3}}))) == 5);
  CHECK_THROWS_AS(inverse(to_rational(M({{1, 2}, {2, 4}}))), DomainError);
}

TEST_CASE("halfspaces to rays") {
  auto c = RationalCone::from_inequalities(2, M({{1, 0}, {0, 1}}));
  CHECK(c.rays() == M({{0, 1}, {1, 0}}));
  CHECK(c.lineality().empty());
  CHECK(c.relative_interior_point() == Q({1, 1}));

  // A cone of Example 1: y - z >= 0, x - 2y + z >= 0.
  c = RationalCone::from_inequalities(3, M({{0, 1, -1}, {1, -2, 1}}));
  CHECK(c.lineality() == M({{1, 1, 1}}));
  CHECK(c.dimension() == 3);
  CHECK(c.rays().size() == 2);
  CHECK(c.contains(Q({5, 2, 1})));
  CHECK_FALSE(c.contains(Q({0, 2, 1})));
}

TEST_CASE("rays to halfspaces") {
  auto c = RationalCone::from_generators(2, M({{1, 0}, {1, 5}}));
  CHECK(c.facets() == M({{0, 1}, {5, -1}}));
  CHECK(c.is_simplicial());
  CHECK(is_smooth(RationalCone::from_generators(2, M({{1, 0}, {0, 1}})), AmbientLattice::standard(2)));
  CHECK_FALSE(is_smooth(RationalCone::from_generators(2, M({{1, 0}, {0, 1}})), n_prime()));
  CHECK_FALSE(is_smooth(c, AmbientLattice::standard(2)));
}

TEST_CASE("dimension bound") {
  CHECK_THROWS_AS(RationalCone::full_space(9), CapabilityError);
  CHECK(RationalCone::full_space(8).lineality_dim() == 8);
}

TEST_CASE("dual description round trip and canonical form on random cones") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3), count(1, 6), dims(2, 4);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t k = static_cast<std::size_t>(dims(rng));
    IntMatrix gens;
    for (int i = count(rng); i > 0; --i) {
      IntVector v(k);
      for (auto& x : v) x = d(rng);
      if (!is_zero(v)) gens.push_back(v);
    }
    auto c = RationalCone::from_generators(k, gens);
    for (const auto& g : gens) CHECK(c.contains(to_rational(g)));
    auto h = RationalCone::from_inequalities(k, c.facets(), c.equations());
    CHECK(h == c);
    auto v = RationalCone::from_generators(k, c.rays(), c.lineality());
    CHECK(v == c);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(RationalCone::from_generators(k, gens) == c);
    CHECK(c.dimension() + c.equations().size() == k);
    if (!c.rays().empty()) CHECK(c.contains_in_relative_interior(c.relative_interior_point()));
    for (const auto& f : c.facets()) CHECK(c.face(f).is_face_of(c));
    if (is_smooth(c, AmbientLattice::standard(k))) CHECK(c.is_simplicial());
  }
}

TEST_CASE("projection of cones") {
  IntMatrix map = M({{1, 0, -1}, {0, 1, -1}});
  auto c1 = RationalCone::from_inequalities(3, M({{0, 1, -1}, {1, -2, 1}}));
  auto image = project_cone(c1, map);
  CHECK(image == RationalCone::from_inequalities(2, M({{0, 1}, {1, -2}})));
  CHECK(image.is_pointed());
  CHECK(project_cone(RationalCone::full_space(3), map) == RationalCone::full_space(2));
  auto pointed = RationalCone::from_generators(3, M({{1, 0, 0}}));
  CHECK_THROWS_AS(project_cone(pointed, map), ProjectionError);
}

TEST_CASE("quadrant fan") {
  std::vector<RationalCone> cones;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1}) cones.push_back(RationalCone::from_generators(2, M({{sx, 0}, {0, sy}})));
  Fan f(AmbientLattice::standard(2), cones);
  CHECK(f.f_vector() == std::vector<std::size_t>{4, 4});
  CHECK(f.is_complete());
  CHECK(f.satisfies_fan_condition());
  CHECK(f.count_smooth() == 4);

  cones.pop_back();
  Fan partial(AmbientLattice::standard(2), cones);
  CHECK_FALSE(partial.is_complete());
  CHECK(partial.f_vector() == std::vector<std::size_t>{4, 3});

  // Overlapping cones violate the fan condition.
  Fan bad(AmbientLattice::standard(2),
          {RationalCone::from_generators(2, M({{1, 0}, {1, 2}})), RationalCone::from_generators(2, M({{1, 1}, {0, 1}}))});
  CHECK_FALSE(bad.satisfies_fan_condition());
  CHECK_THROWS_AS(Fan(AmbientLattice::standard(2), {RationalCone::from_generators(2, M({{1, 0}, {0, 1}})),
                                                     RationalCone::from_generators(2, M({{1, 1}}))}),
                  IntegrityError);
}

TEST_CASE("complete fans cover random points") {
  // Normal fan of a random polytope is complete; interior points of one cone
  // lie in no other cone.
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<RatVector> pts;
  for (int i = 0; i < 9; ++i) pts.push_back(Q({d(rng), d(rng), d(rng)}));
  Fan f = normal_fan(convex_hull(3, pts), AmbientLattice::standard(3));
  CHECK(f.is_complete());
  f.verify_fan_condition();
  for (int i = 0; i < 200; ++i) {
    RatVector w = Q({d(rng), d(rng), d(rng)});
    CHECK(std::any_of(f.cones().begin(), f.cones().end(), [&](const RationalCone& c) { return c.contains(w); }));
  }
  for (const auto& c : f.cones()) {
    auto p = c.relative_interior_point();
    CHECK(std::count_if(f.cones().begin(), f.cones().end(), [&](const RationalCone& o) { return o.contains(p); }) == 1);
  }
}

TEST_CASE("convex hulls and normal fans") {
  auto square = convex_hull(2, {Q({0, 0}), Q({1, 0}), Q({0, 1}), Q({1, 1}), {Rational(1, 2), Rational(1, 2)}});
  CHECK(square.vertices().size() == 4);
  Fan nf = normal_fan(square, AmbientLattice::standard(2));
  CHECK(nf.cones().size() == 4);
  CHECK(nf.f_vector() == std::vector<std::size_t>{4, 4});
  // The vertex (1,1) maximizes <w, .> for w in the positive quadrant.
  CHECK(normal_cone(square, Q({1, 1})) == RationalCone::from_generators(2, M({{1, 0}, {0, 1}})));

  auto segment = convex_hull(2, {Q({0, 0}), Q({1, 0})});
  Fan sf = normal_fan(segment, AmbientLattice::standard(2));
  CHECK(sf.cones().size() == 2);
  CHECK(sf.lineality() == M({{0, 1}}));

  auto point = convex_hull(3, {Q({1, 2, 3})});
  CHECK(normal_fan(point, AmbientLattice::standard(3)).cones().front() == RationalCone::full_space(3));
}

TEST_CASE("lattices") {
  auto n = n_prime();
  CHECK(n.covolume() == Rational(1, 5));
  CHECK(n.contains({Rational(2, 5), Rational(1, 5)}));
  CHECK_FALSE(n.contains({Rational(1, 5), Rational(1, 5)}));
  CHECK(n.primitive_vector(Q({1, 3})) == RatVector{Rational(1, 5), Rational(3, 5)});
  CHECK(n == AmbientLattice(2, {{Rational(1, 5), Rational(3, 5)}, {0, 1}}));
  CHECK(dual_lattice(M({{1, 0}, {0, 1}})) == AmbientLattice::standard(2));
  CHECK_THROWS_AS(AmbientLattice(2, {{1, 1}}), DimensionError);
}
