#include <doctest.h>

#include <numeric>
#include <random>

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"
#include "gfk/orbit.hpp"
#include "gfk/ring.hpp"

using namespace gfk;

namespace {

bool in_lattice_rows(const IntMatrix& basis, const IntVector& u) {
  RatMatrix b = to_rational(basis);
  return in_span(b, to_rational(u));
}

Integer index_in_sum_zero(const IntMatrix& basis) {
  // Dropping the last coordinate maps the sum-zero lattice onto Z^(r-1).
  RatMatrix m;
  for (const auto& u : basis) {
    RatVector v;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) v.push_back(u[i]);
    m.push_back(v);
  }
  return Integer(abs(determinant(m)));
}

std::vector<Polynomial> reduced(const Ideal& I, const MatrixTermOrder& o) { return reduced_basis(I, o).elements(); }

}  // namespace

TEST_CASE("group parsing and elements") {
  auto g = GroupSpec::parse("5:1,3,0");
  CHECK(g.arity() == 3);
  CHECK(g.order() == 5);
  CHECK(g.to_string() == "5:1,3,0");
  CHECK(GroupSpec::parse("5:6,-2,0").to_string() == "5:1,3,0");
  auto product = GroupSpec::parse("2:1,0,0,1;3:0,1,2,0");
  CHECK(product.exponent() == 6);
  CHECK(product.order() == 6);
  CHECK(GroupSpec::parse("1:0,0,0").order() == 1);
  CHECK_THROWS_AS(GroupSpec::parse("5:1,x,0"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("5-1,3,0"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("5:1,3;5:1,2,3"), ParseError);
}

TEST_CASE("freeness on the torus") {
  CHECK(GroupSpec::parse("5:1,3,0").acts_freely());
  CHECK(GroupSpec::parse("5:1,2,3,0").acts_freely());
  // 2*(1,2,0) = (2,0,0) is not a scalar, so this action is free too.
  CHECK(GroupSpec::parse("4:1,2,0").acts_freely());
  CHECK_FALSE(GroupSpec::parse("3:1,1,1").acts_freely());
  // 2*(1,3,3) = (2,2,2): a scalar matrix, trivial in PGL.
  CHECK_FALSE(GroupSpec::parse("4:1,3,3").acts_freely());
  CHECK_THROWS_AS(orbit_lattice(GroupSpec::parse("4:1,3,3")), FreenessError);
}

TEST_CASE("orbit lattice of 1/5(1,3,0)") {
  auto L = orbit_lattice(GroupSpec::parse("5:1,3,0"));
  CHECK(L.size() == 2);
  CHECK(in_lattice_rows(L, from_ints({3, -1, -2})));
  CHECK(in_lattice_rows(L, from_ints({2, 1, -3})));
  CHECK(index_in_sum_zero(L) == 5);
  for (const auto& u : L) {
    CHECK(u[0] + u[1] + u[2] == 0);
    CHECK((u[0] + 3 * u[1]) % 5 == 0);
  }
  CHECK(orbit_lattice(GroupSpec::parse("1:0,0,0")) == IntMatrix{from_ints({1, 0, -1}), from_ints({0, 1, -1})});
}

TEST_CASE("lattice ideals of the two examples") {
  Ring xyz = Ring::standard(3);
  auto I = lattice_ideal(orbit_lattice(GroupSpec::parse("5:1,3,0")), 3);
  CHECK(count_points(I) == 5);
  // The orbit ideal is the saturation of <x^3 - y z^2, x^2 y - z^3>; the two
  // agree away from z = 0.
  std::vector<std::size_t> all = {0, 1, 2};
  Ideal cubics(3, {xyz.parse("x^3 - y*z^2"), xyz.parse("x^2*y - z^3")});
  CHECK(reduced(I, MatrixTermOrder::lex(3)) == reduced(saturate(cubics, all), MatrixTermOrder::lex(3)));
  auto dehom = [](const Ideal& J, std::size_t v) {
    std::vector<Polynomial> g;
    auto gb = reduced_basis(J, MatrixTermOrder::grevlex(J.arity()));
    for (const auto& f : gb.elements()) {
      auto d = dehomogenize(f, v);
      if (!d.is_zero()) g.push_back(d);
    }
    return reduced_basis(Ideal(J.arity() - 1, g), MatrixTermOrder::lex(J.arity() - 1)).elements();
  };
  CHECK(dehom(I, 2) == dehom(cubics, 2));

  Ring r4 = Ring::standard(4);
  auto I2 = lattice_ideal(orbit_lattice(GroupSpec::parse("5:1,2,3,0")), 4);
  Ideal listed2(4, {r4.parse("x^5 - w^5"), r4.parse("x^2 - y*w"), r4.parse("x^3 - z*w^2")});
  CHECK(count_points(I2) == 5);
  CHECK(dehom(I2, 3) == dehom(listed2, 3));

  auto trivial = lattice_ideal(orbit_lattice(GroupSpec::parse("1:0,0")), 2);
  CHECK(reduced(trivial, MatrixTermOrder::lex(2)) == std::vector{Ring::standard(2).parse("x - y")});
}

TEST_CASE("lattice ideal properties over a family of cyclic groups") {
  std::mt19937 rng(29);
  int tested = 0;
  for (int m = 2; m <= 7; ++m)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        GroupSpec g(3, {{m, {a, b, 0}}});
        if (!g.acts_freely()) continue;
        auto L = orbit_lattice(g);
        CHECK(index_in_sum_zero(L) == g.order());
        auto I = lattice_ideal(L, 3);
        CHECK(count_points(I) == g.order());
        auto order = MatrixTermOrder::grevlex(3);
        auto gb = reduced_basis(I, order);
        // Generators are G-invariant binomials: both exponents have equal weight.
        for (const auto& f : gb.elements()) {
          REQUIRE(f.size() == 2);
          auto e0 = f.terms()[0].monomial, e1 = f.terms()[1].monomial;
          CHECK(((a * (e0[0] - e1[0]) + b * (e0[1] - e1[1])) % m + m) % m == 0);
        }
        // Random lattice vectors give binomials in the ideal.
        std::uniform_int_distribution<int> c(-2, 2);
        for (int k = 0; k < 5; ++k) {
          IntVector u(3, Integer(0));
          for (const auto& row : L) {
            int s = c(rng);
            for (std::size_t i = 0; i < 3; ++i) u[i] += s * row[i];
          }
          std::vector<Monomial::Exponent> p(3, 0), n(3, 0);
          for (std::size_t i = 0; i < 3; ++i) (u[i] > 0 ? p[i] : n[i]) = static_cast<int>(Integer(abs(u[i])).get_si());
          auto f = Polynomial::binomial(Monomial(p), Monomial(n));
          CHECK(normal_form(f, gb.elements(), order).is_zero());
        }
        ++tested;
      }
  CHECK(tested > 20);
}

TEST_CASE("quotient lattice") {
  auto q = quotient_lattice(GroupSpec::parse("5:1,3,0"), 2);
  CHECK(q.lattice == AmbientLattice(2, {{1, 0}, {0, 1}, {Rational(1, 5), Rational(3, 5)}}));
  CHECK(q.projection == IntMatrix{from_ints({1, 0, -1}), from_ints({0, 1, -1})});
  CHECK(q.lattice.covolume() == Rational(1, 5));

  CHECK(quotient_lattice(GroupSpec::parse("1:0,0,0"), 2).lattice == AmbientLattice::standard(2));

  auto q2 = quotient_lattice(GroupSpec::parse("5:1,2,3,0"), 3);
  CHECK(q2.lattice.covolume() == Rational(1, 5));
  for (std::size_t i = 0; i < 3; ++i) {
    RatVector e(3, Rational(0));
    e[i] = 1;
    CHECK(q2.lattice.contains(e));
  }
}
