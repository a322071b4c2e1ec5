#include "gfk/fan_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"

namespace gfk {

namespace {

unsigned worker_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GFK_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs f(0..n-1) on up to `threads` workers; rethrows the first exception.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F f) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

RationalCone positive_orthant(std::size_t n) { return RationalCone::from_inequalities(n, RationalCone::identity(n)); }

bool strictly_positive(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x > 0; });
}

RatVector negated(const IntVector& v) {
  RatVector out;
  for (const auto& x : v) out.push_back(Rational(-x));
  return out;
}

enum class Region { Everything, PositiveOrthant };

struct Crossing {
  std::size_t from;
  RationalCone facet;
  MatrixTermOrder order;
};

// Traversed fans have one cone per initial ideal; projected affine fans
// may split an initial ideal over several cones.
GroebnerFan assemble(const Ideal& ideal, std::vector<GroebnerCone> cones, const AmbientLattice& lattice,
                     bool unique_initial) {
  std::sort(cones.begin(), cones.end(), [](const GroebnerCone& a, const GroebnerCone& b) { return a.cone < b.cone; });
  std::set<std::vector<Monomial>> initial_ideals;
  for (const auto& c : cones) {
    auto lead = c.initial_exponents();
    std::sort(lead.begin(), lead.end());
    if (!initial_ideals.insert(lead).second && unique_initial)
      throw IntegrityError("two maximal Groebner cones share the same initial ideal");
  }
  std::vector<RationalCone> plain;
  for (const auto& c : cones) plain.push_back(c.cone);
  Fan fan(lattice, std::move(plain));
  return GroebnerFan{ideal, ideal.is_homogeneous(), std::move(cones), std::move(fan)};
}

GroebnerFan traverse(const Ideal& ideal, const TraversalOptions& options, Region region,
                     const AmbientLattice& lattice) {
  const std::size_t n = ideal.arity();
  const unsigned threads = worker_count(options.threads);
  const RationalCone orthant = region == Region::PositiveOrthant ? positive_orthant(n) : RationalCone();

  std::vector<GroebnerCone> cones = {groebner_cone(ideal, MatrixTermOrder(n, {}, options.fallback))};
  std::set<RationalCone> known = {cones.front().cone};
  std::vector<std::size_t> frontier = {0};

  while (!frontier.empty()) {
    std::vector<Crossing> crossings;
    for (std::size_t idx : frontier) {
      const RationalCone& cone = cones[idx].cone;
      for (const auto& normal : cone.facets()) {
        RationalCone facet = cone.face(normal);
        RatVector p = facet.relative_interior_point();
        if (region == Region::PositiveOrthant) {
          p = facet.intersect(orthant).relative_interior_point();
          if (!strictly_positive(p)) continue;
        }
        bool neighbour_known = false;
        for (const auto& k : cones)
          if (&k.cone != &cone && k.cone.contains(facet)) {
            neighbour_known = true;
            break;
          }
        if (neighbour_known) continue;
        std::vector<WeightVector> rows;
        if (ideal.is_homogeneous()) rows.push_back(WeightVector(n, Rational(1)));
        rows.push_back(p);
        rows.push_back(negated(normal));
        crossings.push_back({idx, std::move(facet), MatrixTermOrder(n, std::move(rows), options.fallback)});
      }
    }

    std::vector<std::optional<GroebnerCone>> results(crossings.size());
    parallel_for(crossings.size(), threads, [&](std::size_t i) {
      results[i] = groebner_cone(ideal, crossings[i].order);
      if (!results[i]->cone.contains(crossings[i].facet))
        throw IntegrityError("wall crossing produced a cone that does not contain the wall");
    });

    std::vector<std::size_t> next;
    for (auto& r : results) {
      if (!known.insert(r->cone).second) continue;
      cones.push_back(std::move(*r));
      next.push_back(cones.size() - 1);
    }
    frontier = std::move(next);
  }
  return assemble(ideal, std::move(cones), lattice, true);
}

}  // namespace

std::ptrdiff_t GroebnerFan::find_cone(const RatVector& w) const {
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].cone.contains(w)) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

GroebnerCone groebner_cone(const Ideal& ideal, const MatrixTermOrder& order) {
  GroebnerBasis gb = reduced_basis(ideal, order);
  IntMatrix ineqs;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const Monomial& a = gb.leading_monomials()[i];
    for (const auto& t : gb.elements()[i].terms()) {
      if (t.monomial == a) continue;
      IntVector diff;
      for (std::size_t j = 0; j < ideal.arity(); ++j) diff.push_back(Integer(a[j] - t.monomial[j]));
      ineqs.push_back(std::move(diff));
    }
  }
  return {RationalCone::from_inequalities(ideal.arity(), ineqs), std::move(gb)};
}

GroebnerCone groebner_cone(const Ideal& ideal, const WeightVector& w, Fallback fallback) {
  return groebner_cone(ideal, weight_order(ideal, w, MatrixTermOrder(ideal.arity(), {}, fallback)));
}

GroebnerFan groebner_fan(const Ideal& ideal, const TraversalOptions& options) {
  if (!ideal.is_homogeneous()) return affine_fan_from_homogenization(ideal, options);
  return traverse(ideal, options, Region::Everything, AmbientLattice::standard(ideal.arity()));
}

GroebnerFan affine_fan_direct(const Ideal& ideal, const TraversalOptions& options, const AmbientLattice* lattice) {
  const AmbientLattice lat = lattice ? *lattice : AmbientLattice::standard(ideal.arity());
  return traverse(ideal, options, Region::PositiveOrthant, lat);
}

Ideal homogenize_ideal(const Ideal& affine, std::size_t index) {
  GroebnerBasis gb = reduced_basis(affine, MatrixTermOrder::grevlex(affine.arity()));
  std::vector<Polynomial> gens;
  for (const auto& g : gb.elements()) gens.push_back(homogenize(g, index));
  return Ideal(affine.arity() + 1, std::move(gens));
}

Ideal dehomogenize_ideal(const Ideal& homogeneous, std::size_t index) {
  std::vector<Polynomial> gens;
  for (const auto& g : homogeneous.generators()) {
    Polynomial d = dehomogenize(g, index);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  if (gens.empty()) gens.push_back(Polynomial(homogeneous.arity() - 1));
  return Ideal(homogeneous.arity() - 1, std::move(gens));
}

GroebnerFan affine_fan_of_chart(const Ideal& homogeneous, std::size_t chart, const TraversalOptions& options,
                                const AmbientLattice* lattice) {
  if (!homogeneous.is_homogeneous()) throw DomainError("chart fans need a homogeneous ideal");
  const std::size_t r = homogeneous.arity();
  if (chart >= r) throw DimensionError("chart index outside the ring");
  if (r < 2) throw DimensionError("a chart needs at least two variables");
  const std::size_t n = r - 1;
  const AmbientLattice lat = lattice ? *lattice : AmbientLattice::standard(n);
  const Ideal affine = dehomogenize_ideal(homogeneous, chart);
  GroebnerFan hom = traverse(homogeneous, options, Region::Everything, AmbientLattice::standard(r));
  const IntMatrix map = chart_projection(r, chart);
  const RationalCone orthant = positive_orthant(n);

  std::vector<RationalCone> kept;
  for (const auto& c : hom.cones) {
    RationalCone image = project_cone(c.cone, map);
    if (image.intersect(orthant).is_full_dimensional()) kept.push_back(std::move(image));
  }
  std::vector<std::optional<GroebnerCone>> found(kept.size());
  parallel_for(kept.size(), worker_count(options.threads), [&](std::size_t i) {
    RationalCone part = kept[i].intersect(orthant);
    RatVector p = part.relative_interior_point();
    GroebnerCone gc = groebner_cone(affine, MatrixTermOrder(n, {p}, options.fallback));
    if (!gc.cone.contains(part))
      throw IntegrityError("projected cone is not inside the affine Groebner cone of its interior point");
    found[i] = GroebnerCone{kept[i], std::move(gc.basis)};
  });
  std::vector<GroebnerCone> cones;
  for (auto& c : found) cones.push_back(std::move(*c));
  GroebnerFan out = assemble(affine, std::move(cones), lat, false);

  // Sampling cross-check: every cone found by direct traversal is covered by
  // images with the same reduced basis, and no image falls outside them.
  GroebnerFan direct = affine_fan_direct(affine, options, &lat);
  std::vector<bool> covered(direct.cones.size(), false);
  for (const auto& c : out.cones) {
    RatVector p = c.cone.intersect(orthant).relative_interior_point();
    auto j = direct.find_cone(p);
    if (j < 0 || !direct.cones[static_cast<std::size_t>(j)].basis.same_elements(c.basis))
      throw IntegrityError("direct affine traversal disagrees with the projected fan");
    covered[static_cast<std::size_t>(j)] = true;
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw IntegrityError("a cone of the direct affine traversal has no projected image");
  return out;
}

GroebnerFan affine_fan_from_homogenization(const Ideal& ideal, const TraversalOptions& options,
                                           const AmbientLattice* lattice) {
  return affine_fan_of_chart(homogenize_ideal(ideal, ideal.arity()), ideal.arity(), options, lattice);
}

Fan projected_fan(const GroebnerFan& fan, const QuotientLattice& target) {
  return project_fan(fan.fan, target.projection, target.lattice);
}

ChartFans union_of_chart_fans(const Ideal& homogeneous, const QuotientLattice& target, const TraversalOptions& options) {
  if (!homogeneous.is_homogeneous()) throw DomainError("chart fans need a homogeneous ideal");
  const std::size_t r = homogeneous.arity();
  ChartFans out{{}, {}, Fan(target.lattice, {RationalCone::full_space(r - 1)})};
  std::vector<RationalCone> all;
  for (std::size_t i = 0; i < r; ++i) {
    GroebnerFan chart = affine_fan_of_chart(homogeneous, i, options);
    // y (coordinates j != i) -> n with n_i = 0 -> target chart coordinates.
    RatMatrix embed(r, RatVector(r - 1, Rational(0)));
    for (std::size_t j = 0, k = 0; j < r; ++j)
      if (j != i) embed[j][k++] = 1;
    RatMatrix map(r - 1, RatVector(r - 1, Rational(0)));
    for (std::size_t a = 0; a < r - 1; ++a)
      for (std::size_t b = 0; b < r - 1; ++b)
        for (std::size_t j = 0; j < r; ++j) map[a][b] += target.projection[a][j] * embed[j][b];
    std::vector<RationalCone> images;
    for (const auto& c : chart.cones) images.push_back(linear_image(c.cone, map));
    all.insert(all.end(), images.begin(), images.end());
    out.mapped.emplace_back(target.lattice, std::move(images));
    out.charts.push_back(std::move(chart));
  }
  out.union_fan = Fan(target.lattice, std::move(all));
  out.union_fan.verify_fan_condition();
  return out;
}

std::int64_t max_basis_degree(const GroebnerFan& fan) {
  std::int64_t d = 0;
  for (const auto& c : fan.cones) d = std::max(d, c.basis.max_degree());
  return d;
}

StatePolytope state_polytope(const GroebnerFan& fan, std::int64_t d, std::size_t chart, StateKind kind) {
  if (!fan.homogeneous) throw DomainError("state polytopes need a homogeneous ideal");
  const std::int64_t bound = max_basis_degree(fan);
  if (d < bound)
    throw DegreeError("degree " + std::to_string(d) + " is below the largest reduced basis degree " +
                      std::to_string(bound));
  const std::size_t r = fan.ideal.arity();
  if (chart >= r) throw DimensionError("chart index outside the ring");

  std::vector<Monomial> degree_d;
  std::vector<Monomial::Exponent> e(r, 0);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == r) {
      e[i] = static_cast<Monomial::Exponent>(left);
      degree_d.emplace_back(e);
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      e[i] = static_cast<Monomial::Exponent>(k);
      self(self, i + 1, left - k);
    }
  };
  for (std::int64_t k = kind == StateKind::SingleDegree ? d : 1; k <= d; ++k) rec(rec, 0, k);

  std::vector<IntVector> sums;
  for (const auto& c : fan.cones) {
    IntVector v(r, Integer(0));
    for (const auto& m : degree_d) {
      const auto& lead = c.initial_exponents();
      if (std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return l.divides(m); }))
        for (std::size_t j = 0; j < r; ++j) v[j] += m[j];
    }
    sums.push_back(std::move(v));
  }
  const IntVector origin = *std::min_element(sums.begin(), sums.end());
  StatePolytope out{d, kind, {}, Polytope()};
  for (const auto& v : sums) {
    RatVector p;
    for (std::size_t j = 0; j < r; ++j)
      if (j != chart) p.push_back(Rational(v[j] - origin[j]));
    out.cone_vertices.push_back(std::move(p));
  }
  out.polytope = convex_hull(r - 1, out.cone_vertices);
  return out;
}

StatePolytope state_polytope_auto(const GroebnerFan& fan, std::size_t chart, StateKind kind) {
  std::int64_t d = max_basis_degree(fan);
  StatePolytope current = state_polytope(fan, d, chart, kind);
  for (;;) {
    StatePolytope next = state_polytope(fan, d + 1, chart, kind);
    if (next.polytope.vertices().size() == current.polytope.vertices().size()) return current;
    current = std::move(next);
    ++d;
  }
}

bool verify_normal_fan_equals_projection(const GroebnerFan& fan, const StatePolytope& st,
                                         const QuotientLattice& target) {
  return normal_fan(st.polytope, target.lattice) == projected_fan(fan, target);
}

}  // namespace gfk
