#include "gfk/polytope.hpp"

#include <algorithm>

#include "gfk/errors.hpp"

namespace gfk {

namespace {

IntVector lift(const RatVector& p) {
  RatVector v = {Rational(1)};
  v.insert(v.end(), p.begin(), p.end());
  return primitive(v);
}

}  // namespace

Polytope convex_hull(std::size_t dim, const std::vector<RatVector>& points) {
  if (points.empty()) throw DomainError("convex hull of no points");
  IntMatrix gens;
  for (const auto& p : points) {
    if (p.size() != dim) throw DimensionError("point has the wrong length");
    gens.push_back(lift(p));
  }
  Polytope out;
  out.dim_ = dim;
  out.cone_ = RationalCone::from_generators(dim + 1, gens);
  for (const auto& r : out.cone_.rays()) {
    RatVector v;
    for (std::size_t i = 1; i <= dim; ++i) v.push_back(Rational(r[i], r[0]));
    for (auto& x : v) x.canonicalize();
    out.vertices_.push_back(std::move(v));
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  return out;
}

RationalCone normal_cone(const Polytope& p, const RatVector& vertex) {
  const std::size_t k = p.ambient_dim();
  const IntVector lifted = lift(vertex);
  IntMatrix rays, lin;
  bool found = false;
  for (const auto& r : p.homogenized_cone().rays()) found = found || r == lifted;
  if (!found) throw DomainError("point is not a vertex of the polytope");
  for (const auto& f : p.homogenized_cone().facets()) {
    if (dot(f, lifted) != 0) continue;
    IntVector w;
    for (std::size_t i = 1; i <= k; ++i) w.push_back(-f[i]);
    if (!is_zero(w)) rays.push_back(primitive(w));
  }
  for (const auto& e : p.homogenized_cone().equations()) {
    IntVector w(e.begin() + 1, e.end());
    if (!is_zero(w)) lin.push_back(primitive(w));
  }
  return RationalCone::from_generators(k, rays, lin);
}

Fan normal_fan(const Polytope& p, const AmbientLattice& lattice) {
  if (lattice.dim() != p.ambient_dim()) throw DimensionError("lattice and polytope have different dimension");
  std::vector<RationalCone> cones;
  for (const auto& v : p.vertices()) cones.push_back(normal_cone(p, v));
  return Fan(lattice, std::move(cones));
}

}  // namespace gfk
