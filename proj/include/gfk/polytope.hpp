#pragma once

#include <cstddef>
#include <vector>

#include "gfk/fan.hpp"

namespace gfk {

/// Convex hull of finitely many rational points, stored by its sorted
/// irredundant vertex list.
class Polytope {
 public:
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  std::size_t ambient_dim() const noexcept { return dim_; }

  /// Cone over {1} x P in R^(k+1); its facets are the facets of P.
  const RationalCone& homogenized_cone() const noexcept { return cone_; }

  friend Polytope convex_hull(std::size_t dim, const std::vector<RatVector>& points);

 private:
  std::size_t dim_ = 0;
  std::vector<RatVector> vertices_;
  RationalCone cone_;
};

Polytope convex_hull(std::size_t dim, const std::vector<RatVector>& points);

/// Outer normal fan: the cone at vertex v is {w : <w, v> >= <w, u> for all
/// points u of P}. Lower-dimensional polytopes yield cones with lineality.
Fan normal_fan(const Polytope& p, const AmbientLattice& lattice);

/// Normal cone at one vertex (which must be a vertex of p).
RationalCone normal_cone(const Polytope& p, const RatVector& vertex);

}  // namespace gfk
