#pragma once

#include <cstddef>
#include <compare>
#include <tuple>

#include "gfk/arith.hpp"
#include "gfk/lattice.hpp"

namespace gfk {

/// Largest ambient dimension the double description code accepts.
inline constexpr std::size_t kMaxConeDimension = 8;

/// Closed polyhedral cone in R^k with both descriptions in canonical form:
///  - lineality, equations: primitive rows of the reduced echelon basis of
///    the lineality space and of the orthogonal complement of the span;
///  - rays: one primitive vector per extreme ray modulo lineality, taken
///    orthogonal to the lineality space, sorted;
///  - facets: irredundant inner normals {x : <a, x> >= 0}, each primitive
///    and lying in the span of the cone, sorted.
/// Equal cones therefore compare equal field by field.
class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_inequalities(std::size_t dim, const IntMatrix& halfspaces, const IntMatrix& equations = {});
  static RationalCone from_generators(std::size_t dim, const IntMatrix& rays, const IntMatrix& lineality = {});
  static RationalCone full_space(std::size_t dim) { return from_generators(dim, {}, identity(dim)); }

  std::size_t ambient_dim() const noexcept { return dim_; }
  const IntMatrix& rays() const noexcept { return rays_; }
  const IntMatrix& lineality() const noexcept { return lineality_; }
  const IntMatrix& facets() const noexcept { return facets_; }
  const IntMatrix& equations() const noexcept { return equations_; }

  std::size_t dimension() const noexcept { return dim_ - equations_.size(); }
  std::size_t lineality_dim() const noexcept { return lineality_.size(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }
  /// Ray count equals dimension modulo lineality.
  bool is_simplicial() const noexcept { return rays_.size() == dimension() - lineality_dim(); }

  bool contains(const RatVector& v) const;
  bool contains(const RationalCone& other) const;
  bool contains_in_relative_interior(const RatVector& v) const;
  /// Sum of the rays; lies in the relative interior.
  RatVector relative_interior_point() const;

  RationalCone intersect(const RationalCone& other) const;
  /// Face on which the valid inequality <normal, x> >= 0 is tight.
  RationalCone face(const IntVector& normal) const;
  /// Smallest face containing v (v must lie in the cone).
  RationalCone minimal_face_containing(const RatVector& v) const;
  bool is_face_of(const RationalCone& other) const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;
  friend auto operator<=>(const RationalCone& a, const RationalCone& b) {
    return std::tie(a.dim_, a.rays_, a.lineality_) <=> std::tie(b.dim_, b.rays_, b.lineality_);
  }

  static IntMatrix identity(std::size_t dim);

 private:
  std::size_t dim_ = 0;
  IntMatrix rays_, lineality_, facets_, equations_;
};

/// Image under the linear map v -> map * v (map has one row per output
/// coordinate). Throws ProjectionError unless the kernel of the map lies in
/// the lineality space of the cone.
RationalCone project_cone(const RationalCone& cone, const IntMatrix& map);

/// Image under an arbitrary linear map, without the kernel condition.
RationalCone linear_image(const RationalCone& cone, const RatMatrix& map);

/// Primitive ray generators in lattice coordinates (plus a basis of the
/// lattice points of the lineality space) have all elementary divisors 1.
bool is_smooth(const RationalCone& cone, const AmbientLattice& lattice);

}  // namespace gfk
