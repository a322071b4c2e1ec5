#pragma once

#include <cstddef>

#include "gfk/arith.hpp"

namespace gfk {

/// Full-rank lattice in Q^k given by a rational basis (rows). The basis is
/// kept in Hermite normal form, so two lattices are equal iff their bases
/// are.
class AmbientLattice {
 public:
  /// Lattice generated by the rows, which must span Q^k.
  AmbientLattice(std::size_t dim, const RatMatrix& generators);

  static AmbientLattice standard(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const RatMatrix& basis() const noexcept { return basis_; }
  /// |det basis|, the volume of a fundamental domain.
  Rational covolume() const;

  /// Coordinates of v in the lattice basis (row vector c with c * basis = v).
  RatVector coordinates(const RatVector& v) const;
  RatVector from_coordinates(const RatVector& c) const;
  bool contains(const RatVector& v) const;
  /// Shortest lattice vector on the ray through v != 0.
  RatVector primitive_vector(const RatVector& v) const;

  friend bool operator==(const AmbientLattice&, const AmbientLattice&) = default;

 private:
  std::size_t dim_;
  RatMatrix basis_;
  RatMatrix inverse_;
};

/// Lattice of all vectors pairing integrally with the rows of a full-rank
/// integer matrix, i.e. the dual lattice of the row lattice.
AmbientLattice dual_lattice(const IntMatrix& rows);

}  // namespace gfk
