#pragma once

#include <cstddef>
#include <vector>

#include "gfk/cone.hpp"
#include "gfk/lattice.hpp"

namespace gfk {

/// Polyhedral fan given by its maximal cones, in canonical order. All cones
/// share one lineality space.
class Fan {
 public:
  /// Sorts and deduplicates the cones; throws IntegrityError when a cone
  /// contains another or the lineality spaces differ. The fan condition is
  /// checked separately by verify_fan_condition.
  Fan(AmbientLattice lattice, std::vector<RationalCone> maximal_cones);

  const AmbientLattice& lattice() const noexcept { return lattice_; }
  std::size_t ambient_dim() const noexcept { return lattice_.dim(); }
  const std::vector<RationalCone>& cones() const noexcept { return cones_; }
  const IntMatrix& lineality() const noexcept { return lineality_; }

  /// Distinct rays of all maximal cones, sorted.
  const IntMatrix& rays() const noexcept { return rays_; }
  /// Sorted indices into rays() for each maximal cone.
  const std::vector<std::vector<std::size_t>>& cone_rays() const noexcept { return cone_rays_; }

  /// Number of cones of dimension lineality+1, ..., max over all faces of
  /// all maximal cones.
  std::vector<std::size_t> f_vector() const;

  /// Every pairwise intersection of maximal cones is a face of both.
  bool satisfies_fan_condition() const;
  /// Throws IntegrityError naming the offending pair.
  void verify_fan_condition() const;

  /// The support is all of R^k: every maximal cone is full-dimensional and
  /// every facet of a maximal cone lies in exactly two maximal cones.
  bool is_complete() const;

  std::size_t count_simplicial() const;
  std::size_t count_smooth() const;

  /// Maximal cones contained in `region` (as a sub-fan of this fan).
  std::vector<RationalCone> cones_inside(const RationalCone& region) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  AmbientLattice lattice_;
  std::vector<RationalCone> cones_;
  IntMatrix lineality_;
  IntMatrix rays_;
  std::vector<std::vector<std::size_t>> cone_rays_;
};

/// Image fan under `map` into `target`; verifies the fan condition.
Fan project_fan(const Fan& fan, const IntMatrix& map, const AmbientLattice& target);

}  // namespace gfk
