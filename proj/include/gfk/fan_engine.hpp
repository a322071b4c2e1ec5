#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gfk/fan.hpp"
#include "gfk/groebner.hpp"
#include "gfk/orbit.hpp"
#include "gfk/polytope.hpp"

namespace gfk {

/// Closed Groebner cone with the reduced basis that defines it.
struct GroebnerCone {
  RationalCone cone;
  GroebnerBasis basis;

  /// Leading monomials, parallel to basis.elements().
  const std::vector<Monomial>& initial_exponents() const noexcept { return basis.leading_monomials(); }
};

struct TraversalOptions {
  Fallback fallback = Fallback::Lex;
  /// Worker threads for wall crossings; 0 reads GFK_THREADS, falling back
  /// to the hardware concurrency.
  unsigned threads = 0;
};

/// Maximal Groebner cones of an ideal, sorted like the cones of `fan`.
struct GroebnerFan {
  Ideal ideal;
  bool homogeneous;
  std::vector<GroebnerCone> cones;
  Fan fan;

  /// Index of a maximal cone containing w, or -1.
  std::ptrdiff_t find_cone(const RatVector& w) const;
};

/// Cone of the reduced basis for a term order: {w : <w, a - b> >= 0} over
/// all basis elements with leading exponent a and other exponents b.
GroebnerCone groebner_cone(const Ideal& ideal, const MatrixTermOrder& order);

/// Maximal cone of the weight order <_w (refined by the fallback); w lies
/// in it. Requires w >= 0 unless the ideal is homogeneous.
GroebnerCone groebner_cone(const Ideal& ideal, const WeightVector& w, Fallback fallback = Fallback::Lex);

/// All maximal cones. Homogeneous ideals are traversed over R^r by wall
/// crossing; other ideals go through affine_fan_from_homogenization.
GroebnerFan groebner_fan(const Ideal& ideal, const TraversalOptions& options = {});

/// Wall crossing for an affine ideal, crossing only walls that meet the
/// open positive orthant. Lattice: `lattice` (standard when omitted).
GroebnerFan affine_fan_direct(const Ideal& ideal, const TraversalOptions& options = {},
                              const AmbientLattice* lattice = nullptr);

/// Fan of the chart {x_chart != 0}: images of the maximal cones of the
/// homogeneous ideal under chart_projection that meet the open positive
/// orthant, each with the reduced basis of the dehomogenized ideal at an
/// interior point. Several images can share one initial ideal. The images
/// are cross-checked against affine_fan_direct (IntegrityError on mismatch).
/// The result depends on the homogeneous generators chosen, not only on the
/// dehomogenized ideal.
GroebnerFan affine_fan_of_chart(const Ideal& homogeneous, std::size_t chart, const TraversalOptions& options = {},
                                const AmbientLattice* lattice = nullptr);

/// affine_fan_of_chart of homogenize_ideal(ideal, r) at the new last variable.
GroebnerFan affine_fan_from_homogenization(const Ideal& ideal, const TraversalOptions& options = {},
                                           const AmbientLattice* lattice = nullptr);

/// Homogeneous ideal from the reduced graded reverse lex basis of an affine
/// ideal, with the homogenizing variable inserted at `index`.
Ideal homogenize_ideal(const Ideal& affine, std::size_t index);
/// Ideal generated by the dehomogenized generators (variable removed).
Ideal dehomogenize_ideal(const Ideal& homogeneous, std::size_t index);

/// Image of the homogeneous fan under the chart projection into `target`.
Fan projected_fan(const GroebnerFan& fan, const QuotientLattice& target);

/// affine_fan_of_chart at every variable, mapped into the coordinates of
/// `target` and merged. Throws IntegrityError if the union
/// violates the fan condition.
struct ChartFans {
  std::vector<GroebnerFan> charts;  // chart i in its own coordinates
  std::vector<Fan> mapped;          // chart i in target coordinates
  Fan union_fan;
};
ChartFans union_of_chart_fans(const Ideal& homogeneous, const QuotientLattice& target,
                              const TraversalOptions& options = {});

/// SingleDegree is St_d: one vertex per cone, the exponent sum of the
/// degree-d monomials of its initial ideal. Distinct initial ideals can
/// agree in every single degree >= d while differing below it, so St_d may
/// have fewer vertices than there are cones. UpToDegree is the Minkowski
/// sum St_1 + ... + St_d, whose normal fan is the full Groebner fan once d
/// reaches the largest reduced basis degree.
enum class StateKind { SingleDegree, UpToDegree };

struct StatePolytope {
  std::int64_t degree;
  StateKind kind;
  /// Vertex of each maximal cone (parallel to GroebnerFan::cones), in the
  /// coordinates of M' (chart coordinate dropped, translated so the lex
  /// smallest vertex is the origin).
  std::vector<RatVector> cone_vertices;
  Polytope polytope;
};

/// Smallest degree allowed for state polytopes of this fan.
std::int64_t max_basis_degree(const GroebnerFan& fan);

/// Throws DegreeError when d is below max_basis_degree.
StatePolytope state_polytope(const GroebnerFan& fan, std::int64_t d, std::size_t chart,
                             StateKind kind = StateKind::UpToDegree);

/// Starts at max_basis_degree and raises d until the vertex count agrees at
/// d and d + 1.
StatePolytope state_polytope_auto(const GroebnerFan& fan, std::size_t chart,
                                  StateKind kind = StateKind::UpToDegree);

/// Normal fan of the state polytope over `target` equals the projected fan.
bool verify_normal_fan_equals_projection(const GroebnerFan& fan, const StatePolytope& st,
                                         const QuotientLattice& target);

}  // namespace gfk
