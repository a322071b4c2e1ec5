#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gfk/groebner.hpp"
#include "gfk/lattice.hpp"

namespace gfk {

/// Generator of a diagonal abelian group: diag(e^a_1, ..., e^a_r) with e a
/// primitive m-th root of unity.
struct GroupGenerator {
  std::int64_t order;
  std::vector<std::int64_t> weights;

  friend bool operator==(const GroupGenerator&, const GroupGenerator&) = default;
};

/// Finite abelian group acting diagonally on P^(r-1), given by generators.
/// Text form: `m:a1,...,ar`, several generators separated by `;`.
class GroupSpec {
 public:
  /// Reduces weights into [0, m). Throws DimensionError on length mismatch.
  GroupSpec(std::size_t arity, std::vector<GroupGenerator> generators);

  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<GroupGenerator>& generators() const noexcept { return generators_; }
  /// lcm of the generator orders; group elements are residue vectors mod it.
  std::int64_t exponent() const noexcept { return exponent_; }

  /// All elements as weight vectors mod exponent(), sorted.
  std::vector<std::vector<std::int64_t>> elements() const;
  std::uint64_t order() const { return elements().size(); }

  /// A nonzero element whose weights are constant mod exponent() fixes the
  /// open torus of P^(r-1) pointwise; the action is free iff none exists.
  bool acts_freely() const;
  /// Throws FreenessError naming a non-free element.
  void require_free() const;

 private:
  std::size_t arity_;
  std::vector<GroupGenerator> generators_;
  std::int64_t exponent_;
};

/// Lattice {u in Z^r : sum u = 0, a_j . u = 0 mod m_j for all j} in Hermite
/// normal form. These are the exponent differences of binomials vanishing
/// on the orbit of (1:...:1). Requires a free action.
IntMatrix orbit_lattice(const GroupSpec& group);

/// <x^u+ - x^u- : u a row> saturated by x1...xr.
Ideal lattice_ideal(const IntMatrix& lattice_basis, std::size_t arity);

/// The lattice N' in chart coordinates: the dual of the orbit lattice with
/// coordinate `chart` dropped, together with the projection
/// n -> (n_j - n_chart)_{j != chart} from Z^r.
struct QuotientLattice {
  AmbientLattice lattice;
  IntMatrix projection;
  std::size_t chart;
};

QuotientLattice quotient_lattice(const GroupSpec& group, std::size_t chart);

/// Projection n -> (n_j - n_chart)_{j != chart}, as a (r-1) x r matrix.
IntMatrix chart_projection(std::size_t arity, std::size_t chart);

}  // namespace gfk
