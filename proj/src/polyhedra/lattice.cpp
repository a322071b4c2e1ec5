#include "gfk/lattice.hpp"

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"

namespace gfk {

AmbientLattice::AmbientLattice(std::size_t dim, const RatMatrix& generators) : dim_(dim) {
  Integer denom = 1;
  for (const auto& row : generators) {
    if (row.size() != dim) throw DimensionError("lattice generator has the wrong length");
    for (const auto& x : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  }
  IntMatrix scaled;
  for (const auto& row : generators) {
    IntVector r;
    for (const auto& x : row) r.push_back(Integer(x * denom));
    scaled.push_back(std::move(r));
  }
  IntMatrix hnf = hermite_normal_form(std::move(scaled));
  if (hnf.size() != dim) throw DimensionError("lattice generators do not span the ambient space");
  for (const auto& row : hnf) {
    RatVector r;
    for (const auto& x : row) r.push_back(Rational(x, denom));
    for (auto& x : r) x.canonicalize();
    basis_.push_back(std::move(r));
  }
  inverse_ = inverse(basis_);
}

AmbientLattice AmbientLattice::standard(std::size_t dim) {
  RatMatrix id(dim, RatVector(dim, Rational(0)));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  return AmbientLattice(dim, id);
}

Rational AmbientLattice::covolume() const { return abs(determinant(basis_)); }

RatVector AmbientLattice::coordinates(const RatVector& v) const {
  if (v.size() != dim_) throw DimensionError("vector length differs from lattice dimension");
  return times(v, inverse_);
}

RatVector AmbientLattice::from_coordinates(const RatVector& c) const { return times(c, basis_); }

bool AmbientLattice::contains(const RatVector& v) const {
  for (const auto& x : coordinates(v))
    if (x.get_den() != 1) return false;
  return true;
}

RatVector AmbientLattice::primitive_vector(const RatVector& v) const {
  if (is_zero(v)) throw DomainError("the zero vector spans no ray");
  return from_coordinates(to_rational(primitive(coordinates(v))));
}

AmbientLattice dual_lattice(const IntMatrix& rows) {
  const std::size_t k = rows.size();
  if (k == 0 || rows.front().size() != k) throw DimensionError("dual lattice needs a square matrix");
  // The dual basis is the columns of the inverse.
  return AmbientLattice(k, transpose(inverse(to_rational(rows))));
}

}  // namespace gfk
