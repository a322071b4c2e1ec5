#pragma once

// Exact linear algebra over the integers and the rationals. Matrices are
// lists of rows.

#include <cstddef>

#include "gfk/arith.hpp"

namespace gfk {

/// Reduced row echelon form; zero rows are dropped.
RatMatrix rref(RatMatrix rows);

std::size_t rank(const RatMatrix& rows);
std::size_t rank(const IntMatrix& rows);

/// Basis of {x in Q^ncols : row . x = 0 for every row}.
RatMatrix nullspace(const RatMatrix& rows, std::size_t ncols);

/// Canonical integer basis of the rational span of `rows`: reduced row
/// echelon form, each row scaled to a primitive integer vector.
IntMatrix canonical_span_basis(const RatMatrix& rows, std::size_t ncols);

/// True when v lies in the rational span of `rows`.
bool in_span(const RatMatrix& rows, const RatVector& v);

/// Row-style Hermite normal form of the lattice generated by `rows`:
/// upper echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped.
IntMatrix hermite_normal_form(IntMatrix rows);

/// Saturated basis (in Hermite normal form) of {x in Z^ncols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t ncols);

/// Nonzero diagonal entries of the Smith normal form, ascending.
IntVector elementary_divisors(IntMatrix rows);

Rational determinant(RatMatrix square);

/// Inverse of a square nonsingular matrix; throws DomainError when singular.
RatMatrix inverse(RatMatrix square);

RatMatrix transpose(const RatMatrix& m);

/// Row vector times matrix.
RatVector times(const RatVector& v, const RatMatrix& m);
IntVector apply(const IntMatrix& map, const IntVector& v);

}  // namespace gfk
