#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gfk/arith.hpp"
#include "gfk/monomial.hpp"
#include "gfk/polynomial.hpp"

namespace gfk {

using WeightVector = RatVector;

enum class Fallback { Lex, GrevLex };

/// Compares monomials row by row on <row, exponents>; ties after the last
/// row go to the fallback order (lex or graded reverse lex, x1 > ... > xr).
/// A weight term order <_w is the matrix order with the single row w.
class MatrixTermOrder {
 public:
  explicit MatrixTermOrder(std::size_t arity, std::vector<WeightVector> rows = {},
                           Fallback fallback = Fallback::Lex);

  static MatrixTermOrder lex(std::size_t arity) { return MatrixTermOrder(arity); }
  static MatrixTermOrder grevlex(std::size_t arity) { return MatrixTermOrder(arity, {}, Fallback::GrevLex); }

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<WeightVector>& rows() const noexcept { return rows_; }
  Fallback fallback() const noexcept { return fallback_; }

  /// New order whose rows are `leading` followed by this order's rows.
  MatrixTermOrder refined_by(const std::vector<WeightVector>& leading) const;
  MatrixTermOrder refined_by(const WeightVector& w) const { return refined_by(std::vector<WeightVector>{w}); }

  /// Throws DimensionError on arity mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// True when every row's first nonzero entry in each column is positive,
  /// i.e. 1 is the unique minimum and the order is a well-order.
  bool is_term_order() const;

  friend bool operator==(const MatrixTermOrder& a, const MatrixTermOrder& b) {
    return a.arity_ == b.arity_ && a.rows_ == b.rows_ && a.fallback_ == b.fallback_;
  }

 private:
  std::strong_ordering compare_fallback(const Monomial& a, const Monomial& b) const;

  std::size_t arity_;
  std::vector<WeightVector> rows_;
  Fallback fallback_;
  // Rows scaled to integers; fast path when every entry fits in 62 bits.
  std::vector<std::vector<std::int64_t>> small_rows_;
  std::vector<IntVector> big_rows_;
  bool small_ = true;
};

/// The unique order-maximal term. Throws DomainError on zero.
Term leading_term(const Polynomial& f, const MatrixTermOrder& order);

}  // namespace gfk
