#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gfk/polynomial.hpp"
#include "gfk/term_order.hpp"

namespace gfk {

/// Ideal given by a nonempty list of nonzero generators.
class Ideal {
 public:
  Ideal(std::size_t arity, std::vector<Polynomial> generators);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// Every generator has terms of a single degree.
  bool is_homogeneous() const noexcept { return homogeneous_; }
  /// Every generator is a monomial. For generators forming a reduced basis
  /// (as returned by initial_ideal) this decides whether the ideal is
  /// monomial.
  bool is_monomial() const;

 private:
  std::size_t arity_;
  std::vector<Polynomial> generators_;
  bool homogeneous_;
};

/// Monic basis paired with the order it is a Gröbner basis for. Reduced
/// bases are sorted by ascending leading monomial under their order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Polynomial> elements, MatrixTermOrder order, bool reduced);

  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const MatrixTermOrder& order() const noexcept { return order_; }
  bool is_reduced() const noexcept { return reduced_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t arity() const noexcept { return order_.arity(); }

  const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
  std::int64_t max_degree() const;

  /// Elements sorted by Polynomial::operator<, independent of the order.
  std::vector<Polynomial> canonical_elements() const;
  /// Same polynomial set, regardless of the order that produced it.
  bool same_elements(const GroebnerBasis& other) const;

  Ideal ideal() const { return Ideal(arity(), elements_); }

 private:
  std::vector<Polynomial> elements_;
  MatrixTermOrder order_;
  bool reduced_;
  std::vector<Monomial> leading_;
};

/// Remainder of f on division by `basis`: no term of the result is divisible
/// by a leading monomial of the basis. When several leading monomials divide
/// the current term the lowest index wins.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MatrixTermOrder& order);

/// (lcm/lt(f)) f - (lcm/lt(g)) g, with lt including the coefficient.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MatrixTermOrder& order);

enum class PairSelection {
  Normal,  // smallest lcm under the active order
  Fifo,    // creation order
};

struct BuchbergerOptions {
  PairSelection selection = PairSelection::Normal;
  /// Coprime leading monomials and chain criterion.
  bool use_criteria = true;
};

/// Monic Gröbner basis (not yet reduced).
GroebnerBasis buchberger(const Ideal& ideal, const MatrixTermOrder& order, const BuchbergerOptions& options = {});

/// The unique reduced monic basis of the same ideal and order.
GroebnerBasis autoreduce(const GroebnerBasis& basis);

GroebnerBasis reduced_basis(const Ideal& ideal, const MatrixTermOrder& order,
                            const BuchbergerOptions& options = {});

/// Order <_w realized as [w] + fallback. Homogeneous ideals accept any w and
/// get a leading all-ones row, which is constant on their homogeneous
/// components. Other ideals require w >= 0 (RegionError otherwise).
MatrixTermOrder weight_order(const Ideal& ideal, const WeightVector& w, const MatrixTermOrder& fallback);

/// Ideal generated by in_w(g) for g in the reduced basis w.r.t. <_w.
Ideal initial_ideal(const Ideal& ideal, const WeightVector& w, const MatrixTermOrder& fallback);

/// I : (prod of `variables`)^infinity by eliminating one auxiliary variable.
/// The result's generators are its reduced graded reverse lex basis.
Ideal saturate(const Ideal& ideal, std::span<const std::size_t> variables);

/// Number of standard monomials of degree d for the given leading monomials.
std::uint64_t count_standard_monomials(std::span<const Monomial> leading, std::size_t arity, std::int64_t degree);

/// Degree of the zero-dimensional projective scheme of a homogeneous ideal,
/// i.e. the constant Hilbert polynomial. Throws DimensionError when the
/// projective zero set has positive dimension.
std::uint64_t count_points(const Ideal& ideal);

/// count_points of I : (x1 ... xr)^infinity, i.e. the length of the part of
/// the zero set inside the torus. Binomial ideals such as <x^3 - y*z^2,
/// x^2*y - z^3> can also vanish on coordinate subspaces; those points are
/// not counted here.
std::uint64_t count_torus_points(const Ideal& ideal);

}  // namespace gfk
