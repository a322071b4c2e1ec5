#pragma once

#include <cstddef>
#include <vector>

#include "gfk/arith.hpp"
#include "gfk/monomial.hpp"

namespace gfk {

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with rational coefficients. Terms are stored in
/// strictly descending lexicographic order with no zero coefficients, so
/// structural equality is polynomial equality. Term orders other than lex
/// are applied by the Gröbner engine on explicitly re-sorted copies.
class Polynomial {
 public:
  explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

  /// Combines like terms and drops zeros; terms may come in any order.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms);
  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c = 1);
  /// x^a - x^b.
  static Polynomial binomial(const Monomial& a, const Monomial& b);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  std::int64_t total_degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Multiplication by a term c*x^m.
  Polynomial times(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Arbitrary but fixed total order, for canonical sorting of sets.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial& add_scaled(const Polynomial& other, int sign);

  std::size_t arity_;
  std::vector<Term> terms_;
};

/// Sub-sum of the terms of maximal weight <w, a>. Throws DomainError on zero.
Polynomial initial_form(const Polynomial& f, const RatVector& w);

/// Inserts a new variable at hom_var_index and multiplies each term by the
/// power of it that reaches the total degree of f.
Polynomial homogenize(const Polynomial& f, std::size_t hom_var_index);

/// Sets variable var_index to 1 and removes it from the ring.
Polynomial dehomogenize(const Polynomial& f, std::size_t var_index);

/// Divides by the coefficient of the lexicographically largest term.
Polynomial normalize_lex_sign(const Polynomial& f);

}  // namespace gfk
