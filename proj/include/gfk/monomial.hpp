#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace gfk {

/// Exponent vector x^a of a fixed-arity ring. Ordering via <=> is
/// lexicographic with x1 > x2 > ... > xr.
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps);

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::int64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// True when this divides other.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

}  // namespace gfk
