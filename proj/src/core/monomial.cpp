#include "gfk/monomial.hpp"

#include <algorithm>
#include <limits>

#include "gfk/errors.hpp"

namespace gfk {

namespace {

void check_arity(const Monomial& a, const Monomial& b) {
  if (a.arity() != b.arity())
    throw DimensionError("monomials of arity " + std::to_string(a.arity()) + " and " +
                         std::to_string(b.arity()));
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0) throw DomainError("negative exponent in monomial");
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

std::int64_t Monomial::degree() const noexcept {
  std::int64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_arity(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_arity(*this, other);
  Monomial out(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > std::numeric_limits<Exponent>::max() - other.exps_[i])
      throw DomainError("exponent overflow in monomial product");
    out.exps_[i] = exps_[i] + other.exps_[i];
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw DomainError("monomial quotient is not exact");
  Monomial out(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = exps_[i] - divisor.exps_[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return out;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_arity(a, b);
  Monomial out(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return out;
}

}  // namespace gfk
