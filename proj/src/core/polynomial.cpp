#include "gfk/polynomial.hpp"

#include <algorithm>
#include <map>

#include "gfk/errors.hpp"

namespace gfk {

namespace {

void check_arity(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionError("polynomials of arity " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Polynomial Polynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& t : terms) {
    if (t.monomial.arity() != arity) throw DimensionError("term arity differs from ring arity");
    Rational c = t.coefficient;
    c.canonicalize();
    acc[t.monomial] += c;
  }
  Polynomial p(arity);
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p(arity);
  if (c != 0) {
    p.terms_.push_back({Monomial(arity), c});
    p.terms_.back().coefficient.canonicalize();
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  std::vector<Monomial::Exponent> e(arity, 0);
  e.at(index) = 1;
  return term(Monomial(std::move(e)));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.arity());
  if (c != 0) {
    p.terms_.push_back({m, c});
    p.terms_.back().coefficient.canonicalize();
  }
  return p;
}

Polynomial Polynomial::binomial(const Monomial& a, const Monomial& b) {
  return term(a) - term(b);
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, int sign) {
  check_arity(arity_, other.arity_);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back({b->monomial, sign > 0 ? b->coefficient : Rational(-b->coefficient)});
      ++b;
    } else {
      Rational c = sign > 0 ? Rational(a->coefficient + b->coefficient)
                            : Rational(a->coefficient - b->coefficient);
      if (c != 0) out.push_back({std::move(a->monomial), c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) { return add_scaled(other, 1); }

Polynomial& Polynomial::operator-=(const Polynomial& other) { return add_scaled(other, -1); }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  check_arity(arity_, m.arity());
  Polynomial p(arity_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves lex order.
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient * c});
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_arity(a.arity_, b.arity_);
  Polynomial out(a.arity_);
  for (const auto& t : b.terms_) out += a.times(t.monomial, t.coefficient);
  return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.monomial != t.monomial) return s.monomial < t.monomial;
    if (s.coefficient != t.coefficient) return s.coefficient < t.coefficient;
  }
  return a.terms_.size() < b.terms_.size();
}

Polynomial initial_form(const Polynomial& f, const RatVector& w) {
  if (f.is_zero()) throw DomainError("initial form of the zero polynomial");
  if (w.size() != f.arity()) throw DimensionError("weight vector length differs from ring arity");
  std::vector<Rational> weights;
  weights.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * t.monomial[i];
    weights.push_back(s);
  }
  const Rational best = *std::max_element(weights.begin(), weights.end());
  std::vector<Term> kept;
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == best) kept.push_back(f.terms()[i]);
  return Polynomial::from_terms(f.arity(), std::move(kept));
}

Polynomial homogenize(const Polynomial& f, std::size_t hom_var_index) {
  if (hom_var_index > f.arity()) throw DimensionError("homogenizing index outside the target ring");
  const auto d = f.total_degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto e = std::vector<Monomial::Exponent>(t.monomial.exponents().begin(), t.monomial.exponents().end());
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(hom_var_index),
             static_cast<Monomial::Exponent>(d - t.monomial.degree()));
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(f.arity() + 1, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, std::size_t var_index) {
  if (var_index >= f.arity()) throw DimensionError("dehomogenizing index outside the ring");
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto e = std::vector<Monomial::Exponent>(t.monomial.exponents().begin(), t.monomial.exponents().end());
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(var_index));
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(f.arity() - 1, std::move(terms));
}

Polynomial normalize_lex_sign(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * Rational(1 / f.terms().front().coefficient);
}

}  // namespace gfk
