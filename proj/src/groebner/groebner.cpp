#include "gfk/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "gfk/errors.hpp"

namespace gfk {

namespace {

// Terms sorted descending under an explicit order.
using SortedTerms = std::vector<Term>;

SortedTerms sort_by(const Polynomial& f, const MatrixTermOrder& order) {
  SortedTerms t = f.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  return t;
}

Polynomial to_polynomial(std::size_t arity, SortedTerms terms) {
  return Polynomial::from_terms(arity, std::move(terms));
}

// f - c * x^m * g, where f and g are sorted under order.
SortedTerms subtract_multiple(const SortedTerms& f, const Rational& c, const Monomial& m, const SortedTerms& g,
                              const MatrixTermOrder& order) {
  SortedTerms out;
  out.reserve(f.size() + g.size());
  auto a = f.begin();
  auto b = g.begin();
  Monomial bm;
  bool have_bm = false;
  while (a != f.end() || b != g.end()) {
    if (b != g.end() && !have_bm) {
      bm = b->monomial * m;
      have_bm = true;
    }
    std::strong_ordering cmp = a == f.end()   ? std::strong_ordering::less
                               : b == g.end() ? std::strong_ordering::greater
                                              : order.compare(a->monomial, bm);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back({bm, Rational(-c * b->coefficient)});
      ++b;
      have_bm = false;
    } else {
      Rational coeff = a->coefficient - c * b->coefficient;
      if (coeff != 0) out.push_back({bm, coeff});
      ++a;
      ++b;
      have_bm = false;
    }
  }
  return out;
}

void make_monic(SortedTerms& f) {
  if (f.empty() || f.front().coefficient == 1) return;
  Rational inv = 1 / f.front().coefficient;
  for (auto& t : f) t.coefficient *= inv;
}

SortedTerms reduce_sorted(SortedTerms p, const std::vector<SortedTerms>& basis, const MatrixTermOrder& order) {
  SortedTerms remainder;
  while (!p.empty()) {
    const Term& lt = p.front();
    const SortedTerms* divisor = nullptr;
    for (const auto& g : basis)
      if (g.front().monomial.divides(lt.monomial)) {
        divisor = &g;
        break;
      }
    if (divisor) {
      Rational c = lt.coefficient / divisor->front().coefficient;
      Monomial m = lt.monomial / divisor->front().monomial;
      p = subtract_multiple(p, c, m, *divisor, order);
    } else {
      remainder.push_back(std::move(p.front()));
      p.erase(p.begin());
    }
  }
  return remainder;
}

SortedTerms s_poly_sorted(const SortedTerms& f, const SortedTerms& g, const MatrixTermOrder& order) {
  const Monomial l = lcm(f.front().monomial, g.front().monomial);
  // (l/lt f) f - (l/lt g) g
  SortedTerms left = subtract_multiple({}, Rational(-1 / f.front().coefficient), l / f.front().monomial, f, order);
  return subtract_multiple(left, Rational(1 / g.front().coefficient), l / g.front().monomial, g, order);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t serial;
};

}  // namespace

Ideal::Ideal(std::size_t arity, std::vector<Polynomial> generators)
    : arity_(arity), generators_(std::move(generators)), homogeneous_(true) {
  if (generators_.empty()) throw DomainError("an ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (g.arity() != arity_) throw DimensionError("generator arity differs from ideal arity");
    if (g.is_zero()) throw DomainError("ideal generators must be nonzero");
    homogeneous_ = homogeneous_ && g.is_homogeneous();
  }
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> elements, MatrixTermOrder order, bool reduced)
    : elements_(std::move(elements)), order_(std::move(order)), reduced_(reduced) {
  for (const auto& g : elements_) {
    if (g.arity() != order_.arity()) throw DimensionError("basis element arity differs from order arity");
    leading_.push_back(leading_term(g, order_).monomial);
  }
}

std::int64_t GroebnerBasis::max_degree() const {
  std::int64_t d = 0;
  for (const auto& g : elements_) d = std::max(d, g.total_degree());
  return d;
}

std::vector<Polynomial> GroebnerBasis::canonical_elements() const {
  auto out = elements_;
  std::sort(out.begin(), out.end());
  return out;
}

bool GroebnerBasis::same_elements(const GroebnerBasis& other) const {
  return canonical_elements() == other.canonical_elements();
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MatrixTermOrder& order) {
  std::vector<SortedTerms> sorted;
  for (const auto& g : basis) {
    if (g.is_zero()) throw DomainError("division by the zero polynomial");
    sorted.push_back(sort_by(g, order));
  }
  return to_polynomial(f.arity(), reduce_sorted(sort_by(f, order), sorted, order));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MatrixTermOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("S-polynomial of the zero polynomial");
  return to_polynomial(f.arity(), s_poly_sorted(sort_by(f, order), sort_by(g, order), order));
}

GroebnerBasis buchberger(const Ideal& ideal, const MatrixTermOrder& order, const BuchbergerOptions& options) {
  if (ideal.arity() != order.arity()) throw DimensionError("ideal and order have different arity");
  std::vector<SortedTerms> basis;
  for (const auto& g : ideal.generators()) {
    basis.push_back(sort_by(g, order));
    make_monic(basis.back());
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;
  std::uint64_t serial = 0;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pending.push_back({i, j, lcm(basis[i].front().monomial, basis[j].front().monomial), serial++});
      pending_keys.insert({i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending_keys.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    auto pick = pending.begin();
    if (options.selection == PairSelection::Normal) {
      for (auto it = pending.begin(); it != pending.end(); ++it) {
        auto cmp = order.compare(it->lcm, pick->lcm);
        if (cmp < 0 || (cmp == 0 && it->serial < pick->serial)) pick = it;
      }
    }
    const Pair pair = *pick;
    pending.erase(pick);
    pending_keys.erase({pair.i, pair.j});

    if (options.use_criteria) {
      const Monomial& li = basis[pair.i].front().monomial;
      const Monomial& lj = basis[pair.j].front().monomial;
      if (gcd(li, lj).is_one()) continue;
      bool chain = false;
      for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
        if (k == pair.i || k == pair.j) continue;
        chain = basis[k].front().monomial.divides(pair.lcm) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
      }
      if (chain) continue;
    }

    SortedTerms h = reduce_sorted(s_poly_sorted(basis[pair.i], basis[pair.j], order), basis, order);
    if (h.empty()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
    add_pairs_for(basis.size() - 1);
  }

  std::vector<Polynomial> elements;
  for (auto& g : basis) elements.push_back(to_polynomial(ideal.arity(), std::move(g)));
  return GroebnerBasis(std::move(elements), order, false);
}

GroebnerBasis autoreduce(const GroebnerBasis& input) {
  const auto& order = input.order();
  std::vector<SortedTerms> sorted;
  for (const auto& g : input.elements())
    if (!g.is_zero()) sorted.push_back(sort_by(g, order));
  std::sort(sorted.begin(), sorted.end(), [&](const SortedTerms& a, const SortedTerms& b) {
    return order.compare(a.front().monomial, b.front().monomial) < 0;
  });

  // Minimal basis: drop elements whose leading monomial is divisible by an
  // earlier (smaller or equal) one.
  std::vector<SortedTerms> minimal;
  for (auto& g : sorted) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const SortedTerms& h) {
      return h.front().monomial.divides(g.front().monomial);
    });
    if (!redundant) minimal.push_back(std::move(g));
  }

  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SortedTerms> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    SortedTerms r = reduce_sorted(minimal[i], others, order);
    make_monic(r);
    reduced.push_back(to_polynomial(input.arity(), std::move(r)));
  }
  return GroebnerBasis(std::move(reduced), order, true);
}

GroebnerBasis reduced_basis(const Ideal& ideal, const MatrixTermOrder& order, const BuchbergerOptions& options) {
  return autoreduce(buchberger(ideal, order, options));
}

MatrixTermOrder weight_order(const Ideal& ideal, const WeightVector& w, const MatrixTermOrder& fallback) {
  if (w.size() != ideal.arity()) throw DimensionError("weight vector length differs from ring arity");
  if (ideal.is_homogeneous()) return fallback.refined_by({WeightVector(ideal.arity(), Rational(1)), w});
  for (const auto& x : w)
    if (x < 0) throw RegionError("weight vectors for non-homogeneous ideals must be non-negative");
  return fallback.refined_by(w);
}

Ideal initial_ideal(const Ideal& ideal, const WeightVector& w, const MatrixTermOrder& fallback) {
  GroebnerBasis gb = reduced_basis(ideal, weight_order(ideal, w, fallback));
  std::vector<Polynomial> forms;
  for (const auto& g : gb.elements()) forms.push_back(initial_form(g, w));
  return Ideal(ideal.arity(), std::move(forms));
}

Ideal saturate(const Ideal& ideal, std::span<const std::size_t> variables) {
  const std::size_t n = ideal.arity();
  const std::size_t t = n;  // auxiliary variable index
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      std::vector<Monomial::Exponent> e(term.monomial.exponents().begin(), term.monomial.exponents().end());
      e.push_back(0);
      terms.push_back({Monomial(std::move(e)), term.coefficient});
    }
    gens.push_back(Polynomial::from_terms(n + 1, std::move(terms)));
  }
  std::vector<Monomial::Exponent> e(n + 1, 0);
  e[t] = 1;
  for (std::size_t v : variables) {
    if (v >= n) throw DimensionError("saturating variable index outside the ring");
    e[v] += 1;
  }
  gens.push_back(Polynomial::term(Monomial(std::move(e))) - Polynomial::constant(n + 1, 1));

  WeightVector elim(n + 1, Rational(0));
  elim[t] = 1;
  MatrixTermOrder order(n + 1, {elim}, Fallback::GrevLex);
  GroebnerBasis gb = reduced_basis(Ideal(n + 1, std::move(gens)), order);

  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [&](const Term& term) { return term.monomial[t] != 0; });
    if (!has_t) kept.push_back(dehomogenize(g, t));
  }
  GroebnerBasis result = reduced_basis(Ideal(n, std::move(kept)), MatrixTermOrder::grevlex(n));
  return result.ideal();
}

std::uint64_t count_standard_monomials(std::span<const Monomial> leading, std::size_t arity, std::int64_t degree) {
  if (degree < 0) return 0;
  std::uint64_t count = 0;
  std::vector<Monomial::Exponent> e(arity, 0);
  // Enumerate compositions of `degree` into `arity` parts.
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i + 1 == arity) {
      e[i] = static_cast<Monomial::Exponent>(left);
      Monomial m(e);
      bool standard = std::none_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
      if (standard) ++count;
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      e[i] = static_cast<Monomial::Exponent>(k);
      self(self, i + 1, left - k);
    }
  };
  if (arity == 0) return degree == 0 ? 1 : 0;
  rec(rec, 0, degree);
  return count;
}

std::uint64_t count_points(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("point counting requires a homogeneous ideal");
  const std::size_t n = ideal.arity();
  if (n > 20) throw CapabilityError("point counting supports at most 20 variables");
  GroebnerBasis gb = reduced_basis(ideal, MatrixTermOrder::grevlex(n));
  const auto& leading = gb.leading_monomials();

  // Krull dimension of S/in(I): largest variable set containing the support
  // of no leading monomial.
  std::size_t krull = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool free_set = std::none_of(leading.begin(), leading.end(), [&](const Monomial& l) {
      for (std::size_t i = 0; i < n; ++i)
        if (l[i] != 0 && !(mask >> i & 1u)) return false;
      return true;
    });
    if (free_set) krull = std::max<std::size_t>(krull, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  if (krull > 1)
    throw DimensionError("projective zero set has dimension " + std::to_string(krull - 1) + ", expected 0");
  if (krull == 0) return 0;

  // Hilbert function equals the Hilbert polynomial from degree
  // deg(lcm of leading monomials) - n + 1 on.
  Monomial all(n);
  for (const auto& l : leading) all = lcm(all, l);
  const std::int64_t d0 = std::max<std::int64_t>(all.degree() - static_cast<std::int64_t>(n) + 1, 0);
  const std::uint64_t h0 = count_standard_monomials(leading, n, d0);
  const std::uint64_t h1 = count_standard_monomials(leading, n, d0 + 1);
  if (h0 != h1) throw IntegrityError("Hilbert function not constant past the regularity bound");
  return h0;
}

std::uint64_t count_torus_points(const Ideal& ideal) {
  std::vector<std::size_t> all(ideal.arity());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return count_points(saturate(ideal, all));
}

}  // namespace gfk
