#include "gfk/term_order.hpp"

#include "gfk/errors.hpp"

namespace gfk {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

}  // namespace

MatrixTermOrder::MatrixTermOrder(std::size_t arity, std::vector<WeightVector> rows, Fallback fallback)
    : arity_(arity), rows_(std::move(rows)), fallback_(fallback) {
  for (const auto& row : rows_) {
    if (row.size() != arity_)
      throw DimensionError("weight row of length " + std::to_string(row.size()) + " for arity " +
                           std::to_string(arity_));
    // Positive scaling keeps the order of a row unchanged.
    IntVector scaled = primitive(row);
    big_rows_.push_back(scaled);
    for (const auto& x : scaled)
      if (abs(x) >= kSmallLimit) small_ = false;
  }
  if (small_)
    for (const auto& row : big_rows_) {
      std::vector<std::int64_t> r;
      for (const auto& x : row) r.push_back(x.get_si());
      small_rows_.push_back(std::move(r));
    }
}

MatrixTermOrder MatrixTermOrder::refined_by(const std::vector<WeightVector>& leading) const {
  std::vector<WeightVector> rows = leading;
  rows.insert(rows.end(), rows_.begin(), rows_.end());
  return MatrixTermOrder(arity_, std::move(rows), fallback_);
}

std::strong_ordering MatrixTermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != arity_ || b.arity() != arity_)
    throw DimensionError("monomial arity differs from term order arity " + std::to_string(arity_));
  if (small_) {
    for (const auto& row : small_rows_) {
      __int128 s = 0;
      for (std::size_t i = 0; i < arity_; ++i)
        s += static_cast<__int128>(row[i]) * (static_cast<std::int64_t>(a[i]) - b[i]);
      if (s != 0) return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  } else {
    Integer s;
    for (const auto& row : big_rows_) {
      s = 0;
      for (std::size_t i = 0; i < arity_; ++i) s += row[i] * (static_cast<long>(a[i]) - b[i]);
      if (s != 0) return s > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return compare_fallback(a, b);
}

std::strong_ordering MatrixTermOrder::compare_fallback(const Monomial& a, const Monomial& b) const {
  if (fallback_ == Fallback::Lex) return a <=> b;
  auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  // Smaller exponent in the last differing variable is larger.
  for (std::size_t i = arity_; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

bool MatrixTermOrder::is_term_order() const {
  for (std::size_t i = 0; i < arity_; ++i) {
    for (const auto& row : big_rows_) {
      if (row[i] < 0) return false;
      if (row[i] > 0) break;
    }
  }
  return true;
}

Term leading_term(const Polynomial& f, const MatrixTermOrder& order) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.monomial, best->monomial) > 0) best = &t;
  return *best;
}

}  // namespace gfk
