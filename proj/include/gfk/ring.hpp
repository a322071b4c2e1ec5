#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfk/polynomial.hpp"

namespace gfk {

/// Variable names of a polynomial ring; index order is x1, ..., xr.
/// Owns the text grammar: terms joined by + or -, optional integer or p/q
/// coefficient, optional * between factors, ^ for exponents.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  /// Default names: x,y,z for r <= 3, x,y,z,w for r = 4, x1..xr otherwise.
  static Ring standard(std::size_t arity);

  std::size_t arity() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Polynomial parse(std::string_view text) const;
  /// Terms in descending lex order, e.g. `x^3 - y*z^2`; zero prints as `0`.
  std::string format(const Polynomial& f) const;
  std::string format(const Monomial& m) const;

  /// `ring: x,y,z`
  std::string header() const;
  static Ring parse_header(std::string_view line);

  Ring without(std::size_t index) const;
  Ring with_inserted(std::size_t index, std::string name) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace gfk
