#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gfk {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

/// Prints `p` or `p/q` in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts `p`, `-p`, `p/q`; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

RatVector to_rational(const IntVector& v);
RatMatrix to_rational(const IntMatrix& m);

/// Scales a rational vector to the unique primitive integer vector with the
/// same direction. The zero vector maps to the zero vector.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

IntVector from_ints(std::initializer_list<long> values);

}  // namespace gfk
