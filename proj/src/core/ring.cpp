#include "gfk/ring.hpp"

#include <cctype>
#include <set>

#include "gfk/errors.hpp"

namespace gfk {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial result(ring_.arity());
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term() * Rational(sign);
      skip_ws();
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Rational coeff = 1;
    std::vector<Monomial::Exponent> exps(ring_.arity(), 0);
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num(read_digits());
        Integer den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
          den = Integer(read_digits());
          if (den == 0) fail("zero denominator");
        }
        coeff *= Rational(num, den);
        coeff.canonicalize();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto idx = ring_.index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          std::string digits = read_digits();
          if (digits.size() > 9) fail("exponent too large");
          e = std::stol(digits);
        }
        exps[*idx] += static_cast<Monomial::Exponent>(e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) fail("dangling '*'");
        continue;
      }
      if (at_end() || peek() == '+' || peek() == '-') break;
    }
    if (!any) fail("expected a term");
    return Polynomial::term(Monomial(std::move(exps)), coeff);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DimensionError("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw ParseError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate variable name '" + n + "'");
  }
}

Ring Ring::standard(std::size_t arity) {
  static const std::vector<std::string> kLetters = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  if (arity <= kLetters.size()) {
    names.assign(kLetters.begin(), kLetters.begin() + static_cast<std::ptrdiff_t>(arity));
  } else {
    for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  }
  return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Polynomial Ring::parse(std::string_view text) const { return PolyParser(*this, text).parse(); }

std::string Ring::format(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Ring::format(const Polynomial& f) const {
  if (f.arity() != arity()) throw DimensionError("polynomial arity differs from ring arity");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = t.coefficient < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Rational mag = abs(t.coefficient);
    if (t.monomial.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += format(t.monomial);
    }
  }
  return out;
}

std::string Ring::header() const {
  std::string out = "ring: ";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
  return out;
}

Ring Ring::parse_header(std::string_view line) {
  line = trim(line);
  constexpr std::string_view kPrefix = "ring:";
  if (line.substr(0, kPrefix.size()) != kPrefix) throw ParseError("expected 'ring:' header");
  line.remove_prefix(kPrefix.size());
  std::vector<std::string> names;
  while (true) {
    auto comma = line.find(',');
    names.emplace_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return Ring(std::move(names));
}

Ring Ring::without(std::size_t index) const {
  auto names = names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  return Ring(std::move(names));
}

Ring Ring::with_inserted(std::size_t index, std::string name) const {
  auto names = names_;
  names.insert(names.begin() + static_cast<std::ptrdiff_t>(index), std::move(name));
  return Ring(std::move(names));
}

}  // namespace gfk
