#include "gfk/io.hpp"

#include <cctype>
#include <sstream>
#include <type_traits>

#include "gfk/errors.hpp"

namespace gfk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Nonempty, non-comment lines, trimmed.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(std::string_view w, const char* what) {
  if (w.empty() || w.size() > 9) throw ParseError(std::string("bad ") + what + " '" + std::string(w) + "'");
  std::size_t v = 0;
  for (char c : w) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("bad ") + what + " '" + std::string(w) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

RatVector parse_row(std::string_view line, std::size_t dim) {
  auto ws = words(line);
  if (ws.size() != dim)
    throw ParseError("expected " + std::to_string(dim) + " entries in row '" + std::string(line) + "'");
  RatVector v;
  for (auto w : ws) v.push_back(parse_rational(w));
  return v;
}

IntVector parse_int_row(std::string_view line, std::size_t dim) {
  IntVector out;
  for (const auto& x : parse_row(line, dim)) {
    if (x.get_den() != 1) throw ParseError("expected integer entries in row '" + std::string(line) + "'");
    out.push_back(x.get_num());
  }
  return out;
}

template <class V>
std::string join(const V& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    if constexpr (std::is_same_v<typename V::value_type, std::size_t>)
      out += std::to_string(v[i]);
    else
      out += to_string(v[i]);
  }
  return out;
}

std::string_view header_value(std::string_view line, std::string_view key) {
  if (line.substr(0, key.size()) != key) throw ParseError("expected '" + std::string(key) + "' line");
  return trim(line.substr(key.size()));
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty ideal file");
  Ring ring = Ring::parse_header(lines.front());
  std::vector<Polynomial> gens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Polynomial f = ring.parse(lines[i]);
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  if (gens.empty()) throw ParseError("ideal file has no nonzero generators");
  Ideal ideal(ring.arity(), std::move(gens));
  return {std::move(ring), std::move(ideal)};
}

std::string format_ideal_file(const Ring& ring, const Ideal& ideal) {
  std::string out = ring.header() + "\n";
  for (const auto& g : ideal.generators()) out += ring.format(g) + "\n";
  return out;
}

std::string format_fan(const Fan& fan) {
  std::ostringstream out;
  out << "ambient_dim: " << fan.ambient_dim() << "\n";
  out << "lattice:\n";
  for (const auto& row : fan.lattice().basis()) out << join(row) << "\n";
  out << "lineality:\n";
  for (const auto& row : fan.lineality()) out << join(row) << "\n";
  out << "rays:\n";
  for (const auto& row : fan.rays()) out << join(row) << "\n";
  out << "maximal_cones:\n";
  for (const auto& idx : fan.cone_rays()) out << (idx.empty() ? "none" : join(idx)) << "\n";
  out << "fvector: " << join(fan.f_vector()) << "\n";
  return out.str();
}

Fan parse_fan(std::string_view text) {
  auto lines = content_lines(text);
  std::size_t pos = 0;
  auto next = [&]() -> std::string_view {
    if (pos >= lines.size()) throw ParseError("fan file ends early");
    return lines[pos++];
  };
  auto at = [&](std::string_view key) { return pos < lines.size() && lines[pos].substr(0, key.size()) == key; };

  const std::size_t dim = parse_index(header_value(next(), "ambient_dim:"), "ambient_dim");
  if (dim == 0) throw ParseError("ambient_dim must be positive");
  if (next() != "lattice:") throw ParseError("expected 'lattice:'");
  RatMatrix basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(parse_row(next(), dim));
  if (next() != "lineality:") throw ParseError("expected 'lineality:'");
  IntMatrix lineality;
  while (!at("rays:")) lineality.push_back(parse_int_row(next(), dim));
  ++pos;
  IntMatrix rays;
  while (!at("maximal_cones:")) rays.push_back(parse_int_row(next(), dim));
  ++pos;
  std::vector<RationalCone> cones;
  while (!at("fvector:")) {
    std::string_view line = next();
    IntMatrix gens;
    if (line != "none")
      for (auto w : words(line)) {
        std::size_t i = parse_index(w, "ray index");
        if (i >= rays.size()) throw ParseError("ray index " + std::to_string(i) + " out of range");
        gens.push_back(rays[i]);
      }
    cones.push_back(RationalCone::from_generators(dim, gens, lineality));
  }
  std::string_view fv_line = header_value(next(), "fvector:");
  if (pos != lines.size()) throw ParseError("trailing content after 'fvector:'");
  if (cones.empty()) throw ParseError("fan file lists no maximal cones");

  AmbientLattice lattice(dim, basis);
  if (lattice.basis() != basis) throw ParseError("lattice basis is not in Hermite normal form");
  Fan fan(std::move(lattice), std::move(cones));
  std::vector<std::size_t> fv;
  for (auto w : words(fv_line)) fv.push_back(parse_index(w, "fvector entry"));
  if (fv != fan.f_vector()) throw ParseError("fvector line does not match the cones");
  return fan;
}

std::string format_bases(const Ring& ring, const GroebnerFan& fan) {
  if (ring.arity() != fan.ideal.arity()) throw DimensionError("ring arity differs from the fan's ideal");
  std::string out = ring.header() + "\n";
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    if (!(fan.fan.cones()[i] == fan.cones[i].cone)) throw IntegrityError("fan cones are out of step with their bases");
    const auto& idx = fan.fan.cone_rays()[i];
    out += "cone: " + (idx.empty() ? std::string("none") : join(idx)) + "\n";
    for (const auto& g : fan.cones[i].basis.canonical_elements()) out += ring.format(g) + "\n";
  }
  return out;
}

}  // namespace gfk
