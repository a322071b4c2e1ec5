#include "gfk/orbit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"

namespace gfk {

namespace {

constexpr std::uint64_t kMaxGroupOrder = 1'000'000;

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "' in group '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::string format_weights(const std::vector<std::int64_t>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

}  // namespace

GroupSpec::GroupSpec(std::size_t arity, std::vector<GroupGenerator> generators)
    : arity_(arity), generators_(std::move(generators)), exponent_(1) {
  if (arity_ < 2) throw DimensionError("a group needs at least two coordinates to act on");
  if (generators_.empty()) throw DomainError("a group needs at least one generator");
  for (auto& g : generators_) {
    if (g.order <= 0) throw DomainError("generator order must be positive");
    if (g.weights.size() != arity_)
      throw DimensionError("generator has " + std::to_string(g.weights.size()) + " weights, expected " +
                           std::to_string(arity_));
    for (auto& a : g.weights) a = ((a % g.order) + g.order) % g.order;
    exponent_ = std::lcm(exponent_, g.order);
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<GroupGenerator> gens;
  std::size_t arity = 0;
  for (auto part : split(text, ';')) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("generator '" + std::string(part) + "' must look like m:a1,...,ar");
    GroupGenerator g{parse_int(part.substr(0, colon), text), {}};
    for (auto w : split(part.substr(colon + 1), ',')) g.weights.push_back(parse_int(w, text));
    if (arity != 0 && g.weights.size() != arity) throw ParseError("generators have different lengths");
    arity = g.weights.size();
    gens.push_back(std::move(g));
  }
  return GroupSpec(arity, std::move(gens));
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (j) out += ';';
    out += std::to_string(generators_[j].order) + ':';
    for (std::size_t i = 0; i < arity_; ++i) out += (i ? "," : "") + std::to_string(generators_[j].weights[i]);
  }
  return out;
}

std::vector<std::vector<std::int64_t>> GroupSpec::elements() const {
  std::vector<std::vector<std::int64_t>> steps;
  for (const auto& g : generators_) {
    std::vector<std::int64_t> s;
    for (auto a : g.weights) s.push_back(a * (exponent_ / g.order) % exponent_);
    steps.push_back(std::move(s));
  }
  std::set<std::vector<std::int64_t>> seen = {std::vector<std::int64_t>(arity_, 0)};
  std::vector<std::vector<std::int64_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& e : frontier)
      for (const auto& s : steps) {
        std::vector<std::int64_t> n(arity_);
        for (std::size_t i = 0; i < arity_; ++i) n[i] = (e[i] + s[i]) % exponent_;
        if (seen.insert(n).second) {
          if (seen.size() > kMaxGroupOrder) throw CapabilityError("group order exceeds 10^6");
          next.push_back(std::move(n));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool GroupSpec::acts_freely() const {
  for (const auto& e : elements()) {
    bool constant = std::all_of(e.begin(), e.end(), [&](std::int64_t x) { return x == e.front(); });
    bool zero = std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x == 0; });
    if (constant && !zero) return false;
  }
  return true;
}

void GroupSpec::require_free() const {
  for (const auto& e : elements()) {
    bool constant = std::all_of(e.begin(), e.end(), [&](std::int64_t x) { return x == e.front(); });
    if (constant && e.front() != 0)
      throw FreenessError("group " + to_string() + " does not act freely on the torus: element with weights " +
                          format_weights(e) + " mod " + std::to_string(exponent_) +
                          " is a nonidentity scalar matrix, which fixes every point of the torus");
  }
}

IntMatrix orbit_lattice(const GroupSpec& group) {
  group.require_free();
  const std::size_t r = group.arity(), g = group.generators().size();
  // Unknowns (u_1..u_r, k_1..k_g): a_j . u - m_j k_j = 0, sum u = 0.
  IntMatrix system;
  for (std::size_t j = 0; j < g; ++j) {
    IntVector row(r + g, Integer(0));
    for (std::size_t i = 0; i < r; ++i) row[i] = Integer(static_cast<long>(group.generators()[j].weights[i]));
    row[r + j] = Integer(static_cast<long>(-group.generators()[j].order));
    system.push_back(std::move(row));
  }
  IntVector sum(r + g, Integer(0));
  for (std::size_t i = 0; i < r; ++i) sum[i] = 1;
  system.push_back(std::move(sum));
  IntMatrix lattice;
  for (const auto& k : integer_kernel(system, r + g)) lattice.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(r));
  return hermite_normal_form(std::move(lattice));
}

Ideal lattice_ideal(const IntMatrix& lattice_basis, std::size_t arity) {
  std::vector<Polynomial> gens;
  for (const auto& u : lattice_basis) {
    if (u.size() != arity) throw DimensionError("lattice vector has the wrong length");
    std::vector<Monomial::Exponent> plus(arity, 0), minus(arity, 0);
    for (std::size_t i = 0; i < arity; ++i) {
      if (u[i] > 0) plus[i] = static_cast<Monomial::Exponent>(u[i].get_si());
      if (u[i] < 0) minus[i] = static_cast<Monomial::Exponent>(-u[i].get_si());
    }
    gens.push_back(Polynomial::binomial(Monomial(plus), Monomial(minus)));
  }
  if (gens.empty()) throw DomainError("the zero lattice has no lattice ideal generators");
  std::vector<std::size_t> all(arity);
  std::iota(all.begin(), all.end(), 0);
  return saturate(Ideal(arity, std::move(gens)), all);
}

IntMatrix chart_projection(std::size_t arity, std::size_t chart) {
  if (chart >= arity) throw DimensionError("chart index outside the ring");
  IntMatrix map;
  for (std::size_t j = 0; j < arity; ++j) {
    if (j == chart) continue;
    IntVector row(arity, Integer(0));
    row[j] = 1;
    row[chart] = -1;
    map.push_back(std::move(row));
  }
  return map;
}

QuotientLattice quotient_lattice(const GroupSpec& group, std::size_t chart) {
  const std::size_t r = group.arity();
  if (chart >= r) throw DimensionError("chart index outside the ring");
  IntMatrix dropped;
  for (const auto& u : orbit_lattice(group)) {
    IntVector v;
    for (std::size_t i = 0; i < r; ++i)
      if (i != chart) v.push_back(u[i]);
    dropped.push_back(std::move(v));
  }
  return {dual_lattice(dropped), chart_projection(r, chart), chart};
}

}  // namespace gfk
