#include "gfk/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"

namespace gfk {

namespace {

using Bits = std::vector<std::uint64_t>;

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const Bits& a) {
  std::size_t n = 0;
  for (auto w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

struct DDRay {
  IntVector y;
  Bits zeros;
};

struct DualDescription {
  IntMatrix rays;       // extreme rays modulo lineality, orthogonal to it
  IntMatrix lineality;  // basis of the lineality space
};

IntMatrix to_int_rows(const RatMatrix& rows) {
  IntMatrix out;
  for (const auto& r : rows) out.push_back(primitive(r));
  return out;
}

// Extreme rays and lineality of {x : A x >= 0, E x = 0} by the double
// description method, run on a pointed cone in coordinates of the subspace
// ker E intersected with the orthogonal complement of the lineality space.
DualDescription double_description(std::size_t dim, const IntMatrix& ineqs, const IntMatrix& eqs) {
  if (dim > kMaxConeDimension)
    throw CapabilityError("cones of ambient dimension " + std::to_string(dim) + " exceed the supported bound " +
                          std::to_string(kMaxConeDimension));
  for (const auto& row : ineqs)
    if (row.size() != dim) throw DimensionError("inequality has the wrong length");
  for (const auto& row : eqs)
    if (row.size() != dim) throw DimensionError("equation has the wrong length");

  RatMatrix all = to_rational(ineqs);
  for (const auto& e : eqs) all.push_back(to_rational(e));
  DualDescription out;
  out.lineality = to_int_rows(nullspace(all, dim));

  RatMatrix constraints = to_rational(eqs);
  for (const auto& l : out.lineality) constraints.push_back(to_rational(l));
  IntMatrix basis = to_int_rows(nullspace(constraints, dim));
  const std::size_t m = basis.size();
  if (m == 0) return out;

  // Inequalities in subspace coordinates; x = sum_j y_j basis_j.
  IntMatrix a;
  for (const auto& row : ineqs) {
    IntVector r(m);
    for (std::size_t j = 0; j < m; ++j) r[j] = dot(row, basis[j]);
    if (!is_zero(r)) a.push_back(primitive(r));
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  const std::size_t n = a.size();
  const std::size_t words = (n + 63) / 64;

  // Initial simplicial cone from m independent inequalities.
  std::vector<std::size_t> chosen;
  RatMatrix chosen_rows;
  for (std::size_t i = 0; i < n && chosen.size() < m; ++i) {
    RatMatrix trial = chosen_rows;
    trial.push_back(to_rational(a[i]));
    if (rank(trial) == trial.size()) {
      chosen.push_back(i);
      chosen_rows = std::move(trial);
    }
  }
  if (chosen.size() != m) throw IntegrityError("lineality-free cone without a full-rank inequality system");
  RatMatrix inv = inverse(chosen_rows);
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < m; ++j) {
    RatVector col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = inv[i][j];
    DDRay r{primitive(col), Bits(words, 0)};
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) r.zeros[chosen[i] / 64] |= std::uint64_t{1} << (chosen[i] % 64);
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(n, false);
  for (auto i : chosen) done[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    done[i] = true;
    std::vector<Integer> val(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a[i], rays[r].y);
      any_negative = any_negative || val[r] < 0;
    }
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zeros[i / 64] |= bit;
      continue;
    }
    std::vector<DDRay> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zeros[w] & rays[q].zeros[w];
        if (m >= 2 && popcount(common) < m - 2) continue;
        bool adjacent = true;
        for (std::size_t s = 0; s < rays.size() && adjacent; ++s)
          if (s != p && s != q && subset(common, rays[s].zeros)) adjacent = false;
        if (!adjacent) continue;
        IntVector y(m);
        for (std::size_t j = 0; j < m; ++j) y[j] = val[p] * rays[q].y[j] - val[q] * rays[p].y[j];
        common[i / 64] |= bit;
        next.push_back({primitive(y), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      if (val[r] == 0) rays[r].zeros[i / 64] |= bit;
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  for (const auto& r : rays) {
    IntVector x(dim, Integer(0));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < dim; ++c) x[c] += r.y[j] * basis[j][c];
    out.rays.push_back(primitive(x));
  }
  return out;
}

IntMatrix canonical_rows(IntMatrix rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

// Component of v orthogonal to the row space of `basis` (rows independent).
RatVector orthogonal_part(const RatVector& v, const IntMatrix& basis) {
  if (basis.empty()) return v;
  RatMatrix b = to_rational(basis);
  const std::size_t k = b.size();
  RatMatrix gram(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = dot(v, b[i]);
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(b[i], b[j]);
  }
  RatVector coeff = times(rhs, transpose(inverse(gram)));
  RatVector out = v;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] -= coeff[i] * b[i][c];
  return out;
}

IntMatrix normalize_against(const IntMatrix& rows, const IntMatrix& subspace) {
  IntMatrix out;
  for (const auto& r : rows) {
    RatVector v = orthogonal_part(to_rational(r), subspace);
    if (!is_zero(v)) out.push_back(primitive(v));
  }
  return canonical_rows(std::move(out));
}

}  // namespace

IntMatrix RationalCone::identity(std::size_t dim) {
  IntMatrix id(dim, IntVector(dim, Integer(0)));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  return id;
}

RationalCone RationalCone::from_inequalities(std::size_t dim, const IntMatrix& halfspaces, const IntMatrix& equations) {
  DualDescription v = double_description(dim, halfspaces, equations);
  DualDescription h = double_description(dim, v.rays, v.lineality);
  RationalCone c;
  c.dim_ = dim;
  c.lineality_ = canonical_span_basis(to_rational(v.lineality), dim);
  c.equations_ = canonical_span_basis(to_rational(h.lineality), dim);
  c.rays_ = normalize_against(v.rays, c.lineality_);
  c.facets_ = normalize_against(h.rays, c.equations_);
  return c;
}

RationalCone RationalCone::from_generators(std::size_t dim, const IntMatrix& rays, const IntMatrix& lineality) {
  DualDescription h = double_description(dim, rays, lineality);
  IntMatrix eqs = h.lineality;
  return from_inequalities(dim, h.rays, eqs);
}

bool RationalCone::contains(const RatVector& v) const {
  if (v.size() != dim_) throw DimensionError("point has the wrong length");
  for (const auto& e : equations_)
    if (dot(v, e) != 0) return false;
  for (const auto& f : facets_)
    if (dot(v, f) < 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(to_rational(r))) return false;
  for (const auto& l : other.lineality_) {
    RatVector v = to_rational(l);
    if (!contains(v)) return false;
    for (auto& x : v) x = -x;
    if (!contains(v)) return false;
  }
  return true;
}

bool RationalCone::contains_in_relative_interior(const RatVector& v) const {
  if (v.size() != dim_) throw DimensionError("point has the wrong length");
  for (const auto& e : equations_)
    if (dot(v, e) != 0) return false;
  for (const auto& f : facets_)
    if (dot(v, f) <= 0) return false;
  return true;
}

RatVector RationalCone::relative_interior_point() const {
  RatVector p(dim_, Rational(0));
  for (const auto& r : rays_)
    for (std::size_t i = 0; i < dim_; ++i) p[i] += r[i];
  return p;
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  if (other.dim_ != dim_) throw DimensionError("intersecting cones of different ambient dimension");
  IntMatrix h = facets_, e = equations_;
  h.insert(h.end(), other.facets_.begin(), other.facets_.end());
  e.insert(e.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(dim_, h, e);
}

RationalCone RationalCone::face(const IntVector& normal) const {
  IntMatrix e = equations_;
  e.push_back(normal);
  return from_inequalities(dim_, facets_, e);
}

RationalCone RationalCone::minimal_face_containing(const RatVector& v) const {
  if (!contains(v)) throw DomainError("point outside the cone has no supporting face");
  IntMatrix e = equations_;
  for (const auto& f : facets_)
    if (dot(v, f) == 0) e.push_back(f);
  return from_inequalities(dim_, facets_, e);
}

bool RationalCone::is_face_of(const RationalCone& other) const {
  if (!other.contains(*this)) return false;
  return other.minimal_face_containing(relative_interior_point()) == *this;
}

RationalCone linear_image(const RationalCone& cone, const RatMatrix& map) {
  if (map.empty()) throw DimensionError("linear map without output coordinates");
  const std::size_t out_dim = map.size();
  for (const auto& row : map)
    if (row.size() != cone.ambient_dim()) throw DimensionError("linear map has the wrong input dimension");
  auto image = [&](const IntVector& v) {
    RatVector out(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) out[i] = dot(map[i], v);
    return out;
  };
  IntMatrix rays, lin;
  for (const auto& r : cone.rays()) {
    RatVector v = image(r);
    if (!is_zero(v)) rays.push_back(primitive(v));
  }
  for (const auto& l : cone.lineality()) {
    RatVector v = image(l);
    if (!is_zero(v)) lin.push_back(primitive(v));
  }
  return RationalCone::from_generators(out_dim, rays, lin);
}

RationalCone project_cone(const RationalCone& cone, const IntMatrix& map) {
  RatMatrix lin = to_rational(cone.lineality());
  for (const auto& k : nullspace(to_rational(map), cone.ambient_dim()))
    if (!in_span(lin, k)) throw ProjectionError("kernel of the projection is not contained in the lineality space");
  return linear_image(cone, to_rational(map));
}

bool is_smooth(const RationalCone& cone, const AmbientLattice& lattice) {
  if (lattice.dim() != cone.ambient_dim()) throw DimensionError("lattice and cone have different dimension");
  IntMatrix rows;
  for (const auto& r : cone.rays()) rows.push_back(primitive(lattice.coordinates(to_rational(r))));
  // Lattice points of the lineality space: saturate its basis in lattice coordinates.
  if (!cone.lineality().empty()) {
    IntMatrix lin;
    for (const auto& l : cone.lineality()) lin.push_back(primitive(lattice.coordinates(to_rational(l))));
    IntMatrix saturated = integer_kernel(integer_kernel(lin, cone.ambient_dim()), cone.ambient_dim());
    rows.insert(rows.end(), saturated.begin(), saturated.end());
  }
  if (rows.empty()) return true;
  if (rank(rows) != rows.size()) return false;
  for (const auto& d : elementary_divisors(rows))
    if (d != 1) return false;
  return true;
}

}  // namespace gfk
