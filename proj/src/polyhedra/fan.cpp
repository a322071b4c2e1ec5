#include "gfk/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gfk/errors.hpp"
#include "gfk/linalg.hpp"

namespace gfk {

namespace {

std::string describe(std::size_t i) { return "maximal cone #" + std::to_string(i); }

}  // namespace

Fan::Fan(AmbientLattice lattice, std::vector<RationalCone> maximal_cones) : lattice_(std::move(lattice)) {
  if (maximal_cones.empty()) throw DomainError("a fan needs at least one maximal cone");
  for (const auto& c : maximal_cones)
    if (c.ambient_dim() != lattice_.dim()) throw DimensionError("cone and lattice have different dimension");
  std::sort(maximal_cones.begin(), maximal_cones.end());
  maximal_cones.erase(std::unique(maximal_cones.begin(), maximal_cones.end()), maximal_cones.end());
  cones_ = std::move(maximal_cones);
  lineality_ = cones_.front().lineality();
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    if (cones_[i].lineality() != lineality_) throw IntegrityError("maximal cones have different lineality spaces");
    for (std::size_t j = 0; j < cones_.size(); ++j)
      if (i != j && cones_[j].contains(cones_[i]))
        throw IntegrityError(describe(i) + " is contained in " + describe(j));
  }
  std::set<IntVector> all;
  for (const auto& c : cones_) all.insert(c.rays().begin(), c.rays().end());
  rays_.assign(all.begin(), all.end());
  for (const auto& c : cones_) {
    std::vector<std::size_t> idx;
    for (const auto& r : c.rays())
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays_.begin(), rays_.end(), r) - rays_.begin()));
    std::sort(idx.begin(), idx.end());
    cone_rays_.push_back(std::move(idx));
  }
}

std::vector<std::size_t> Fan::f_vector() const {
  // Faces of a cone are the intersections of its facets' ray sets; a face
  // is identified globally by its ray indices since lineality is shared.
  std::set<std::vector<std::size_t>> faces;
  for (std::size_t ci = 0; ci < cones_.size(); ++ci) {
    const auto& cone = cones_[ci];
    std::vector<std::vector<std::size_t>> facet_sets;
    for (const auto& f : cone.facets()) {
      std::vector<std::size_t> s;
      for (std::size_t k = 0; k < cone.rays().size(); ++k)
        if (dot(f, cone.rays()[k]) == 0) s.push_back(cone_rays_[ci][k]);
      facet_sets.push_back(std::move(s));
    }
    std::set<std::vector<std::size_t>> local = {cone_rays_[ci]};
    std::vector<std::vector<std::size_t>> frontier = {cone_rays_[ci]};
    while (!frontier.empty()) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& s : frontier)
        for (const auto& f : facet_sets) {
          std::vector<std::size_t> t;
          std::set_intersection(s.begin(), s.end(), f.begin(), f.end(), std::back_inserter(t));
          if (local.insert(t).second) next.push_back(std::move(t));
        }
      frontier = std::move(next);
    }
    faces.insert(local.begin(), local.end());
  }
  std::map<std::size_t, std::size_t> by_dim;
  std::size_t max_dim = 0;
  for (const auto& s : faces) {
    if (s.empty()) continue;
    IntMatrix gens;
    for (auto i : s) gens.push_back(rays_[i]);
    std::size_t d = rank(gens);
    ++by_dim[d];
    max_dim = std::max(max_dim, d);
  }
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= max_dim; ++d) out.push_back(by_dim[d]);
  return out;
}

bool Fan::satisfies_fan_condition() const {
  try {
    verify_fan_condition();
    return true;
  } catch (const IntegrityError&) {
    return false;
  }
}

void Fan::verify_fan_condition() const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      RationalCone meet = cones_[i].intersect(cones_[j]);
      if (!meet.is_face_of(cones_[i]) || !meet.is_face_of(cones_[j]))
        throw IntegrityError("intersection of " + describe(i) + " and " + describe(j) + " is not a face of both");
    }
}

bool Fan::is_complete() const {
  std::map<std::vector<std::size_t>, std::size_t> facet_count;
  for (std::size_t ci = 0; ci < cones_.size(); ++ci) {
    const auto& cone = cones_[ci];
    if (!cone.is_full_dimensional()) return false;
    for (const auto& f : cone.facets()) {
      std::vector<std::size_t> s;
      for (std::size_t k = 0; k < cone.rays().size(); ++k)
        if (dot(f, cone.rays()[k]) == 0) s.push_back(cone_rays_[ci][k]);
      ++facet_count[s];
    }
  }
  return std::all_of(facet_count.begin(), facet_count.end(), [](const auto& kv) { return kv.second == 2; });
}

std::size_t Fan::count_simplicial() const {
  return static_cast<std::size_t>(
      std::count_if(cones_.begin(), cones_.end(), [](const RationalCone& c) { return c.is_simplicial(); }));
}

std::size_t Fan::count_smooth() const {
  return static_cast<std::size_t>(
      std::count_if(cones_.begin(), cones_.end(), [&](const RationalCone& c) { return is_smooth(c, lattice_); }));
}

std::vector<RationalCone> Fan::cones_inside(const RationalCone& region) const {
  std::vector<RationalCone> out;
  for (const auto& c : cones_)
    if (region.contains(c)) out.push_back(c);
  return out;
}

Fan project_fan(const Fan& fan, const IntMatrix& map, const AmbientLattice& target) {
  if (map.size() != target.dim()) throw DimensionError("projection target dimension differs from lattice");
  std::vector<RationalCone> images;
  for (const auto& c : fan.cones()) images.push_back(project_cone(c, map));
  Fan out(target, std::move(images));
  out.verify_fan_condition();
  return out;
}

}  // namespace gfk
