#pragma once

#include <string>
#include <string_view>

#include "gfk/fan.hpp"
#include "gfk/fan_engine.hpp"
#include "gfk/groebner.hpp"
#include "gfk/ring.hpp"

namespace gfk {

struct IdealFile {
  Ring ring;
  Ideal ideal;
};

/// `ring: x,y,z` on the first non-comment line, then one polynomial per
/// nonempty line. Lines starting with `#` are comments.
IdealFile parse_ideal_file(std::string_view text);
std::string format_ideal_file(const Ring& ring, const Ideal& ideal);

/// Canonical fan text:
///
///   ambient_dim: 2
///   lattice:
///   1 0
///   0 1/5
///   lineality:
///   rays:
///   1 0
///   ...
///   maximal_cones:
///   0 1
///   ...
///   fvector: 4 4
///
/// A cone without rays is written `none`. Parsing rebuilds every cone from
/// its rays and the lineality rows and rejects a stale fvector line.
std::string format_fan(const Fan& fan);
Fan parse_fan(std::string_view text);

/// Reduced basis of every maximal cone in fan order, elements sorted
/// canonically:
///
///   ring: x,y,z
///   cone: 0 1
///   x^3 - y*z^2
///   ...
std::string format_bases(const Ring& ring, const GroebnerFan& fan);

}  // namespace gfk
