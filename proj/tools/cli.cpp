#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gfk/errors.hpp"
#include "gfk/fan_engine.hpp"
#include "gfk/io.hpp"
#include "gfk/orbit.hpp"

namespace gfk {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw UsageError("cannot write '" + path + "'");
  outf << text;
  if (!outf) throw UsageError("error writing '" + path + "'");
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

// A variable name of `ring`, or a 1-based index. Empty means the last variable.
std::size_t resolve_chart(const std::string& spec, std::size_t arity, const Ring* ring) {
  if (spec.empty()) return arity - 1;
  if (ring)
    if (auto idx = ring->index_of(spec)) return *idx;
  if (std::all_of(spec.begin(), spec.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      spec.size() < 9) {
    std::size_t i = std::stoul(spec);
    if (i >= 1 && i <= arity) return i - 1;
  }
  throw UsageError("unknown chart '" + spec + "'");
}

Fallback parse_fallback(const std::string& s) {
  if (s == "lex") return Fallback::Lex;
  if (s == "grevlex") return Fallback::GrevLex;
  throw UsageError("--fallback must be 'lex' or 'grevlex'");
}

QuotientLattice target_lattice(const std::string& group, std::size_t arity, std::size_t chart) {
  if (group.empty()) return {AmbientLattice::standard(arity - 1), chart_projection(arity, chart), chart};
  GroupSpec g = GroupSpec::parse(group);
  if (g.arity() != arity)
    throw DimensionError("group acts on " + std::to_string(g.arity()) + " coordinates, the ring has " +
                         std::to_string(arity));
  return quotient_lattice(g, chart);
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string stats_text(const Fan& fan) {
  const std::size_t n = fan.cones().size();
  std::ostringstream s;
  s << "ambient_dim: " << fan.ambient_dim() << "\n";
  s << "f-vector: " << join_counts(fan.f_vector()) << "\n";
  s << "maximal cones: " << n << "\n";
  s << "simplicial: " << fan.count_simplicial() << "/" << n << "\n";
  s << "smooth: " << fan.count_smooth() << "/" << n << "\n";
  s << "complete: " << (fan.is_complete() ? "yes" : "no") << "\n";
  return s.str();
}

// Integer SVG coordinates: unit length is kScale pixels, y points up.
constexpr double kScale = 200;

std::string point(double x, double y) {
  return std::to_string(std::lround(kScale * x)) + "," + std::to_string(std::lround(-kScale * y));
}

std::string render_svg(const Fan& fan) {
  if (fan.ambient_dim() != 2) throw DimensionError("render draws 2-dimensional fans only");
  auto unit = [](const IntVector& v) {
    double x = v[0].get_d(), y = v[1].get_d(), len = std::hypot(x, y);
    return std::pair{x / len, y / len};
  };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"560\" viewBox=\"-280 -280 560 560\">\n";
  s << "<g fill=\"#c9d6ea\" stroke=\"#ffffff\" stroke-width=\"2\">\n";
  for (const auto& cone : fan.cones()) {
    if (cone.lineality_dim() == 2) {
      s << "<rect x=\"-220\" y=\"-220\" width=\"440\" height=\"440\"/>\n";
      continue;
    }
    std::vector<double> angles;
    for (const auto& r : cone.rays()) {
      auto [x, y] = unit(r);
      angles.push_back(std::atan2(y, x));
    }
    for (const auto& l : cone.lineality())
      for (int sign : {1, -1}) {
        auto [x, y] = unit(l);
        angles.push_back(std::atan2(sign * y, sign * x));
      }
    std::sort(angles.begin(), angles.end());
    // The cone is the complement of the largest gap between its generators.
    std::size_t start = 0;
    double gap = -1;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      double next = i + 1 < angles.size() ? angles[i + 1] : angles[0] + 2 * M_PI;
      if (next - angles[i] > gap) {
        gap = next - angles[i];
        start = (i + 1) % angles.size();
      }
    }
    const double from = angles[start], span = 2 * M_PI - gap;
    const int steps = std::max(1, static_cast<int>(std::ceil(span / (M_PI / 8))));
    s << "<polygon points=\"0,0";
    for (int k = 0; k <= steps; ++k) {
      double a = from + span * k / steps;
      s << " " << point(std::cos(a), std::sin(a));
    }
    s << "\"/>\n";
  }
  s << "</g>\n<g stroke=\"#1f2a44\" stroke-width=\"3\">\n";
  for (const auto& r : fan.rays()) {
    auto [x, y] = unit(r);
    s << "<line x1=\"0\" y1=\"0\" x2=\"" << std::lround(kScale * x) << "\" y2=\"" << std::lround(-kScale * y)
      << "\"/>\n";
  }
  for (const auto& l : fan.lineality()) {
    auto [x, y] = unit(l);
    s << "<line x1=\"" << std::lround(-kScale * x) << "\" y1=\"" << std::lround(kScale * y) << "\" x2=\""
      << std::lround(kScale * x) << "\" y2=\"" << std::lround(-kScale * y) << "\"/>\n";
  }
  s << "</g>\n<g fill=\"#b3261e\">\n";
  // Lattice points in [0,1)^2; coordinates in the lattice basis are bounded
  // by the column sums of the inverse basis.
  const AmbientLattice& lat = fan.lattice();
  Rational bound = 0;
  for (std::size_t j = 0; j < 2; ++j) {
    RatVector e(2, Rational(0));
    e[j] = 1;
    for (const auto& c : lat.coordinates(e)) bound += abs(c);
  }
  const long k = Integer(bound.get_num() / bound.get_den()).get_si() + 1;
  std::vector<RatVector> dots;
  for (long a = -k; a <= k; ++a)
    for (long b = -k; b <= k; ++b) {
      RatVector p = lat.from_coordinates({Rational(a), Rational(b)});
      if (p[0] >= 0 && p[0] < 1 && p[1] >= 0 && p[1] < 1) dots.push_back(p);
    }
  std::sort(dots.begin(), dots.end());
  for (const auto& p : dots)
    s << "<circle cx=\"" << std::lround(kScale * p[0].get_d()) << "\" cy=\"" << std::lround(-kScale * p[1].get_d())
      << "\" r=\"4\"/>\n";
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner fans of orbit ideals of finite abelian groups", "gfk"};
  app.require_subcommand(1);

  std::string group, output, input, chart, fallback = "lex";
  bool affine = false, single_degree = false;
  unsigned threads = 0;
  std::int64_t degree = 0;

  auto* orbit_cmd = app.add_subcommand("orbit-ideal", "Write the orbit (lattice) ideal of a group");
  orbit_cmd->add_option("--group", group, "Group such as 5:1,3,0 or 2:1,0,1;3:0,1,2")->required();
  orbit_cmd->add_option("-o,--output", output, "Ideal file (default: stdout)");

  auto* fan_cmd = app.add_subcommand("fan", "Compute the Groebner fan of an ideal file");
  fan_cmd->add_option("ideal", input, "Ideal file")->required();
  fan_cmd->add_option("-o,--output", output, "Fan file; the reduced bases go to <file>.bases");
  fan_cmd->add_flag("--affine", affine, "Fan of one affine chart, restricted to the positive orthant");
  fan_cmd->add_option("--chart", chart, "Chart variable (name or 1-based index, default: last)");
  fan_cmd->add_option("--group", group, "Use the quotient lattice of this group for --affine");
  fan_cmd->add_option("--fallback", fallback, "Tie-breaking order: lex or grevlex");
  fan_cmd->add_option("--threads", threads, "Worker threads (default: GFK_THREADS or all cores)");

  auto* project_cmd = app.add_subcommand("project", "Project a fan into the quotient lattice of a group");
  project_cmd->add_option("fan", input, "Fan file")->required();
  project_cmd->add_option("--group", group, "Group")->required();
  project_cmd->add_option("--chart", chart, "Coordinate to drop (1-based index, default: last)");
  project_cmd->add_option("-o,--output", output, "Fan file (default: stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "Print f-vector and cone statistics of a fan file");
  stats_cmd->add_option("fan", input, "Fan file")->required();

  auto* state_cmd = app.add_subcommand("state-polytope", "State polytope of a homogeneous ideal");
  state_cmd->add_option("ideal", input, "Ideal file")->required();
  state_cmd->add_option("--degree", degree, "Degree (default: smallest stable degree)");
  state_cmd->add_option("--group", group, "Compare normal fans over the quotient lattice of this group");
  state_cmd->add_option("--chart", chart, "Coordinate to drop (name or 1-based index, default: last)");
  state_cmd->add_option("--fallback", fallback, "Tie-breaking order: lex or grevlex");
  state_cmd->add_flag("--single-degree", single_degree, "Use St_d alone instead of St_1 + ... + St_d");

  auto* render_cmd = app.add_subcommand("render", "Draw a 2-dimensional fan as SVG");
  render_cmd->add_option("fan", input, "Fan file")->required();
  render_cmd->add_option("-o,--output", output, "SVG file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }

  try {
    if (orbit_cmd->parsed()) {
      GroupSpec g = GroupSpec::parse(group);
      Ideal ideal = lattice_ideal(orbit_lattice(g), g.arity());
      emit(output, "# orbit ideal of " + g.to_string() + "\n" + format_ideal_file(Ring::standard(g.arity()), ideal),
           out);
    } else if (fan_cmd->parsed()) {
      IdealFile file = parse_ideal_file(read_file(input));
      TraversalOptions options{parse_fallback(fallback), threads};
      const std::size_t r = file.ring.arity();
      GroebnerFan gf = [&] {
        if (!affine) {
          if (!chart.empty() || !group.empty()) throw UsageError("--chart and --group need --affine");
          return groebner_fan(file.ideal, options);
        }
        if (!file.ideal.is_homogeneous()) {
          if (!chart.empty()) throw UsageError("--chart needs a homogeneous ideal");
          AmbientLattice lat = group.empty() ? AmbientLattice::standard(r)
                                             : target_lattice(group, r + 1, r).lattice;
          return affine_fan_from_homogenization(file.ideal, options, &lat);
        }
        if (r < 2) throw UsageError("--affine needs at least two variables");
        std::size_t c = resolve_chart(chart, r, &file.ring);
        AmbientLattice lat = target_lattice(group, r, c).lattice;
        return affine_fan_of_chart(file.ideal, c, options, &lat);
      }();
      Ring ring = file.ring;
      if (affine && file.ideal.is_homogeneous()) ring = file.ring.without(resolve_chart(chart, r, &file.ring));
      emit(output, format_fan(gf.fan), out);
      if (!output.empty()) write_file(output + ".bases", format_bases(ring, gf));
    } else if (project_cmd->parsed()) {
      Fan fan = parse_fan(read_file(input));
      std::size_t c = resolve_chart(chart, fan.ambient_dim(), nullptr);
      QuotientLattice q = target_lattice(group, fan.ambient_dim(), c);
      emit(output, format_fan(project_fan(fan, q.projection, q.lattice)), out);
    } else if (stats_cmd->parsed()) {
      out << stats_text(parse_fan(read_file(input)));
    } else if (state_cmd->parsed()) {
      IdealFile file = parse_ideal_file(read_file(input));
      if (!file.ideal.is_homogeneous()) throw DomainError("state polytopes need a homogeneous ideal");
      const std::size_t r = file.ring.arity();
      if (r < 2) throw DimensionError("state polytopes need at least two variables");
      std::size_t c = resolve_chart(chart, r, &file.ring);
      QuotientLattice q = target_lattice(group, r, c);
      GroebnerFan gf = groebner_fan(file.ideal, {parse_fallback(fallback), 0});
      const StateKind kind = single_degree ? StateKind::SingleDegree : StateKind::UpToDegree;
      StatePolytope st = degree > 0 ? state_polytope(gf, degree, c, kind) : state_polytope_auto(gf, c, kind);
      const bool equal = verify_normal_fan_equals_projection(gf, st, q);
      out << "degree: " << st.degree << (single_degree ? " (single degree)" : " (summed over degrees 1 to " + std::to_string(st.degree) + ")") << "\n";
      out << "vertices: " << st.polytope.vertices().size() << "\n";
      for (const auto& v : st.polytope.vertices()) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << to_string(v[i]);
        out << "\n";
      }
      out << "normal fan equals projected Groebner fan: " << (equal ? "yes" : "no") << "\n";
      if (!equal) {
        err << "integrity error: normal fan of the state polytope differs from the projected Groebner fan\n";
        return 2;
      }
    } else if (render_cmd->parsed()) {
      emit(output, render_svg(parse_fan(read_file(input))), out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace gfk
