#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "gfk/errors.hpp"
#include "gfk/io.hpp"

using namespace gfk;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("gfk_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const std::string& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

const char* kExample2 = "ring: x,y,z,w\nx^5 - w^5\nx^2 - y*w\nx^3 - z*w^2\n";

}  // namespace

TEST_CASE("example 1 pipeline") {
  TempDir dir;
  REQUIRE(run({"orbit-ideal", "--group", "5:1,3,0", "-o", dir / "I.ideal"}).code == 0);
  REQUIRE(run({"fan", dir / "I.ideal", "-o", dir / "I.fan"}).code == 0);
  CHECK(fs::exists(dir / "I.fan.bases"));
  REQUIRE(run({"project", dir / "I.fan", "--group", "5:1,3,0", "-o", dir / "P.fan"}).code == 0);
  Run stats = run({"stats", dir / "P.fan"});
  REQUIRE(stats.code == 0);
  CHECK(has_line(stats.out, "f-vector: 11 11"));
  CHECK(has_line(stats.out, "smooth: 11/11"));
  CHECK(has_line(stats.out, "complete: yes"));

  // Same result as the library calls.
  GroupSpec g = GroupSpec::parse("5:1,3,0");
  Ideal I = lattice_ideal(orbit_lattice(g), 3);
  auto q = quotient_lattice(g, 2);
  CHECK(slurp(dir / "P.fan") == format_fan(projected_fan(groebner_fan(I), q)));

  Run state = run({"state-polytope", dir / "I.ideal", "--group", "5:1,3,0"});
  CHECK(state.code == 0);
  CHECK(has_line(state.out, "vertices: 11"));
  CHECK(has_line(state.out, "normal fan equals projected Groebner fan: yes"));

  REQUIRE(run({"render", dir / "P.fan", "-o", dir / "P.svg"}).code == 0);
  std::string svg = slurp(dir / "P.svg");
  auto count = [&](const std::string& tag) {
    std::size_t n = 0;
    for (auto p = svg.find(tag); p != std::string::npos; p = svg.find(tag, p + 1)) ++n;
    return n;
  };
  CHECK(count("<polygon") == 11);
  CHECK(count("<line") == 11);
  CHECK(count("<circle") == 5);  // |N' / Z^2| = 5
}

TEST_CASE("example 2 pipeline") {
  TempDir dir;
  spit(dir / "J.ideal", kExample2);
  REQUIRE(run({"fan", dir / "J.ideal", "--affine", "--chart", "w", "--group", "5:1,2,3,0", "-o", dir / "J.fan"}).code ==
          0);
  Run stats = run({"stats", dir / "J.fan"});
  CHECK(has_line(stats.out, "f-vector: 15 32 18"));
  CHECK(has_line(stats.out, "simplicial: 17/18"));
  CHECK(has_line(stats.out, "smooth: 17/18"));

  // The saturated orbit ideal of the same group has a finer chart fan.
  REQUIRE(run({"orbit-ideal", "--group", "5:1,2,3,0", "-o", dir / "L.ideal"}).code == 0);
  REQUIRE(run({"fan", dir / "L.ideal", "--affine", "--chart", "4", "--group", "5:1,2,3,0", "-o", dir / "L.fan"}).code ==
          0);
  CHECK(has_line(run({"stats", dir / "L.fan"}).out, "f-vector: 17 35 19"));
  CHECK(slurp(dir / "L.fan.bases").rfind("ring: x,y,z\n", 0) == 0);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  TempDir dir;
  spit(dir / "J.ideal", kExample2);
  REQUIRE(run({"fan", dir / "J.ideal", "--threads", "1", "-o", dir / "a.fan"}).code == 0);
  REQUIRE(run({"fan", dir / "J.ideal", "--threads", "4", "-o", dir / "b.fan"}).code == 0);
  REQUIRE(run({"fan", dir / "J.ideal", "-o", dir / "c.fan"}).code == 0);
  CHECK(slurp(dir / "a.fan") == slurp(dir / "b.fan"));
  CHECK(slurp(dir / "a.fan") == slurp(dir / "c.fan"));
  CHECK(slurp(dir / "a.fan.bases") == slurp(dir / "b.fan.bases"));
  CHECK(slurp(dir / "a.fan.bases") == slurp(dir / "c.fan.bases"));
}

TEST_CASE("fan files round trip") {
  TempDir dir;
  spit(dir / "J.ideal", kExample2);
  REQUIRE(run({"fan", dir / "J.ideal", "-o", dir / "J.fan"}).code == 0);
  REQUIRE(run({"fan", dir / "J.ideal", "--affine", "--group", "5:1,2,3,0", "-o", dir / "A.fan"}).code == 0);
  for (const char* name : {"J.fan", "A.fan"}) {
    std::string text = slurp(dir / name);
    CHECK(format_fan(parse_fan(text)) == text);
  }
  Fan whole(AmbientLattice::standard(2), {RationalCone::full_space(2)});
  CHECK(format_fan(parse_fan(format_fan(whole))) == format_fan(whole));
  CHECK(format_fan(whole).find("none") != std::string::npos);

  std::string text = slurp(dir / "A.fan");
  std::string stale = text.substr(0, text.rfind("fvector:")) + "fvector: 1 2 3\n";
  CHECK_THROWS_AS(parse_fan(stale), ParseError);
  CHECK_THROWS_AS(parse_fan("ambient_dim: 2\nlattice:\n1 0\n"), ParseError);
}

TEST_CASE("ideal files") {
  IdealFile f = parse_ideal_file("# comment\nring: a,b\n\na^2 - b^2  \n# another\n1/2*a*b - b^2\n");
  CHECK(f.ring.names() == std::vector<std::string>{"a", "b"});
  CHECK(f.ideal.generators().size() == 2);
  CHECK(format_ideal_file(f.ring, parse_ideal_file(format_ideal_file(f.ring, f.ideal)).ideal) ==
        format_ideal_file(f.ring, f.ideal));
  CHECK_THROWS_AS(parse_ideal_file("ring: x,y\nx + q\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("x + y\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_file("ring: x,y\n"), ParseError);
}

TEST_CASE("exit codes") {
  TempDir dir;
  Run nonfree = run({"orbit-ideal", "--group", "4:1,3,3"});
  CHECK(nonfree.code == 2);
  CHECK(nonfree.err.find("freeness error") != std::string::npos);
  CHECK(run({"orbit-ideal", "--group", "3:1,1,1"}).code == 2);
  CHECK(run({"orbit-ideal", "--group", "4:1,x,0"}).code == 3);
  CHECK(run({"orbit-ideal"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"stats", dir / "missing.fan"}).code == 1);

  spit(dir / "bad.ideal", "ring: x,y\nx^2 - y^\n");
  CHECK(run({"fan", dir / "bad.ideal"}).code == 3);
  spit(dir / "I.ideal", "ring: x,y,z\nx^3 - y*z^2\nx^2*y - z^3\n");
  CHECK(run({"fan", dir / "I.ideal", "--chart", "z"}).code == 1);
  CHECK(run({"fan", dir / "I.ideal", "--affine", "--chart", "q"}).code == 1);
  CHECK(run({"fan", dir / "I.ideal", "--fallback", "deglex"}).code == 1);
  CHECK(run({"state-polytope", dir / "I.ideal", "--degree", "2"}).code == 2);
  CHECK(run({"state-polytope", dir / "I.ideal", "--group", "5:1,2,3,0"}).code == 2);
  REQUIRE(run({"fan", dir / "I.ideal", "-o", dir / "I.fan"}).code == 0);
  CHECK(run({"render", dir / "I.fan"}).code == 2);
  spit(dir / "aff.ideal", "ring: x,y\nx^2 - y\n");
  CHECK(run({"state-polytope", dir / "aff.ideal"}).code == 2);
}
