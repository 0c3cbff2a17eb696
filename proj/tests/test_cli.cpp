#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "polyrecon/embed.hpp"
#include "polyrecon/io.hpp"
#include "polyrecon/oracle.hpp"

using namespace polyrecon;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("polyrecon_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Run cli(const std::string& args) {
  const fs::path log = scratch() / "stdout.txt";
  const std::string cmd = std::string("\"") + POLYRECON_CLI + "\" " + args + " > \"" + log.string() +
                          "\" 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(log);
  return r;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST_CASE("generate") {
  REQUIRE(cli("generate --n 20 --seed 5 --out " + path("a.poly")).code == 0);
  REQUIRE(cli("generate --n 20 --seed 5 --out " + path("b.poly")).code == 0);
  CHECK(slurp(path("a.poly")) == slurp(path("b.poly")));
  const Polygon p = load_poly(path("a.poly"));
  CHECK(p.size() == 20);
  CHECK(validate_polygon(p).ok());

  REQUIRE(cli("generate --n 20 --seed 6 --out " + path("c.poly")).code == 0);
  CHECK(slurp(path("a.poly")) != slurp(path("c.poly")));

  REQUIRE(cli("generate --n 9 --seed 1 --convex --out " + path("convex.poly")).code == 0);
  CHECK(is_convex(load_poly(path("convex.poly"))));

  CHECK(cli("generate --n 2 --seed 0 --out " + path("tiny.poly")).code == 2);
  CHECK(cli("generate --seed 0 --out " + path("tiny.poly")).code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("measure") {
  save_poly(path("hexl.poly"), fixtures::hexl());
  REQUIRE(cli("measure --poly " + path("hexl.poly") + " --out " + path("hexl.angles")).code == 0);
  const AngleData a = load_angles(path("hexl.angles"));
  const AngleData expected = measure_angles(fixtures::hexl());
  REQUIRE(a.size() == 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(a.vertices[i].degree == expected.vertices[i].degree);
    CHECK(a.vertices[i].gaps == expected.vertices[i].gaps);
  }

  save_poly(path("bowtie.poly"), Polygon{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}});
  const Run bow = cli("measure --poly " + path("bowtie.poly") + " --out " + path("bowtie.angles"));
  CHECK(bow.code == 1);
  CHECK(bow.out.rfind("NotSimple", 0) == 0);

  Polygon cw = fixtures::hexl();
  std::reverse(cw.vertices.begin() + 1, cw.vertices.end());
  save_poly(path("cw.poly"), cw);
  const Run plain = cli("measure --poly " + path("cw.poly") + " --out " + path("cw.angles"));
  CHECK(plain.code == 1);
  CHECK(plain.out.rfind("NotCCW", 0) == 0);
  CHECK(cli("measure --reverse --poly " + path("cw.poly") + " --out " + path("cw.angles")).code == 0);
  CHECK(slurp(path("cw.angles")) == slurp(path("hexl.angles")));

  CHECK(cli("measure --poly " + path("missing.poly") + " --out " + path("x.angles")).code == 2);
  std::ofstream(path("junk.poly")) << "POLY 3\n0 0\n1 zero\n0 1\n";
  CHECK(cli("measure --poly " + path("junk.poly") + " --out " + path("x.angles")).code == 2);
}

TEST_CASE("reconstruct, diff and verify") {
  save_poly(path("r.poly"), random_simple_polygon(40, 17));
  REQUIRE(cli("measure --poly " + path("r.poly") + " --out " + path("r.angles")).code == 0);
  const Run orig = cli("reconstruct --algorithm original --angles " + path("r.angles") +
                       " --out-graph " + path("orig.graph"));
  const Run impr = cli("reconstruct --algorithm improved --angles " + path("r.angles") +
                       " --out-graph " + path("impr.graph") + " --out-poly " + path("impr.poly"));
  REQUIRE(orig.code == 0);
  REQUIRE(impr.code == 0);
  CHECK(orig.out.rfind("Consistent", 0) == 0);
  CHECK(slurp(path("orig.graph")) == slurp(path("impr.graph")));
  CHECK(load_graph(path("impr.graph")) == visibility_graph_oracle(load_poly(path("r.poly"))));
  CHECK(similarity_compare(load_poly(path("r.poly")), load_poly(path("impr.poly")), 1e-6).matched);
  CHECK(cli("reconstruct --algorithm quick --angles " + path("r.angles") + " --out-graph " +
            path("q.graph"))
            .code == 2);

  const Run d = cli("diff --angles " + path("r.angles"));
  CHECK(d.code == 0);
  CHECK(d.out.rfind("MATCH, original checks >= improved checks", 0) == 0);

  const Run v = cli("verify --poly " + path("r.poly"));
  CHECK(v.code == 0);
  CHECK(v.out.find("graph_match: true") != std::string::npos);
  CHECK(v.out.find("consistency: Consistent") != std::string::npos);
}

TEST_CASE("perturbed angles are reported as inconsistent") {
  AngleData a = measure_angles(fixtures::hexl());
  a.vertices[0].gaps[1] += 1e-3;
  save_angles(path("bad.angles"), a);
  const Run r = cli("reconstruct --algorithm improved --angles " + path("bad.angles") +
                    " --out-graph " + path("bad.graph"));
  CHECK(r.code == 1);
  CHECK(r.out.rfind("Inconsistent", 0) == 0);
  CHECK_FALSE(fs::exists(path("bad.graph")));
}

TEST_CASE("bench") {
  const std::string base = "bench --sizes 16,24 --repeats 2 --seed 3 --csv ";
  REQUIRE(cli(base + path("b1.csv")).code == 0);
  REQUIRE(cli(base + path("b2.csv")).code == 0);
  std::istringstream first(slurp(path("b1.csv")));
  std::string header;
  std::getline(first, header);
  CHECK(header == "algorithm,n,wall_time,candidate_checks,edges_found");
  int rows = 0;
  std::string line;
  while (std::getline(first, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2 * 2 * 2);

  // Everything except the timing column is reproducible.
  auto strip_time = [](const std::string& csv) {
    std::istringstream in(csv);
    std::string out;
    std::string row;
    while (std::getline(in, row)) {
      const auto a = row.find(',');
      const auto b = row.find(',', a + 1);
      const auto c = row.find(',', b + 1);
      out += row.substr(0, b) + row.substr(c) + '\n';
    }
    return out;
  };
  CHECK(strip_time(slurp(path("b1.csv"))) == strip_time(slurp(path("b2.csv"))));

  CHECK(cli("bench --sizes 2 --csv " + path("b3.csv")).code == 2);
  CHECK(cli("bench --sizes 8 --family star --csv " + path("b3.csv")).code == 2);
}

TEST_CASE("cleanup") { fs::remove_all(scratch()); }
