// polyrecon: generate, measure, reconstruct and verify polygons from their
// visibility angles.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyrecon/embed.hpp"
#include "polyrecon/errors.hpp"
#include "polyrecon/harness.hpp"
#include "polyrecon/io.hpp"
#include "polyrecon/oracle.hpp"
#include "polyrecon/witness.hpp"

namespace {

using namespace polyrecon;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct GenerateArgs {
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
  bool convex = false;
};

struct MeasureArgs {
  std::string poly;
  std::string out;
  bool reverse = false;
};

struct ReconstructArgs {
  std::string angles;
  std::string algorithm = "improved";
  std::string out_graph;
  std::string out_poly;
};

struct VerifyArgs {
  std::string poly;
  double tol = 1e-6;
};

struct DiffArgs {
  std::string angles;
};

struct BenchArgs {
  std::vector<int> sizes;
  int repeats = 1;
  std::uint64_t seed = 0;
  std::string csv;
  std::string algorithm = "both";
  std::string family = "random";
};

int run_generate(const GenerateArgs& args) {
  if (args.n < 3) {
    std::cerr << "generate: --n must be at least 3\n";
    return kExitUsage;
  }
  Polygon p;
  try {
    p = args.convex ? random_convex_polygon(args.n, args.seed)
                    : random_simple_polygon(args.n, args.seed);
  } catch (const GenerationFailed& e) {
    std::cerr << "GenerationFailed: " << e.what() << '\n';
    return kExitFailed;
  }
  require_valid(p);
  save_poly(args.out, p);
  return kExitOk;
}

int run_measure(const MeasureArgs& args) {
  Polygon p = load_poly(args.poly);
  if (args.reverse && p.size() > 1) std::reverse(p.vertices.begin() + 1, p.vertices.end());
  const ValidationReport report = validate_polygon(p);
  if (!report.ok()) {
    std::cerr << to_string(report.issue) << ": " << report.detail << '\n';
    return kExitFailed;
  }
  save_angles(args.out, measure_angles(p));
  return kExitOk;
}

int run_reconstruct(const ReconstructArgs& args) {
  const auto algorithm = parse_algorithm(args.algorithm);
  if (!algorithm) {
    std::cerr << "reconstruct: unknown algorithm '" << args.algorithm << "'\n";
    return kExitUsage;
  }
  const AngleData data = load_angles(args.angles);
  const ConsistencyReport verdict = detect_inconsistency(data);
  if (!verdict.consistent) {
    std::cout << verdict.summary() << '\n';
    return kExitFailed;
  }
  const Reconstruction rec = reconstruct(data, *algorithm);
  save_graph(args.out_graph, rec.graph);
  if (!args.out_poly.empty()) save_poly(args.out_poly, embed(rec.graph, data));
  std::cout << "Consistent edges=" << rec.graph.edge_count()
            << " candidate_checks=" << rec.stats.candidate_checks << '\n';
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  const Polygon p = load_poly(args.poly);
  const VerifyReport report = verify_polygon(p, args.tol);
  print_verify_report(std::cout, report);
  return report.ok() ? kExitOk : kExitFailed;
}

int run_diff(const DiffArgs& args) {
  const AngleData data = load_angles(args.angles);
  const DiffReport report = diff_algorithms(data);
  if (!report.match) {
    std::cout << "MISMATCH only_original=" << report.only_original.size()
              << " only_improved=" << report.only_improved.size() << '\n';
    for (const auto& [i, j] : report.only_original) std::cout << "original " << i << ' ' << j << '\n';
    for (const auto& [i, j] : report.only_improved) std::cout << "improved " << i << ' ' << j << '\n';
    return kExitFailed;
  }
  const bool ordered = report.original.candidate_checks >= report.improved.candidate_checks;
  std::cout << "MATCH, original checks " << (ordered ? ">=" : "<") << " improved checks\n"
            << "edges=" << report.edges << '\n'
            << "original candidate_checks=" << report.original.candidate_checks << '\n'
            << "improved candidate_checks=" << report.improved.candidate_checks << '\n';
  return kExitOk;
}

int run_bench_command(const BenchArgs& args) {
  BenchConfig config;
  config.sizes = args.sizes;
  config.repeats = args.repeats;
  config.seed = args.seed;
  if (args.algorithm == "original") {
    config.algorithms = {Algorithm::Original};
  } else if (args.algorithm == "improved") {
    config.algorithms = {Algorithm::Improved};
  } else if (args.algorithm != "both") {
    std::cerr << "bench: unknown algorithm '" << args.algorithm << "'\n";
    return kExitUsage;
  }
  if (args.family == "convex") {
    config.family = PolygonFamily::Convex;
  } else if (args.family != "random") {
    std::cerr << "bench: unknown family '" << args.family << "'\n";
    return kExitUsage;
  }
  for (int n : config.sizes) {
    if (n < 3) {
      std::cerr << "bench: sizes must be at least 3\n";
      return kExitUsage;
    }
  }
  const auto records = run_bench(config);
  std::ofstream out(args.csv);
  if (!out) throw FileError("cannot write " + args.csv);
  write_bench_csv(out, records);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct simple polygons from visibility angles"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a random simple polygon (POLY)");
  generate->add_option("--n", gen.n, "Vertex count")->required();
  generate->add_option("--seed", gen.seed, "Random seed")->required();
  generate->add_option("--out", gen.out, "Output POLY path")->required();
  generate->add_flag("--convex", gen.convex, "Generate a convex polygon instead");

  MeasureArgs meas;
  auto* measure = app.add_subcommand("measure", "Measure visibility angles (POLY -> ANGLES)");
  measure->add_option("--poly", meas.poly, "Input POLY path")->required();
  measure->add_option("--out", meas.out, "Output ANGLES path")->required();
  measure->add_flag("--reverse", meas.reverse, "Reverse a clockwise polygon, keeping vertex 0");

  ReconstructArgs rec;
  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "Reconstruct the visibility graph (ANGLES -> GRAPH)");
  reconstruct_cmd->add_option("--angles", rec.angles, "Input ANGLES path")->required();
  reconstruct_cmd->add_option("--algorithm", rec.algorithm, "original | improved");
  reconstruct_cmd->add_option("--out-graph", rec.out_graph, "Output GRAPH path")->required();
  reconstruct_cmd->add_option("--out-poly", rec.out_poly, "Also embed and write a POLY");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Full round trip against a POLY file");
  verify->add_option("--poly", ver.poly, "Input POLY path")->required();
  verify->add_option("--tol", ver.tol, "Similarity tolerance (relative to diameter)");

  DiffArgs dif;
  auto* diff = app.add_subcommand("diff", "Run both algorithms and compare edge sets");
  diff->add_option("--angles", dif.angles, "Input ANGLES path")->required();

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Time both algorithms over polygon sizes (CSV)");
  bench->add_option("--sizes", ben.sizes, "Comma-separated vertex counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--repeats", ben.repeats, "Runs per cell")->check(CLI::PositiveNumber);
  bench->add_option("--seed", ben.seed, "Random seed");
  bench->add_option("--csv", ben.csv, "Output CSV path")->required();
  bench->add_option("--algorithm", ben.algorithm, "original | improved | both");
  bench->add_option("--family", ben.family, "random | convex");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (measure->parsed()) return run_measure(meas);
    if (reconstruct_cmd->parsed()) return run_reconstruct(rec);
    if (verify->parsed()) return run_verify(ver);
    if (diff->parsed()) return run_diff(dif);
    if (bench->parsed()) return run_bench_command(ben);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FileError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidPolygon& e) {
    std::cerr << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
