#include "polyrecon/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <ostream>
#include <tuple>

#include "polyrecon/errors.hpp"
#include "polyrecon/io.hpp"
#include "polyrecon/oracle.hpp"

namespace polyrecon {

AngleData bench_input(int n, std::uint64_t seed, PolygonFamily family) {
  if (family == PolygonFamily::Convex) {
    const Polygon p = random_convex_polygon(n, seed);
    VisibilityGraph complete(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) complete.add_edge(i, j);
    }
    return measure_angles(p, complete);
  }
  return measure_angles(random_simple_polygon(n, seed));
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  for (int n : config.sizes) {
    const AngleData data = bench_input(n, config.seed, config.family);
    for (Algorithm algorithm : config.algorithms) {
      for (int r = 0; r < config.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const Reconstruction rec = reconstruct(data, algorithm);
        const auto stop = std::chrono::steady_clock::now();
        records.push_back({algorithm, n, r, std::chrono::duration<double>(stop - start).count(),
                           rec.stats.candidate_checks, rec.graph.edge_count()});
      }
    }
  }
  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::make_tuple(to_string(a.algorithm), a.n, a.repeat) <
           std::make_tuple(to_string(b.algorithm), b.n, b.repeat);
  });
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "algorithm,n,wall_time,candidate_checks,edges_found\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.algorithm) << ',' << r.n << ',' << format_real(r.wall_time) << ','
        << r.candidate_checks << ',' << r.edges_found << '\n';
  }
}

DiffReport diff_algorithms(const AngleData& data) {
  const Reconstruction original = reconstruct_original(data);
  const Reconstruction improved = reconstruct_improved(data);
  DiffReport report;
  const auto a = original.graph.edges();
  const auto b = improved.graph.edges();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(report.only_original));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(report.only_improved));
  report.match = report.only_original.empty() && report.only_improved.empty();
  report.edges = improved.graph.edge_count();
  report.original = original.stats;
  report.improved = improved.stats;
  return report;
}

VerifyReport verify_polygon(const Polygon& p, double tol) {
  VerifyReport report;
  std::string stage = "measure";
  try {
    const VisibilityGraph truth = visibility_graph_oracle(p);
    const AngleData data = measure_angles(p, truth);
    stage = "reconstruct";
    const Reconstruction rec = reconstruct_improved(data);
    report.graph_match = rec.graph == truth;
    stage = "embed";
    const Polygon placed = embed(rec.graph, data);
    stage = "compare";
    report.similarity = similarity_compare(p, placed, tol);
    stage = "consistency";
    report.consistency = detect_inconsistency(data);
  } catch (const Error& e) {
    report.failed_stage = stage;
    report.failure = e.what();
  }
  return report;
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
  if (!report.failed_stage.empty()) {
    out << "failed_stage: " << report.failed_stage << '\n' << "error: " << report.failure << '\n';
    return;
  }
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "graph_match: " << flag(report.graph_match) << '\n'
      << "matched: " << flag(report.similarity.matched) << '\n'
      << "scale: " << format_real(report.similarity.scale) << '\n'
      << "rotation: " << format_real(report.similarity.rotation.radians()) << '\n'
      << "translation: " << format_real(report.similarity.translation.x) << ' '
      << format_real(report.similarity.translation.y) << '\n'
      << "max_relative_deviation: " << format_real(report.similarity.max_relative_deviation) << '\n'
      << "consistency: " << report.consistency.summary() << '\n';
}

}  // namespace polyrecon
