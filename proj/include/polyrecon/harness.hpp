#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "polyrecon/embed.hpp"
#include "polyrecon/model.hpp"
#include "polyrecon/witness.hpp"

namespace polyrecon {

/// One timed reconstruction.
struct BenchRecord {
  Algorithm algorithm = Algorithm::Improved;
  int n = 0;
  int repeat = 0;
  double wall_time = 0.0;  // seconds, reconstruction only
  std::uint64_t candidate_checks = 0;
  std::size_t edges_found = 0;
};

enum class PolygonFamily { Random, Convex };

struct BenchConfig {
  std::vector<int> sizes;
  int repeats = 1;
  std::uint64_t seed = 0;
  std::vector<Algorithm> algorithms{Algorithm::Original, Algorithm::Improved};
  PolygonFamily family = PolygonFamily::Random;
};

/// Angle data for a benchmark polygon of the given family. Random polygons
/// go through the brute-force oracle; convex ones use their complete graph.
AngleData bench_input(int n, std::uint64_t seed, PolygonFamily family);

/// Runs every (size, algorithm, repeat) cell. Records come back sorted by
/// algorithm name, then n, then repeat.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// Header `algorithm,n,wall_time,candidate_checks,edges_found`, one row per
/// record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

struct DiffReport {
  bool match = false;
  std::size_t edges = 0;
  ReconstructStats original;
  ReconstructStats improved;
  std::vector<std::pair<int, int>> only_original;
  std::vector<std::pair<int, int>> only_improved;
};

/// Runs both algorithms on the same data and compares edge sets.
DiffReport diff_algorithms(const AngleData& data);

struct VerifyReport {
  bool graph_match = false;
  SimilarityReport similarity;
  ConsistencyReport consistency;
  /// Empty on success; otherwise the stage that threw and its message.
  std::string failed_stage;
  std::string failure;

  [[nodiscard]] bool ok() const {
    return failed_stage.empty() && graph_match && similarity.matched && consistency.consistent;
  }
};

/// measure -> reconstruct (improved) -> embed -> compare against `p`.
VerifyReport verify_polygon(const Polygon& p, double tol = 1e-6);

void print_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace polyrecon
