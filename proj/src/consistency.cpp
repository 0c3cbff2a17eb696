#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "polyrecon/embed.hpp"
#include "polyrecon/errors.hpp"
#include "polyrecon/oracle.hpp"
#include "polyrecon/witness.hpp"

namespace polyrecon {
namespace {

ConsistencyReport failure(std::string stage, std::string detail, int vertex = -1) {
  return {false, std::move(stage), std::move(detail), vertex};
}

ConsistencyReport check_structure(const AngleData& data) {
  const int n = data.size();
  if (n < 3) return failure("structure", "fewer than 3 vertices");
  long long degree_sum = 0;
  for (int i = 0; i < n; ++i) {
    const VertexAngles& v = data.vertices[static_cast<std::size_t>(i)];
    if (v.degree < 2 || v.degree > n - 1) {
      return failure("structure", "degree " + std::to_string(v.degree) + " outside [2, n-1]", i);
    }
    if (v.gaps.size() + 1 != static_cast<std::size_t>(v.degree)) {
      return failure("structure", "angle count does not match degree", i);
    }
    double total = 0.0;
    for (double g : v.gaps) {
      if (!(g > 0.0)) return failure("structure", "non-positive angle", i);
      total += g;
    }
    if (!(total < kTwoPi)) return failure("structure", "angles sum to 2pi or more", i);
    degree_sum += v.degree;
  }
  if (degree_sum % 2 != 0) return failure("structure", "degree sum is odd");
  const double expected = (n - 2) * kPi;
  const double total = total_interior_angle(data);
  if (std::abs(total - expected) > angle_sum_tolerance(n)) {
    return failure("structure", "angle total " + std::to_string(total) + " differs from (n-2)pi by " +
                                    std::to_string(total - expected));
  }
  return {};
}

// Every vertex's forward and backward tables together must name deg(v)
// distinct vertices holding the ranks 1..deg(v) exactly once.
ConsistencyReport check_tables(const Reconstruction& rec) {
  const FBState& state = rec.state;
  const int n = state.vertex_count();
  std::vector<int> owner;
  for (int i = 0; i < n; ++i) {
    const int deg = state.degree(i);
    owner.assign(static_cast<std::size_t>(deg) + 1, -1);
    int named = 0;
    for (int d = 1; d < n; ++d) {
      const int target = state.wrap(i + d);
      const int f = state.forward_rank(i, target);
      const int b = state.backward_rank(i, target);
      if (f != 0 && b != 0 && f != b) {
        return failure("tables", "vertex " + std::to_string(target) + " has two ranks", i);
      }
      const int r = f != 0 ? f : b;
      if (r == 0) continue;
      if (r > deg || owner[static_cast<std::size_t>(r)] != -1) {
        return failure("tables", "rank " + std::to_string(r) + " assigned twice or beyond degree", i);
      }
      owner[static_cast<std::size_t>(r)] = target;
      ++named;
    }
    if (named != deg || rec.graph.degree(i) != deg) {
      return failure("tables", std::to_string(named) + " visible vertices identified, degree is " +
                                   std::to_string(deg), i);
    }
  }
  return {};
}

ConsistencyReport check_round_trip(const Reconstruction& rec, const AngleData& data) {
  Polygon placed;
  try {
    placed = embed(rec.graph, data);
  } catch (const Error& e) {
    return failure("round-trip", std::string("embedding failed: ") + e.what());
  }
  const ValidationReport valid = validate_polygon(placed);
  if (!valid.ok()) {
    return failure("round-trip", "embedded polygon is invalid: " +
                                     std::string(to_string(valid.issue)) + " " + valid.detail);
  }
  const AngleData again = measure_angles(placed);
  for (int i = 0; i < data.size(); ++i) {
    const auto& want = data.vertices[static_cast<std::size_t>(i)];
    const auto& got = again.vertices[static_cast<std::size_t>(i)];
    if (want.degree != got.degree) {
      return failure("round-trip", "re-measured degree " + std::to_string(got.degree) +
                                       " instead of " + std::to_string(want.degree), i);
    }
    for (std::size_t t = 0; t < want.gaps.size(); ++t) {
      const double diff = std::abs(want.gaps[t] - got.gaps[t]);
      if (diff > kRoundTripAngleTolerance) {
        return failure("round-trip", "angle " + std::to_string(t + 1) + " re-measured off by " +
                                         std::to_string(diff), i);
      }
    }
  }
  return {};
}

}  // namespace

std::string ConsistencyReport::summary() const {
  if (consistent) return "Consistent";
  std::string s = "Inconsistent (" + stage;
  if (vertex >= 0) s += ", vertex " + std::to_string(vertex);
  s += "): " + detail;
  return s;
}

ConsistencyReport detect_inconsistency(const AngleData& data) {
  if (ConsistencyReport r = check_structure(data); !r.consistent) return r;
  std::optional<Reconstruction> rec;
  try {
    rec.emplace(reconstruct_improved(data));
  } catch (const Error& e) {
    return failure("reconstruction", e.what());
  }
  if (ConsistencyReport r = check_tables(*rec); !r.consistent) return r;
  return check_round_trip(*rec, data);
}

}  // namespace polyrecon
