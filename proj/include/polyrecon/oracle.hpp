#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "polyrecon/model.hpp"

namespace polyrecon {

enum class PolygonIssue { None, TooFewVertices, NotSimple, NotCCW, CollinearTriple };

std::string_view to_string(PolygonIssue issue);

struct ValidationReport {
  PolygonIssue issue = PolygonIssue::None;
  std::string detail;

  [[nodiscard]] bool ok() const noexcept { return issue == PolygonIssue::None; }
};

/// Checks, in order: at least three vertices, a simple boundary, CCW
/// orientation and general position. Reports the first violation.
ValidationReport validate_polygon(const Polygon& p);

/// Throws InvalidPolygon (message starts with the issue name) unless valid.
void require_valid(const Polygon& p);

/// Brute-force visibility between two vertices of a valid polygon in O(n).
/// Boundary neighbours always see each other; otherwise the open segment must
/// cross no boundary edge and its midpoint must lie inside the polygon.
bool is_visible_bruteforce(const Polygon& p, int i, int j);

/// All-pairs brute-force visibility graph, O(n^3).
VisibilityGraph visibility_graph_oracle(const Polygon& p);

/// Angle data of a valid polygon, using the brute-force visibility graph.
AngleData measure_angles(const Polygon& p);

/// Angle data of `p` given its visibility graph. The caller vouches that `g`
/// is the visibility graph of `p`; only the boundary-neighbour endpoints of
/// each angular order are checked.
AngleData measure_angles(const Polygon& p, const VisibilityGraph& g);

/// True when every vertex is a strictly convex corner (CCW turn).
bool is_convex(const Polygon& p);

/// Random simple polygon with n vertices in the unit square, deterministic in
/// (n, seed). Throws GenerationFailed for n < 3 or when untangling exceeds its
/// step budget.
Polygon random_simple_polygon(int n, std::uint64_t seed);

/// Random convex polygon: n points on the unit circle with jittered,
/// well-separated polar angles. Deterministic in (n, seed).
Polygon random_convex_polygon(int n, std::uint64_t seed);

}  // namespace polyrecon
