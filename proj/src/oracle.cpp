#include "polyrecon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "polyrecon/errors.hpp"

namespace polyrecon {
namespace {

double max_coordinate(const std::vector<Point>& pts) {
  double m = 0.0;
  for (const Point& q : pts) m = std::max({m, std::abs(q.x), std::abs(q.y)});
  return m;
}

bool within_box(Point a, Point b, Point c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

// Closed-segment intersection with a collinearity tolerance.
bool segments_touch(Point a, Point b, Point c, Point d, double tol) {
  const Orientation o1 = orientation(a, b, c, tol);
  const Orientation o2 = orientation(a, b, d, tol);
  const Orientation o3 = orientation(c, d, a, tol);
  const Orientation o4 = orientation(c, d, b, tol);
  const auto opposite = [](Orientation x, Orientation y) {
    return (x == Orientation::CCW && y == Orientation::CW) ||
           (x == Orientation::CW && y == Orientation::CCW);
  };
  if (opposite(o1, o2) && opposite(o3, o4)) return true;
  if (o1 == Orientation::Collinear && within_box(a, b, c)) return true;
  if (o2 == Orientation::Collinear && within_box(a, b, d)) return true;
  if (o3 == Orientation::Collinear && within_box(c, d, a)) return true;
  if (o4 == Orientation::Collinear && within_box(c, d, b)) return true;
  return false;
}

// Exact-sign closed-segment intersection, used while untangling.
bool segments_intersect_exact(Point a, Point b, Point c, Point d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  return (d1 == 0 && within_box(a, b, c)) || (d2 == 0 && within_box(a, b, d)) ||
         (d3 == 0 && within_box(c, d, a)) || (d4 == 0 && within_box(c, d, b));
}

bool properly_cross(Point a, Point b, Point c, Point d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  if (!((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0))) return false;
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return (d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0);
}

bool point_in_polygon(const std::vector<Point>& v, Point m) {
  bool inside = false;
  const std::size_t n = v.size();
  for (std::size_t k = 0, prev = n - 1; k < n; prev = k++) {
    const Point& a = v[k];
    const Point& b = v[prev];
    if ((a.y > m.y) != (b.y > m.y)) {
      const double x = a.x + (m.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (m.x < x) inside = !inside;
    }
  }
  return inside;
}

std::string triple_name(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

// Finds a collinear triple in O(n^2 log n) for typical inputs: around each
// apex the other vertices are sorted by direction modulo pi, and only pairs
// whose angular separation could still produce an area under the tolerance
// are tested.
std::optional<std::string> find_collinear_triple(const std::vector<Point>& v, double tol) {
  const int n = static_cast<int>(v.size());
  struct Ray {
    double theta;
    double dist;
    int index;
  };
  std::vector<Ray> rays;
  rays.reserve(2 * static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    rays.clear();
    double dmin = std::numeric_limits<double>::infinity();
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      const Point d = v[q] - v[p];
      double theta = std::atan2(d.y, d.x);
      if (theta < 0) theta += kPi;
      if (theta >= kPi) theta -= kPi;
      const double dist = norm(d);
      dmin = std::min(dmin, dist);
      rays.push_back({theta, dist, q});
    }
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return a.theta < b.theta; });
    const std::size_t m = rays.size();
    for (std::size_t k = 0; k < m; ++k) rays.push_back({rays[k].theta + kPi, rays[k].dist, rays[k].index});
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < a + m; ++b) {
        const double gap = rays[b].theta - rays[a].theta;
        if (gap > kPi / 2) break;
        // |cross| >= dist_a * dmin * sin(gap); once that exceeds the area
        // tolerance no later b can be collinear with a.
        const double lower = rays[a].dist * dmin * std::sin(gap);
        if (lower > 4.0 * tol + 1e-15 * rays[a].dist * dmin) break;
        if (orientation(v[p], v[rays[a].index], v[rays[b].index], tol) == Orientation::Collinear) {
          return triple_name(p, rays[a].index, rays[b].index);
        }
      }
    }
  }
  return std::nullopt;
}

class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
  // 53 random mantissa bits; identical across standard libraries.
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(int n, std::uint64_t seed) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n) * 0xBF58476D1CE4E5B9ULL + 1;
}

// 2-opt untangling: reverse the sub-chain between any two crossing edges
// until none cross. Every move strictly shortens the tour, so this terminates.
bool untangle(std::vector<Point>& pts, std::size_t budget) {
  const int n = static_cast<int>(pts.size());
  std::size_t steps = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a + 2 < n; ++a) {
      for (int b = a + 2; b < n; ++b) {
        if (a == 0 && b == n - 1) continue;
        if (segments_intersect_exact(pts[a], pts[a + 1], pts[b], pts[(b + 1) % n])) {
          std::reverse(pts.begin() + a + 1, pts.begin() + b + 1);
          if (++steps > budget) return false;
          changed = true;
        }
      }
    }
  }
  return true;
}

void make_ccw(std::vector<Point>& pts) {
  Polygon tmp{pts};
  if (twice_signed_area(tmp) < 0.0) std::reverse(pts.begin() + 1, pts.end());
}

}  // namespace

std::string_view to_string(PolygonIssue issue) {
  switch (issue) {
    case PolygonIssue::None: return "OK";
    case PolygonIssue::TooFewVertices: return "TooFewVertices";
    case PolygonIssue::NotSimple: return "NotSimple";
    case PolygonIssue::NotCCW: return "NotCCW";
    case PolygonIssue::CollinearTriple: return "CollinearTriple";
  }
  return "Unknown";
}

ValidationReport validate_polygon(const Polygon& p) {
  const int n = p.size();
  if (n < 3) {
    return {PolygonIssue::TooFewVertices, std::to_string(n) + " vertices"};
  }
  const auto& v = p.vertices;
  for (int i = 0; i < n; ++i) {
    if (!is_finite(v[i])) {
      return {PolygonIssue::NotSimple, "vertex " + std::to_string(i) + " is not finite"};
    }
  }
  {
    std::vector<std::pair<Point, int>> sorted;
    sorted.reserve(v.size());
    for (int i = 0; i < n; ++i) sorted.emplace_back(v[i], i);
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.first.x < b.first.x || (a.first.x == b.first.x && a.first.y < b.first.y);
    });
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (sorted[k].first == sorted[k - 1].first) {
        return {PolygonIssue::NotSimple, "vertices " + std::to_string(sorted[k - 1].second) +
                                             " and " + std::to_string(sorted[k].second) +
                                             " coincide"};
      }
    }
  }

  const double m = max_coordinate(v);
  const double tol = kAreaTolerance * m * m;

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const bool adjacent = (b == a + 1) || (a == 0 && b == n - 1);
      if (adjacent) {
        // Shared vertex s; the edges overlap only if they fold back on each other.
        const int s = (b == a + 1) ? b : a;
        const Point u = p.at(s - 1);
        const Point w = p.at(s + 1);
        if (orientation(u, v[s], w, tol) == Orientation::Collinear && dot(u - v[s], w - v[s]) > 0) {
          return {PolygonIssue::NotSimple, "edges at vertex " + std::to_string(s) + " overlap"};
        }
        continue;
      }
      if (segments_touch(v[a], p.at(a + 1), v[b], p.at(b + 1), tol)) {
        return {PolygonIssue::NotSimple, "edges " + std::to_string(a) + " and " +
                                             std::to_string(b) + " intersect"};
      }
    }
  }

  if (!(twice_signed_area(p) > 0.0)) {
    return {PolygonIssue::NotCCW, "boundary is clockwise"};
  }

  if (auto triple = find_collinear_triple(v, tol)) {
    return {PolygonIssue::CollinearTriple, "vertices " + *triple + " are collinear"};
  }
  return {};
}

void require_valid(const Polygon& p) {
  const ValidationReport report = validate_polygon(p);
  if (!report.ok()) {
    throw InvalidPolygon(std::string(to_string(report.issue)) + ": " + report.detail);
  }
}

bool is_visible_bruteforce(const Polygon& p, int i, int j) {
  const int n = p.size();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    throw InvalidIndex("visibility query (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") invalid for n = " + std::to_string(n));
  }
  if (wrap_index(i + 1, n) == j || wrap_index(j + 1, n) == i) return true;

  const auto& v = p.vertices;
  const Point a = v[i];
  const Point b = v[j];
  for (int k = 0; k < n; ++k) {
    const int k1 = k + 1 == n ? 0 : k + 1;
    if (k == i || k == j || k1 == i || k1 == j) continue;
    if (properly_cross(a, b, v[k], v[k1])) return false;
  }
  return point_in_polygon(v, 0.5 * (a + b));
}

VisibilityGraph visibility_graph_oracle(const Polygon& p) {
  require_valid(p);
  const int n = p.size();
  VisibilityGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (is_visible_bruteforce(p, i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

AngleData measure_angles(const Polygon& p) {
  return measure_angles(p, visibility_graph_oracle(p));
}

AngleData measure_angles(const Polygon& p, const VisibilityGraph& g) {
  require_valid(p);
  const int n = p.size();
  if (g.vertex_count() != n) {
    throw SizeMismatch("graph has " + std::to_string(g.vertex_count()) + " vertices, polygon " +
                       std::to_string(n));
  }
  AngleData data;
  data.vertices.resize(static_cast<std::size_t>(n));
  std::vector<std::pair<double, int>> fan;
  for (int i = 0; i < n; ++i) {
    const Point origin = p.vertices[i];
    const Angle base = direction(origin, p.at(i + 1));
    fan.clear();
    for (int j : g.neighbors(i)) {
      fan.emplace_back(ccw_angle(base, direction(origin, p.vertices[j])).radians(), j);
    }
    std::sort(fan.begin(), fan.end());
    if (fan.size() < 2 || fan.front().second != wrap_index(i + 1, n) ||
        fan.back().second != wrap_index(i - 1, n)) {
      throw InvalidPolygon("visibility fan of vertex " + std::to_string(i) +
                           " does not run from v[i+1] to v[i-1]");
    }
    VertexAngles& out = data.vertices[static_cast<std::size_t>(i)];
    out.degree = static_cast<int>(fan.size());
    out.gaps.reserve(fan.size() - 1);
    for (std::size_t t = 0; t + 1 < fan.size(); ++t) {
      out.gaps.push_back(fan[t + 1].first - fan[t].first);
    }
  }
  return data;
}

bool is_convex(const Polygon& p) {
  const int n = p.size();
  if (n < 3) return false;
  for (int i = 0; i < n; ++i) {
    if (orientation(p.at(i - 1), p.vertices[i], p.at(i + 1)) != Orientation::CCW) return false;
  }
  return true;
}

Polygon random_simple_polygon(int n, std::uint64_t seed) {
  if (n < 3) {
    throw GenerationFailed("a polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  constexpr int kJitterRounds = 32;
  UnitRng rng(mix_seed(n, seed));
  const std::size_t budget = 100 * static_cast<std::size_t>(n) * static_cast<std::size_t>(n);

  std::vector<Point> pts(static_cast<std::size_t>(n));
  for (Point& q : pts) q = {rng.next(), rng.next()};

  for (int round = 0; round < kJitterRounds; ++round) {
    if (!untangle(pts, budget)) {
      throw GenerationFailed("2-opt untangling exceeded " + std::to_string(budget) + " steps");
    }
    make_ccw(pts);
    Polygon poly{pts};
    const ValidationReport report = validate_polygon(poly);
    if (report.ok()) return poly;
    for (Point& q : pts) {
      q.x += 1e-9 * (rng.next() - 0.5);
      q.y += 1e-9 * (rng.next() - 0.5);
    }
  }
  throw GenerationFailed("could not reach general position after " +
                         std::to_string(kJitterRounds) + " jitter rounds");
}

Polygon random_convex_polygon(int n, std::uint64_t seed) {
  if (n < 3) {
    throw GenerationFailed("a polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  UnitRng rng(mix_seed(n, seed) ^ 0xC0FFEEULL);
  Polygon poly;
  poly.vertices.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = kTwoPi * (k + 0.25 + 0.5 * rng.next()) / n;
    poly.vertices.push_back({std::cos(theta), std::sin(theta)});
  }
  return poly;
}

}  // namespace polyrecon
