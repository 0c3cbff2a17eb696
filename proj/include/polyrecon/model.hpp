#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polyrecon/geom.hpp"

namespace polyrecon {

/// Reduces a (possibly negative) vertex index into [0, n).
inline int wrap_index(long long i, int n) {
  const long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// Simple polygon, vertices in CCW boundary order. Indices wrap modulo n.
struct Polygon {
  std::vector<Point> vertices;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(vertices.size()); }
  [[nodiscard]] const Point& at(long long i) const { return vertices[wrap_index(i, size())]; }
  friend bool operator==(const Polygon&, const Polygon&) = default;
};

/// Twice the signed area (positive for CCW).
double twice_signed_area(const Polygon& p);

/// Undirected graph over polygon vertices, stored as a bit matrix so that
/// membership tests and repeated insertions are O(1).
class VisibilityGraph {
 public:
  VisibilityGraph() = default;
  explicit VisibilityGraph(int n);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }

  /// Inserting an existing edge is a no-op.
  void add_edge(int i, int j);
  [[nodiscard]] bool contains(int i, int j) const;
  [[nodiscard]] int degree(int i) const { return degree_.at(i); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

  /// Neighbours of i, ascending.
  [[nodiscard]] std::vector<int> neighbors(int i) const;

  /// Every edge as (i, j) with i < j, lexicographically sorted.
  [[nodiscard]] std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const VisibilityGraph&, const VisibilityGraph&) = default;

 private:
  [[nodiscard]] bool bit(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] >>
            (j & 63)) & 1U;
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> degree_;
  std::size_t edge_count_ = 0;
};

/// The angles measured at one vertex: its degree and the degree-1 CCW gaps
/// between consecutive visible vertices, starting at the ray to v_{i+1}.
struct VertexAngles {
  int degree = 0;
  std::vector<double> gaps;

  friend bool operator==(const VertexAngles&, const VertexAngles&) = default;
};

/// Reconstruction input: one VertexAngles per vertex, in boundary order.
struct AngleData {
  std::vector<VertexAngles> vertices;

  [[nodiscard]] int size() const noexcept { return static_cast<int>(vertices.size()); }
  friend bool operator==(const AngleData&, const AngleData&) = default;
};

/// Sum of all per-vertex angle totals (equals (n-2)pi for a real polygon).
double total_interior_angle(const AngleData& data);

}  // namespace polyrecon
