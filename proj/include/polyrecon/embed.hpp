#pragma once

#include <array>
#include <utility>
#include <vector>

#include "polyrecon/geom.hpp"
#include "polyrecon/model.hpp"

namespace polyrecon {

/// Triangulation of the polygon by visibility edges. Triangles are stored
/// with their corners in boundary order (a < b < c), which is CCW. Each
/// triangle except the root hangs off the diagonal it shares with its parent;
/// parents precede children.
struct Triangulation {
  std::vector<std::array<int, 3>> triangles;
  /// Index of the parent triangle, -1 for the root.
  std::vector<int> parent;
  /// Diagonals (a, c) with a < c; entry t - 1 is the one triangle t shares
  /// with its parent.
  std::vector<std::pair<int, int>> diagonals;
};

/// CCW visibility rank of every neighbour, recovered from the graph: the
/// angular order around a vertex follows boundary order from v_{i+1}.
class NeighborRanks {
 public:
  explicit NeighborRanks(const VisibilityGraph& g);

  /// 1-based rank of `target` around `i`; throws MalformedGraph if `target`
  /// is not a neighbour.
  [[nodiscard]] int rank(int i, int target) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> ordered_;  // neighbours by forward distance
};

/// Splits the chain (i, j), seeded with (0, n-1), at the largest-index vertex
/// of ch(v_{i+1}, v_{j-1}) visible to v_i, which sees v_j as well. Throws
/// MalformedGraph when a split vertex is missing or does not see v_j.
Triangulation triangulate(const VisibilityGraph& g, const AngleData& data);

/// Corner angles (at a, b, c) of triangle (a, b, c), read from the angle data
/// through the neighbour ranks.
std::array<double, 3> corner_angles(const NeighborRanks& ranks, const AngleData& data,
                                    const std::array<int, 3>& triangle);

/// Places the polygon with v_0 at the origin and v_{n-1} at (1, 0), walking
/// the triangulation from the root and locating each new corner by the law
/// of sines. Throws MalformedGraph or NumericallyDegenerate.
Polygon embed(const VisibilityGraph& g, const AngleData& data);

struct SimilarityReport {
  bool matched = false;
  double scale = 1.0;
  Angle rotation;
  Point translation;
  /// Largest |T(p_k) - q_k| divided by the diameter of q.
  double max_relative_deviation = 0.0;
};

/// Least-squares direct similarity T (rotation, uniform scale, translation)
/// taking p onto q with vertex k matched to vertex k. Throws SizeMismatch.
SimilarityReport similarity_compare(const Polygon& p, const Polygon& q, double tol);

/// Largest distance between two vertices.
double diameter(const Polygon& p);

}  // namespace polyrecon
