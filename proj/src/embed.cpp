#include "polyrecon/embed.hpp"

#include <algorithm>
#include <complex>
#include <string>

#include "polyrecon/errors.hpp"

namespace polyrecon {

NeighborRanks::NeighborRanks(const VisibilityGraph& g) : n_(g.vertex_count()) {
  ordered_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    // neighbors() is ascending; rotate so the list starts after i.
    std::vector<int> nb = g.neighbors(i);
    const auto pivot = std::upper_bound(nb.begin(), nb.end(), i);
    std::rotate(nb.begin(), pivot, nb.end());
    ordered_[i] = std::move(nb);
  }
}

int NeighborRanks::rank(int i, int target) const {
  const auto& nb = ordered_.at(static_cast<std::size_t>(i));
  const auto dist = [&](int v) { return wrap_index(static_cast<long long>(v) - i, n_); };
  const auto it = std::lower_bound(nb.begin(), nb.end(), target,
                                   [&](int a, int b) { return dist(a) < dist(b); });
  if (it == nb.end() || *it != target) {
    throw MalformedGraph("vertex " + std::to_string(target) + " is not a neighbour of " +
                         std::to_string(i));
  }
  return static_cast<int>(it - nb.begin()) + 1;
}

Triangulation triangulate(const VisibilityGraph& g, const AngleData& data) {
  const int n = g.vertex_count();
  if (n < 3 || data.size() != n) {
    throw MalformedGraph("graph and angle data disagree on the vertex count");
  }
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) != data.vertices[static_cast<std::size_t>(i)].degree) {
      throw MalformedGraph("degree of vertex " + std::to_string(i) +
                           " disagrees with the angle data");
    }
    if (!g.contains(i, wrap_index(i + 1, n))) {
      throw MalformedGraph("boundary edge missing at vertex " + std::to_string(i));
    }
  }

  Triangulation out;
  out.triangles.reserve(static_cast<std::size_t>(n - 2));
  out.parent.reserve(static_cast<std::size_t>(n - 2));

  struct Chain {
    int i;
    int j;
    int parent;
  };
  std::vector<Chain> pending{{0, n - 1, -1}};
  std::vector<int> nb;
  while (!pending.empty()) {
    const Chain chain = pending.back();
    pending.pop_back();
    nb = g.neighbors(chain.i);
    const auto it = std::lower_bound(nb.begin(), nb.end(), chain.j);
    if (it == nb.begin() || *(it - 1) <= chain.i) {
      throw MalformedGraph("no vertex between " + std::to_string(chain.i) + " and " +
                           std::to_string(chain.j) + " is visible to " + std::to_string(chain.i));
    }
    const int l = *(it - 1);
    if (!g.contains(l, chain.j)) {
      throw MalformedGraph("split vertex " + std::to_string(l) + " does not see " +
                           std::to_string(chain.j));
    }
    const int index = static_cast<int>(out.triangles.size());
    out.triangles.push_back({chain.i, l, chain.j});
    out.parent.push_back(chain.parent);
    if (chain.parent >= 0) out.diagonals.emplace_back(chain.i, chain.j);
    if (chain.j - l >= 2) pending.push_back({l, chain.j, index});
    if (l - chain.i >= 2) pending.push_back({chain.i, l, index});
  }
  return out;
}

std::array<double, 3> corner_angles(const NeighborRanks& ranks, const AngleData& data,
                                    const std::array<int, 3>& triangle) {
  const auto [a, b, c] = triangle;
  const auto fan_angle = [&](int v, int from, int to) {
    const auto& angles = data.vertices.at(static_cast<std::size_t>(v));
    const PrefixTable table(angles.gaps, static_cast<std::size_t>(angles.degree));
    return table.angle_between(static_cast<std::size_t>(ranks.rank(v, from)),
                               static_cast<std::size_t>(ranks.rank(v, to)));
  };
  // Around a the ray to b precedes the ray to c; around b, c precedes a;
  // around c, a precedes b.
  return {fan_angle(a, b, c), fan_angle(b, c, a), fan_angle(c, a, b)};
}

Polygon embed(const VisibilityGraph& g, const AngleData& data) {
  const Triangulation tri = triangulate(g, data);
  const NeighborRanks ranks(g);
  const int n = g.vertex_count();

  std::vector<PrefixTable> tables;
  tables.reserve(static_cast<std::size_t>(n));
  for (const auto& v : data.vertices) {
    tables.emplace_back(v.gaps, static_cast<std::size_t>(v.degree));
  }
  const auto fan_angle = [&](int v, int from, int to) {
    return tables[static_cast<std::size_t>(v)].angle_between(
        static_cast<std::size_t>(ranks.rank(v, from)), static_cast<std::size_t>(ranks.rank(v, to)));
  };

  Polygon out;
  out.vertices.assign(static_cast<std::size_t>(n), Point{});
  out.vertices[0] = {0.0, 0.0};
  out.vertices[static_cast<std::size_t>(n - 1)] = {1.0, 0.0};

  // Each triangle's outer corners a and c are already placed (the root's by
  // normalization, the rest by their parent); only the middle corner b is new.
  for (const auto& [a, b, c] : tri.triangles) {
    const double at_a = fan_angle(a, b, c);
    const double at_b = fan_angle(b, c, a);
    const double at_c = fan_angle(c, a, b);
    if (at_a <= kAngleTolerance || at_b <= kAngleTolerance || at_c <= kAngleTolerance) {
      throw NumericallyDegenerate("triangle (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ", " + std::to_string(c) + ") has a vanishing corner angle");
    }
    const Point pa = out.vertices[static_cast<std::size_t>(a)];
    const Point pc = out.vertices[static_cast<std::size_t>(c)];
    // |ab| / |ac| = sin(C) / sin(B); the ray a->b is a->c turned clockwise by A.
    const double ratio = std::sin(at_c) / std::sin(at_b);
    out.vertices[static_cast<std::size_t>(b)] = pa + ratio * rotate(pc - pa, -at_a);
  }

  if (twice_signed_area(out) < 0.0) {
    for (Point& v : out.vertices) v.y = -v.y;
  }
  return out;
}

double diameter(const Polygon& p) {
  double best = 0.0;
  const auto& v = p.vertices;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      const Point d = v[a] - v[b];
      best = std::max(best, d.x * d.x + d.y * d.y);
    }
  }
  return std::sqrt(best);
}

SimilarityReport similarity_compare(const Polygon& p, const Polygon& q, double tol) {
  if (p.size() != q.size() || p.size() == 0) {
    throw SizeMismatch("polygons have " + std::to_string(p.size()) + " and " +
                       std::to_string(q.size()) + " vertices");
  }
  using C = std::complex<double>;
  const auto n = static_cast<double>(p.size());
  C p_mean{};
  C q_mean{};
  for (int k = 0; k < p.size(); ++k) {
    p_mean += C(p.vertices[k].x, p.vertices[k].y);
    q_mean += C(q.vertices[k].x, q.vertices[k].y);
  }
  p_mean /= n;
  q_mean /= n;

  // Minimizing sum |z * p_k + t - q_k|^2 over complex z gives
  // z = sum conj(p_k') q_k' / sum |p_k'|^2 in centroid coordinates.
  C num{};
  double den = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    const C pk = C(p.vertices[k].x, p.vertices[k].y) - p_mean;
    const C qk = C(q.vertices[k].x, q.vertices[k].y) - q_mean;
    num += std::conj(pk) * qk;
    den += std::norm(pk);
  }
  if (!(den > 0.0)) throw NumericallyDegenerate("source polygon has zero extent");
  const C z = num / den;
  const C t = q_mean - z * p_mean;

  double worst = 0.0;
  for (int k = 0; k < p.size(); ++k) {
    const C mapped = z * C(p.vertices[k].x, p.vertices[k].y) + t;
    worst = std::max(worst, std::abs(mapped - C(q.vertices[k].x, q.vertices[k].y)));
  }
  const double diam = diameter(q);

  SimilarityReport report;
  report.scale = std::abs(z);
  report.rotation = Angle(std::arg(z));
  report.translation = {t.real(), t.imag()};
  report.max_relative_deviation = diam > 0.0 ? worst / diam : worst;
  report.matched = report.max_relative_deviation <= tol;
  return report;
}

}  // namespace polyrecon
