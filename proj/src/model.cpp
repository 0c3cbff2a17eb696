#include "polyrecon/model.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "polyrecon/errors.hpp"

namespace polyrecon {

double twice_signed_area(const Polygon& p) {
  const int n = p.size();
  double area = 0.0;
  for (int i = 0; i < n; ++i) {
    area += cross(p.vertices[i], p.at(i + 1));
  }
  return area;
}

VisibilityGraph::VisibilityGraph(int n)
    : n_(n),
      words_(static_cast<std::size_t>((n + 63) / 64)),
      rows_(static_cast<std::size_t>(n) * words_, 0),
      degree_(static_cast<std::size_t>(n), 0) {
  if (n < 0) throw InvalidIndex("negative vertex count");
}

void VisibilityGraph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) {
    throw InvalidIndex("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                       ") invalid for n = " + std::to_string(n_));
  }
  if (bit(i, j)) return;
  rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] |=
      std::uint64_t{1} << (j & 63);
  rows_[static_cast<std::size_t>(j) * words_ + static_cast<std::size_t>(i >> 6)] |=
      std::uint64_t{1} << (i & 63);
  ++degree_[i];
  ++degree_[j];
  ++edge_count_;
}

bool VisibilityGraph::contains(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw InvalidIndex("vertex index out of range");
  }
  return i != j && bit(i, j);
}

std::vector<int> VisibilityGraph::neighbors(int i) const {
  if (i < 0 || i >= n_) throw InvalidIndex("vertex index out of range");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree_[i]));
  const std::uint64_t* row = rows_.data() + static_cast<std::size_t>(i) * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = row[w];
    while (bits != 0) {
      out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<int, int>> VisibilityGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int i = 0; i < n_; ++i) {
    for (int j : neighbors(i)) {
      if (j > i) out.emplace_back(i, j);
    }
  }
  return out;
}

double total_interior_angle(const AngleData& data) {
  double total = 0.0;
  for (const auto& v : data.vertices) {
    total += std::accumulate(v.gaps.begin(), v.gaps.end(), 0.0);
  }
  return total;
}

}  // namespace polyrecon
