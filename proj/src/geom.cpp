#include "polyrecon/geom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "polyrecon/errors.hpp"

namespace polyrecon {

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("angle must be finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Angle::Angle(double radians) : value_(normalize_angle(radians)) {}

Point rotate(Point p, double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

Angle ccw_angle(Angle from_dir, Angle to_dir) { return to_dir - from_dir; }

Angle direction(Point p, Point q) {
  if (p == q) {
    throw DegeneratePoints("direction of a zero-length ray");
  }
  return Angle(std::atan2(q.y - p.y, q.x - p.x));
}

Orientation orientation(Point p, Point q, Point r, double area_tolerance) {
  const double area = 0.5 * cross(q - p, r - p);
  if (std::abs(area) <= area_tolerance) return Orientation::Collinear;
  return area > 0.0 ? Orientation::CCW : Orientation::CW;
}

Orientation orientation(Point p, Point q, Point r) {
  const double m = std::max({std::abs(p.x), std::abs(p.y), std::abs(q.x),
                             std::abs(q.y), std::abs(r.x), std::abs(r.y)});
  return orientation(p, q, r, kAreaTolerance * m * m);
}

PrefixTable::PrefixTable(std::span<const double> gaps, std::size_t degree) {
  if (degree == 0 || gaps.size() + 1 != degree) {
    throw InvalidAngleSequence("expected " + std::to_string(degree == 0 ? 0 : degree - 1) +
                               " angles, got " + std::to_string(gaps.size()));
  }
  cumulative_.reserve(degree);
  cumulative_.push_back(0.0);
  double total = 0.0;
  for (double g : gaps) {
    if (!(g > 0.0)) {
      throw InvalidAngleSequence("non-positive visibility angle " + std::to_string(g));
    }
    total += g;
    cumulative_.push_back(total);
  }
  if (!(total < kTwoPi)) {
    throw InvalidAngleSequence("visibility angles sum to " + std::to_string(total) +
                               ", not below 2pi");
  }
}

double PrefixTable::cumulative(std::size_t rank) const {
  if (rank < 1 || rank > cumulative_.size()) {
    throw RankOutOfRange("rank " + std::to_string(rank) + " outside 1.." +
                         std::to_string(cumulative_.size()));
  }
  return cumulative_[rank - 1];
}

double PrefixTable::angle_between(std::size_t s, std::size_t t) const {
  if (s < 1 || s >= t || t > cumulative_.size()) {
    throw RankOutOfRange("rank pair (" + std::to_string(s) + ", " + std::to_string(t) +
                         ") invalid for degree " + std::to_string(cumulative_.size()));
  }
  return cumulative_[t - 1] - cumulative_[s - 1];
}

PrefixTable build_prefix(std::span<const double> gaps, std::size_t degree) {
  return PrefixTable(gaps, degree);
}

double angle_between(const PrefixTable& table, std::size_t s, std::size_t t) {
  return table.angle_between(s, t);
}

}  // namespace polyrecon
