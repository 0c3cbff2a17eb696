#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace polyrecon {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance for every angle comparison in the library (radians).
inline constexpr double kAngleTolerance = 1e-7;

/// Relative factor for the orientation predicate; the absolute tolerance on
/// the signed area is this times the squared largest coordinate magnitude.
inline constexpr double kAreaTolerance = 1e-12;

/// An angle in radians, kept in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  [[nodiscard]] double radians() const noexcept { return value_; }

  friend Angle operator+(Angle a, Angle b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(Angle a, Angle b) { return Angle(a.value_ - b.value_); }
  friend bool operator==(Angle, Angle) = default;

 private:
  double value_ = 0.0;
};

/// Reduces any finite value into [0, 2pi).
double normalize_angle(double radians);

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Rotates `p` counterclockwise by `radians` about the origin.
Point rotate(Point p, double radians);

/// CCW rotation from `from_dir` to `to_dir`.
Angle ccw_angle(Angle from_dir, Angle to_dir);

/// Direction of the ray p->q measured CCW from +x. Throws DegeneratePoints
/// when p == q.
Angle direction(Point p, Point q);

enum class Orientation { CCW, CW, Collinear };

/// Sign of the signed area of (p, q, r), with |area| <= kAreaTolerance * M^2
/// reported as Collinear (M = largest coordinate magnitude among the three).
Orientation orientation(Point p, Point q, Point r);

/// Same predicate with the absolute area tolerance supplied by the caller.
Orientation orientation(Point p, Point q, Point r, double area_tolerance);

/// Cumulative visibility angles around one vertex.
///
/// Rank t (1-based) names the t-th visible vertex in CCW order; the table
/// stores c[t], the CCW angle from rank 1 to rank t, so any range query is a
/// single subtraction.
class PrefixTable {
 public:
  PrefixTable() = default;

  /// `gaps` holds the degree-1 consecutive angles. Throws
  /// InvalidAngleSequence on a wrong length, a non-positive gap or a total
  /// of 2pi or more.
  PrefixTable(std::span<const double> gaps, std::size_t degree);

  [[nodiscard]] std::size_t degree() const noexcept { return cumulative_.size(); }

  /// c[t] for 1 <= t <= degree.
  [[nodiscard]] double cumulative(std::size_t rank) const;

  /// CCW angle from rank s to rank t, 1 <= s < t <= degree. Throws
  /// RankOutOfRange otherwise.
  [[nodiscard]] double angle_between(std::size_t s, std::size_t t) const;

  /// Angle spanned from the first to the last visible vertex.
  [[nodiscard]] double interior_angle() const noexcept {
    return cumulative_.empty() ? 0.0 : cumulative_.back();
  }

  /// Unchecked variant of angle_between for hot loops.
  [[nodiscard]] double span_unchecked(std::size_t s, std::size_t t) const noexcept {
    return cumulative_[t - 1] - cumulative_[s - 1];
  }

 private:
  std::vector<double> cumulative_;
};

PrefixTable build_prefix(std::span<const double> gaps, std::size_t degree);
double angle_between(const PrefixTable& table, std::size_t s, std::size_t t);

}  // namespace polyrecon
