#pragma once

// The sweep map from labelled planar point sets to reduced words of w0, and
// Monte Carlo experiments over uniformly sampled regions.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "sylvester/core.hpp"
#include "sylvester/montecarlo.hpp"
#include "sylvester/random.hpp"

namespace sylvester {

using Point = Eigen::Vector2d;

/// Angle below which two event directions (mod pi) are considered equal.
inline constexpr double kAngleTolerance = 1e-9;

struct PointConfig {
  std::vector<Point> points;
  /// Direction of the reference line, radians in [0, 2 pi).
  double line_angle = 0.0;
};

/// The angle in [0, pi) at which the rotating line becomes orthogonal to
/// the line through points i and j (indices into PointConfig::points).
struct SweepEvent {
  double theta = 0.0;
  int i = 0;
  int j = 0;
};

class Region {
 public:
  enum class Kind { UnitSquare, UnitDisk, Triangle, ConvexPolygon };

  static Region unit_square();
  static Region unit_disk();
  /// Vertices in counterclockwise order, else InvalidRegion.
  static Region triangle(const Point& a, const Point& b, const Point& c);
  static Region convex_polygon(std::vector<Point> vertices);
  /// The triangle (0,0), (1,0), (0,1).
  static Region unit_triangle() { return triangle({0, 0}, {1, 0}, {0, 1}); }
  /// "square", "disk" or "triangle".
  static Region from_name(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  bool contains(const Point& p) const;

 private:
  Region(Kind kind, std::vector<Point> vertices) : kind_(kind), vertices_(std::move(vertices)) {}
  Kind kind_;
  std::vector<Point> vertices_;
};

/// Twice the signed area of (a, b, c); positive for a left turn.
inline double orientation(const Point& a, const Point& b, const Point& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

/// True iff one of the four points lies inside the triangle of the others.
bool hull_is_triangle(const Point& a, const Point& b, const Point& c, const Point& d);

/// No coincident points, no collinear triple (|2 * area| <= tol) and no two
/// pair directions within tol of each other modulo pi.
bool check_general_position(const PointConfig& config, double tol = kAngleTolerance);

/// Events sorted by theta, with the near-zero event (if any) pinned to 0.
std::vector<SweepEvent> sweep_events(const PointConfig& config, double tol = kAngleTolerance);

/// Labels points by projection onto the line, then replays the sorted
/// events as adjacent swaps. Throws DegenerateConfiguration.
ReducedWord phi(const PointConfig& config, double tol = kAngleTolerance);

struct SampleOptions {
  double line_angle = 0.0;
  double tol = kAngleTolerance;
  int max_retries = 100;
};

/// n independent uniform points, resampled until in general position.
/// Throws RetriesExhausted.
PointConfig sample_region(const Region& region, int n, CounterStream& rng, const SampleOptions& options = {});

/// Histogram over the 8 classes of R(w0 in S_4) modulo flip, keyed by the
/// lexicographically smaller word of each flip pair.
struct ClassHistogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t trials = 0;

  /// Mass on the two keys holding the reentrant words.
  std::uint64_t reentrant() const;
};

/// Lexicographically smaller of to_string(v) and to_string(flip(v)).
std::string flip_class_key(const ReducedWord& v);

ClassHistogram estimate_f4(const Region& region, std::uint64_t trials, std::uint64_t seed, int workers = 1);

/// Fraction of 4-point samples whose hull is a triangle, by direct test.
Estimate sylvester_probability_mc(const Region& region, std::uint64_t trials, std::uint64_t seed,
                                  int workers = 1);

/// n-point samples mapped through phi, restricted to a uniform 4-subset.
Estimate geometric_restriction_probability(const Region& region, int n, std::uint64_t trials,
                                           std::uint64_t seed, int workers = 1);

/// `class_key,count,fraction`, one row per class in key order.
std::string histogram_csv(const ClassHistogram& histogram);

/// One "x y" pair per line; blank lines and lines starting with '#' skipped.
PointConfig read_point_config(std::istream& in, double line_angle = 0.0);

}  // namespace sylvester
