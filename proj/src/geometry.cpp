#include "sylvester/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <locale>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sylvester/errors.hpp"
#include "sylvester/restriction.hpp"

namespace sylvester {

namespace {

constexpr double kPi = std::numbers::pi;

double mod_pi(double angle) {
  double r = std::fmod(angle, kPi);
  if (r < 0) r += kPi;
  return r >= kPi ? 0.0 : r;
}

bool inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const double d1 = orientation(a, b, p);
  const double d2 = orientation(b, c, p);
  const double d3 = orientation(c, a, p);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

struct WordTally {
  std::array<std::uint64_t, 16> counts{};
  WordTally& operator+=(const WordTally& o) {
    for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += o.counts[k];
    return *this;
  }
};

struct HitTally {
  std::uint64_t hits = 0;
  HitTally& operator+=(const HitTally& o) {
    hits += o.hits;
    return *this;
  }
};

const std::vector<ReducedWord>& quad_words() {
  static const std::vector<ReducedWord> words = enumerate_words(4);
  return words;
}

std::size_t quad_index(const ReducedWord& v) {
  const auto& words = quad_words();
  const auto it = std::lower_bound(words.begin(), words.end(), v);
  if (it == words.end() || *it != v) throw NotFullWord("'" + to_string(v) + "' is not a word of S_4");
  return static_cast<std::size_t>(it - words.begin());
}

}  // namespace

Region Region::unit_square() { return Region(Kind::UnitSquare, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

Region Region::unit_disk() { return Region(Kind::UnitDisk, {}); }

Region Region::triangle(const Point& a, const Point& b, const Point& c) {
  if (orientation(a, b, c) <= 0) throw InvalidRegion("triangle vertices must be counterclockwise");
  return Region(Kind::Triangle, {a, b, c});
}

Region Region::convex_polygon(std::vector<Point> vertices) {
  const std::size_t m = vertices.size();
  if (m < 3) throw InvalidRegion("polygon needs at least 3 vertices");
  for (std::size_t k = 0; k < m; ++k)
    if (orientation(vertices[k], vertices[(k + 1) % m], vertices[(k + 2) % m]) <= 0)
      throw InvalidRegion("polygon vertices must be in strictly convex counterclockwise position");
  return Region(Kind::ConvexPolygon, std::move(vertices));
}

Region Region::from_name(const std::string& name) {
  if (name == "square") return unit_square();
  if (name == "disk") return unit_disk();
  if (name == "triangle") return unit_triangle();
  throw InvalidRegion("unknown region '" + name + "' (expected square, disk or triangle)");
}

bool Region::contains(const Point& p) const {
  switch (kind_) {
    case Kind::UnitSquare:
      return p.x() >= 0 && p.x() <= 1 && p.y() >= 0 && p.y() <= 1;
    case Kind::UnitDisk:
      return p.squaredNorm() <= 1.0;
    case Kind::Triangle:
    case Kind::ConvexPolygon:
      for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (orientation(vertices_[k], vertices_[(k + 1) % vertices_.size()], p) < 0) return false;
      return true;
  }
  return false;
}

bool hull_is_triangle(const Point& a, const Point& b, const Point& c, const Point& d) {
  return inside_triangle(a, b, c, d) || inside_triangle(b, a, c, d) || inside_triangle(c, a, b, d) ||
         inside_triangle(d, a, b, c);
}

bool check_general_position(const PointConfig& config, double tol) {
  const auto& pts = config.points;
  const std::size_t n = pts.size();
  std::vector<double> directions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point d = pts[j] - pts[i];
      if (d.norm() <= tol) return false;
      directions.push_back(mod_pi(std::atan2(d.y(), d.x())));
      for (std::size_t k = j + 1; k < n; ++k)
        if (std::abs(orientation(pts[i], pts[j], pts[k])) <= tol) return false;
    }
  }
  if (directions.size() < 2) return true;
  std::sort(directions.begin(), directions.end());
  for (std::size_t k = 1; k < directions.size(); ++k)
    if (directions[k] - directions[k - 1] <= tol) return false;
  return directions.front() + kPi - directions.back() > tol;
}

std::vector<SweepEvent> sweep_events(const PointConfig& config, double tol) {
  const auto& pts = config.points;
  std::vector<SweepEvent> events;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(pts.size()); ++j) {
      const Point d = pts[j] - pts[i];
      double theta = mod_pi(std::atan2(d.y(), d.x()) + kPi / 2 - config.line_angle);
      if (theta < tol || theta > kPi - tol) theta = 0.0;
      events.push_back({theta, i, j});
    }
  }
  std::sort(events.begin(), events.end(),
            [](const SweepEvent& x, const SweepEvent& y) { return x.theta < y.theta; });
  return events;
}

ReducedWord phi(const PointConfig& config, double tol) {
  const int n = static_cast<int>(config.points.size());
  if (n < 1) throw DegenerateConfiguration("empty point set");
  if (!check_general_position(config, tol))
    throw DegenerateConfiguration("points are not in general position");

  const auto events = sweep_events(config, tol);
  for (std::size_t k = 1; k < events.size(); ++k)
    if (events[k].theta <= events[k - 1].theta)
      throw DegenerateConfiguration("sweep events are not strictly ordered");

  // A pair orthogonal to the line itself: label on the line turned back by
  // half the next event angle.
  double label_angle = config.line_angle;
  if (!events.empty() && events.front().theta == 0.0)
    label_angle -= events.size() > 1 ? events[1].theta / 2 : kPi / 2;
  const Point dir(std::cos(label_angle), std::sin(label_angle));

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return config.points[a].dot(dir) < config.points[b].dot(dir); });
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) position[order[p]] = p;

  ReducedWord word{n, {}};
  word.letters.reserve(events.size());
  for (const auto& e : events) {
    const int pi = position[e.i];
    const int pj = position[e.j];
    if (std::abs(pi - pj) != 1)
      throw DegenerateConfiguration("event swaps non-adjacent points");
    const int left = std::min(pi, pj);
    word.letters.push_back(left + 1);
    std::swap(order[left], order[left + 1]);
    position[order[left]] = left;
    position[order[left + 1]] = left + 1;
  }
  if (!is_reduced_word_for_long_word(word))
    throw DegenerateConfiguration("sweep did not reverse the projection order");
  return word;
}

PointConfig sample_region(const Region& region, int n, CounterStream& rng, const SampleOptions& options) {
  if (n < 1) throw InvalidArgument("sample_region needs n >= 1");
  auto draw = [&]() -> Point {
    switch (region.kind()) {
      case Region::Kind::UnitSquare:
        return {rng.uniform(), rng.uniform()};
      case Region::Kind::UnitDisk: {
        const double r = std::sqrt(rng.uniform());
        const double t = 2 * kPi * rng.uniform();
        return {r * std::cos(t), r * std::sin(t)};
      }
      default: {
        Point lo = region.vertices().front();
        Point hi = lo;
        for (const auto& v : region.vertices()) {
          lo = lo.cwiseMin(v);
          hi = hi.cwiseMax(v);
        }
        for (;;) {
          const Point p(lo.x() + (hi.x() - lo.x()) * rng.uniform(),
                        lo.y() + (hi.y() - lo.y()) * rng.uniform());
          if (region.contains(p)) return p;
        }
      }
    }
  };
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    PointConfig config{{}, options.line_angle};
    config.points.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) config.points.push_back(draw());
    if (check_general_position(config, options.tol)) return config;
  }
  throw RetriesExhausted("no general-position sample after " + std::to_string(options.max_retries) +
                         " retries");
}

std::string flip_class_key(const ReducedWord& v) { return std::min(to_string(v), to_string(flip(v))); }

std::uint64_t ClassHistogram::reentrant() const {
  std::uint64_t total = 0;
  for (const auto& w : class_members(QuadClass::Reentrant)) {
    const auto key = flip_class_key(w);
    if (key != to_string(w)) continue;  // count each flip pair once
    const auto it = counts.find(key);
    if (it != counts.end()) total += it->second;
  }
  return total;
}

ClassHistogram estimate_f4(const Region& region, std::uint64_t trials, std::uint64_t seed, int workers) {
  const auto tally = parallel_trials<WordTally>(trials, workers, [&](WordTally& acc, std::uint64_t t) {
    CounterStream rng(seed, t);
    ++acc.counts[quad_index(phi(sample_region(region, 4, rng)))];
  });
  ClassHistogram h;
  h.trials = trials;
  const auto& words = quad_words();
  for (std::size_t k = 0; k < words.size(); ++k) h.counts[flip_class_key(words[k])] += tally.counts[k];
  return h;
}

Estimate sylvester_probability_mc(const Region& region, std::uint64_t trials, std::uint64_t seed,
                                  int workers) {
  const auto tally = parallel_trials<HitTally>(trials, workers, [&](HitTally& acc, std::uint64_t t) {
    CounterStream rng(seed, t);
    const auto c = sample_region(region, 4, rng);
    if (hull_is_triangle(c.points[0], c.points[1], c.points[2], c.points[3])) ++acc.hits;
  });
  return {trials, tally.hits};
}

Estimate geometric_restriction_probability(const Region& region, int n, std::uint64_t trials,
                                           std::uint64_t seed, int workers) {
  if (n < 4) throw InvalidArgument("geometric_restriction_probability needs n >= 4");
  const auto tally = parallel_trials<HitTally>(trials, workers, [&](HitTally& acc, std::uint64_t t) {
    CounterStream rng(seed, t);
    const ReducedWord w = phi(sample_region(region, n, rng));
    if (is_reentrant(restrict(w, sample_subset(n, 4, rng)))) ++acc.hits;
  });
  return {trials, tally.hits};
}

std::string histogram_csv(const ClassHistogram& h) {
  std::string out = "class_key,count,fraction\n";
  for (const auto& [key, count] : h.counts) {
    const double fraction = h.trials == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(h.trials);
    out += key + ',' + std::to_string(count) + ',' + format_fixed(fraction, 6) + '\n';
  }
  return out;
}

PointConfig read_point_config(std::istream& in, double line_angle) {
  PointConfig config{{}, line_angle};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    double x = 0, y = 0;
    std::string rest;
    if (!(fields >> x >> y) || (fields >> rest))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x y'");
    config.points.emplace_back(x, y);
  }
  return config;
}

}  // namespace sylvester
