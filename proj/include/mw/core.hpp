#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace mw {

/// Point in R^d. All coordinates must be finite.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c);
  static Point scalar(double x) { return Point{{x}}; }

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
};

/// Exact comparison at the bit level (distinguishes -0.0 from +0.0).
bool bitwise_equal(const Point& a, const Point& b);

/// Total lexicographic order: by coordinate value, sign bit as tiebreak so
/// that -0.0 sorts before +0.0. Points must have equal dimension.
bool lex_less(const Point& a, const Point& b);

/// Unordered collection of points with repetitions, at most `max_size_bound`
/// elements when the bound is present. The bound is checked against the
/// element count before any merging of repeated points.
struct Multiset {
  std::vector<Point> elements;
  int ambient_dim = 0;
  std::optional<int> max_size_bound;

  Multiset(std::vector<Point> elems, int dim, std::optional<int> bound = std::nullopt);
};

/// Discrete signed measure: sum of w_i * delta_{x_i}. Canonical form has
/// pairwise-distinct points (bitwise), no zero weights, and support sorted
/// by lex_less.
struct DiscreteMeasure {
  std::vector<Point> points;
  std::vector<double> weights;
  int ambient_dim = 0;

  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<Point> pts, std::vector<double> ws, int dim);
  static DiscreteMeasure zero(int dim) { return DiscreteMeasure({}, {}, dim); }

  int support_size() const { return static_cast<int>(points.size()); }
  double total_mass() const;
};

/// Unit weight per element occurrence, then canonicalized (repetitions merge
/// to integer weights).
DiscreteMeasure from_multiset(const Multiset& s);

/// Merge points on exact bitwise coordinate equality, sum weights, drop
/// zero-weight atoms, sort support lexicographically. Idempotent.
DiscreteMeasure canonicalize(const DiscreteMeasure& m);

/// True iff the canonical forms are identical (exact on points and weights).
/// Throws on ambient dimension mismatch.
bool measures_equal(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// Atom concatenation (the linear structure on measures).
DiscreteMeasure measure_sum(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// Line-based text format: first line "d n", then n lines "w x_1 ... x_d"
/// in full decimal precision.
std::string to_text(const DiscreteMeasure& m);
DiscreteMeasure measure_from_text(const std::string& text);

/// Round-trippable decimal formatting used by all text emitters.
std::string fmt_g17(double x);

/// Explicit seed for all randomness; no global RNG anywhere.
struct Seed {
  std::uint64_t value = 0;

  /// Decorrelated sub-seed for stream `i` (splitmix64 of value + i).
  Seed derive(std::uint64_t i) const;
};

/// Deterministic RNG wrapper; all sampling in the library goes through this.
class Rng {
 public:
  explicit Rng(Seed s) : eng_(s.value) {}

  double gaussian();                       // standard normal
  double uniform(double lo, double hi);    // [lo, hi)
  std::uint64_t uniform_index(std::uint64_t n);  // [0, n)

  /// Uniform direction on the unit sphere in R^d.
  std::vector<double> unit_vector(int d);

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Runs body(0..count-1), possibly on several threads. Worker count is
/// capped by MOMENT_WITNESS_THREADS. Callers must make body(i) independent
/// of execution order; results keyed by index stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace mw
