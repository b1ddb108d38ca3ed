#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "mw/core.hpp"
#include "mw/embed.hpp"

namespace mw {

/// Result of a randomized separation test. `margin` is the best embedding
/// distance found over all witness nets, after normalizing the embeddings by
/// max(1, linf norm).
struct SeparationReport {
  bool separated = false;
  double margin = 0.0;
  int witnesses_used = 0;
  std::string params_snapshot;  // text form of the best witness net
  double tolerance = 0.0;
};

/// Samples `trials` independent shallow nets of the given width (sub-seed per
/// trial) and reports whether any of them separates the two measures beyond
/// tol. Deterministic given the seed; trials run in parallel.
SeparationReport verify_separation(const DiscreteMeasure& m1, const DiscreteMeasure& m2,
                                   const Activation& activation, int width, int trials, Seed seed,
                                   double tol = 1e-9);

enum class CounterexampleKind { SetSplit, AffineDependence, IntegerShift, Pigeonhole };

/// Two distinct measures whose moments under the target PwL net coincide.
struct CounterexamplePair {
  DiscreteMeasure m1, m2;
  CounterexampleKind kind = CounterexampleKind::SetSplit;
  Point region_anchor;
  double moment_gap = 0.0;
};

/// Thrown when the linear-region search exhausts its attempt budget.
struct RegionSearchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Second-difference probe: true iff for `probes` random directions u and
/// deltas in {radius, radius/2},
///   | f(x0+du) + f(x0-du) - 2 f(x0) | <= 1e-11 * (1 + |f(x0)|).
bool is_locally_linear(const ShallowNetParams& net, const Point& x0, double radius, int probes,
                       Seed seed);

/// {{x0, x0}} vs {{x0 - eps*dir, x0 + eps*dir}} inside one linear region.
CounterexamplePair pwl_counterexample_sets(const ShallowNetParams& net, Seed seed);

/// Unit-norm null vector of the (d+1) x (d+2) matrix stacking the point
/// coordinates over a row of ones (smallest right singular vector).
Eigen::VectorXd affine_dependence_weights(const std::vector<Point>& points);

enum class NullSplit {
  BySign,   // positive weights -> m1, negated negative weights -> m2
  ByIndex,  // split at k = ceil((d+2)/2) with signed weights
};

/// d+2 affinely dependent points in one linear region, split into two
/// measures with equal moments.
CounterexamplePair pwl_counterexample_measures(const ShallowNetParams& net, Seed seed,
                                               NullSplit split = NullSplit::BySign);

/// {{2N, 2N}} vs {{N, 3N}} for the first N in 1, 2, 4, ... such that [N, 3N]
/// lies in one linear region. d == 1 only.
CounterexamplePair pwl_counterexample_integers(const ShallowNetParams& net);

/// Advisory pigeonhole bound: true iff injectivity is impossible because
/// alphabet_size > region_bound(W, L, d) * (d + 1), using the exact single
/// layer bound W+1 for L = d = 1 and W^(dL) otherwise (unit constant).
bool pwl_pigeonhole_bound(int W, int L, int d, long long alphabet_size);

/// Single-line JSON records for CLI corpus runs.
std::string to_json(const SeparationReport& r);
std::string to_json(const CounterexamplePair& p);

}  // namespace mw
