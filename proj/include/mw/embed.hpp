#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "mw/activation.hpp"
#include "mw/core.hpp"

namespace mw {

/// Shallow network x -> sigma(A x + b), sigma applied elementwise.
struct ShallowNetParams {
  Eigen::MatrixXd A;  // m x d
  Eigen::VectorXd b;  // m
  Activation activation;

  int width() const { return static_cast<int>(A.rows()); }
  int input_dim() const { return static_cast<int>(A.cols()); }
};

/// sigma(A x + b) at a single point.
Eigen::VectorXd apply_net(const ShallowNetParams& p, const Eigen::VectorXd& x);
Eigen::VectorXd apply_net(const ShallowNetParams& p, const Point& x);

/// Moment map of the network: sum_i w_i * sigma(A x_i + b). The measure is
/// canonicalized first, so the result depends only on the canonical form.
Eigen::VectorXd moment_embed(const DiscreteMeasure& m, const ShallowNetParams& p);

/// A entries i.i.d. N(0, 1/(input_scale*sqrt(2d))), b entries N(0, 1/sqrt(2)).
/// With input_scale=1 and unit-variance data the preactivations have
/// expectation zero and unit standard deviation.
ShallowNetParams sample_shallow_net(int m, int d, const Activation& activation, Seed seed,
                                    double input_scale = 1.0);

enum class EmbeddingSpace { MeasuresRd, MultisetsRd, MeasuresCountable, MultisetsCountable };

/// Width sufficient for moment injectivity with an analytic non-polynomial
/// activation: 2n(d+1)+1, 2nd+1, 2n+1 and 1 respectively.
int recommended_width(EmbeddingSpace space, int n, int d);

/// Gaussian bump family: component j is exp(-|x - y_j|^2 / sigma_j^2).
struct GaussianParams {
  std::vector<Point> centers;
  std::vector<double> widths;  // strictly positive
  int size() const { return static_cast<int>(centers.size()); }
};

Eigen::VectorXd gaussian_embed(const DiscreteMeasure& m, const GaussianParams& p);

/// Centers i.i.d. N(0, data_scale^2) per coordinate; widths |N(0, data_scale^2)| + 0.1*data_scale
/// (the floor keeps the law absolutely continuous while avoiding degenerate widths).
GaussianParams sample_gaussian_params(int m, int d, Seed seed, double data_scale = 1.0);

/// Injective inner feature map: a stack of affine layers with full-column-rank
/// widening weights followed by leaky-ReLU. An empty stack is the identity.
/// Rank of every sampled layer is verified by SVD at construction.
struct InnerMap {
  std::vector<Eigen::MatrixXd> weights;  // rows >= cols, full column rank
  std::vector<Eigen::VectorXd> biases;
  double leaky_slope = 0.01;
  int in_dim = 0;
  int out_dim = 0;

  Eigen::VectorXd apply(const Point& x) const;
};

InnerMap identity_inner(int d);

/// widths = (d, w_1, ..., w_L) with w_1 >= d and w_{k+1} >= w_k.
InnerMap sample_injective_inner(const std::vector<int>& widths, Seed seed);

/// Moment map of sigma(A F(x) + b) with F the inner map. Component j is
/// sum_i w_i sigma(a_j . F(x_i) + b_j).
Eigen::VectorXd deep_embed(const DiscreteMeasure& m, const InnerMap& inner,
                           const ShallowNetParams& outer);

/// Chebyshev system on a subset of R: k functions whose evaluation matrix at
/// any k pairwise-distinct points is invertible.
struct TSystem {
  enum class Kind { Monomial, SigmoidShift };
  Kind kind = Kind::Monomial;
  int degree = 0;               // Monomial: tau_i(x) = x^i, i = 1..degree
  std::vector<double> shifts;   // SigmoidShift: tau_i(x) = sigmoid(x + shifts[i])
  std::string domain_note;

  int size() const;
  double evaluate(int i, double x) const;  // tau_{i+1}(x), i in [0, size)

  static TSystem monomial(int k);
  static TSystem sigmoid_shift(std::vector<double> shifts);
};

/// [tau_i(x_j)] for pairwise-distinct xs with |xs| == t.size().
Eigen::MatrixXd tsystem_matrix(const TSystem& t, const std::vector<double>& xs);

/// Moments of a 1-d measure against the system: component i is
/// sum_j w_j tau_i(x_j). Requires d == 1 and support size <= size()/2.
Eigen::VectorXd tsystem_embed(const DiscreteMeasure& m, const TSystem& t);

/// Width-S shallow ReLU encoder for measures supported on a finite alphabet
/// l_1 < ... < l_S, with thresholds t_1 < l_1 < t_2 < l_2 < ... < t_S < l_S.
struct StaircaseParams {
  std::vector<double> alphabet;
  std::vector<double> thresholds;

  StaircaseParams(std::vector<double> alphabet_, std::vector<double> thresholds_);

  /// t_j = (l_{j-1} + l_j)/2 for j >= 2 and t_1 = l_1 - (l_2 - l_1)/2.
  static StaircaseParams with_midpoint_thresholds(std::vector<double> alphabet);

  int size() const { return static_cast<int>(alphabet.size()); }
};

/// Component j is sum_i w_i ReLU(x_i - t_j). Every support point of the
/// measure must equal some alphabet letter exactly.
Eigen::VectorXd staircase_embed(const DiscreteMeasure& m, const StaircaseParams& p);

/// Recovers the weights by back-substitution from component S downward;
/// always returns the unique solution of the triangular system, canonicalized.
DiscreteMeasure staircase_decode(const Eigen::VectorXd& moments, const StaircaseParams& p);

/// (alpha, alpha^2, ..., alpha^depth) with alpha = 1/(n+1). On this alphabet
/// even the identity map is moment injective for multisets of size <= n.
std::vector<double> sigma_alpha_alphabet(int n, int depth);

/// Text format: "m d activation_name", then m rows of A, then b.
std::string to_text(const ShallowNetParams& p);
ShallowNetParams net_from_text(const std::string& text);

}  // namespace mw
