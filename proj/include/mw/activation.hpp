#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mw {

enum class Regularity { AnalyticNonPolynomial, PiecewiseLinear, Polynomial };

/// Scalar activation with its derivative and regularity class. At kinks of
/// piecewise-linear entries the derivative returns the right-hand limit.
struct Activation {
  std::string name;
  double (*apply)(double);
  double (*derivative)(double);
  Regularity regularity;
};

/// The fixed activation catalog: tanh, sigmoid, sin, cos, silu, mish
/// (analytic non-polynomial); relu, leaky_relu (slope 0.01), hardtanh
/// (piecewise linear); identity, square (polynomial).
const std::vector<Activation>& catalog();

/// Lookup by name; "swish" is accepted as an alias of "silu".
/// Throws std::invalid_argument for unknown names.
const Activation& find_activation(std::string_view name);

/// Continuous non-polynomial activations are discriminatory.
bool is_discriminatory(const Activation& a);

}  // namespace mw
