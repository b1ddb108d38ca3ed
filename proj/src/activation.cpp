#include "mw/activation.hpp"

#include <cmath>
#include <stdexcept>

namespace mw {

namespace {

double sigmoid_fn(double x) { return 1.0 / (1.0 + std::exp(-x)); }
double sigmoid_der(double x) {
  double s = sigmoid_fn(x);
  return s * (1.0 - s);
}

double tanh_der(double x) {
  double t = std::tanh(x);
  return 1.0 - t * t;
}

double silu_fn(double x) { return x * sigmoid_fn(x); }
double silu_der(double x) {
  double s = sigmoid_fn(x);
  return s * (1.0 + x * (1.0 - s));
}

double softplus(double x) { return x > 30.0 ? x : std::log1p(std::exp(x)); }
double mish_fn(double x) { return x * std::tanh(softplus(x)); }
double mish_der(double x) {
  double t = std::tanh(softplus(x));
  return t + x * (1.0 - t * t) * sigmoid_fn(x);
}

double cos_der(double x) { return -std::sin(x); }

double relu_fn(double x) { return x > 0.0 ? x : 0.0; }
double relu_der(double x) { return x >= 0.0 ? 1.0 : 0.0; }

constexpr double kLeakySlope = 0.01;
double leaky_fn(double x) { return x > 0.0 ? x : kLeakySlope * x; }
double leaky_der(double x) { return x >= 0.0 ? 1.0 : kLeakySlope; }

double hardtanh_fn(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }
double hardtanh_der(double x) { return (x >= -1.0 && x < 1.0) ? 1.0 : 0.0; }

double identity_fn(double x) { return x; }
double one_fn(double) { return 1.0; }

double square_fn(double x) { return x * x; }
double square_der(double x) { return 2.0 * x; }

}  // namespace

const std::vector<Activation>& catalog() {
  static const std::vector<Activation> entries = {
      {"tanh", [](double x) { return std::tanh(x); }, tanh_der, Regularity::AnalyticNonPolynomial},
      {"sigmoid", sigmoid_fn, sigmoid_der, Regularity::AnalyticNonPolynomial},
      {"sin", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
       Regularity::AnalyticNonPolynomial},
      {"cos", [](double x) { return std::cos(x); }, cos_der, Regularity::AnalyticNonPolynomial},
      {"silu", silu_fn, silu_der, Regularity::AnalyticNonPolynomial},
      {"mish", mish_fn, mish_der, Regularity::AnalyticNonPolynomial},
      {"relu", relu_fn, relu_der, Regularity::PiecewiseLinear},
      {"leaky_relu", leaky_fn, leaky_der, Regularity::PiecewiseLinear},
      {"hardtanh", hardtanh_fn, hardtanh_der, Regularity::PiecewiseLinear},
      {"identity", identity_fn, one_fn, Regularity::Polynomial},
      {"square", square_fn, square_der, Regularity::Polynomial},
  };
  return entries;
}

const Activation& find_activation(std::string_view name) {
  std::string_view wanted = (name == "swish") ? std::string_view("silu") : name;
  for (const Activation& a : catalog()) {
    if (a.name == wanted) return a;
  }
  throw std::invalid_argument("unknown activation: " + std::string(name));
}

bool is_discriminatory(const Activation& a) { return a.regularity != Regularity::Polynomial; }

}  // namespace mw
