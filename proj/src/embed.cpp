#include "mw/embed.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mw {

namespace {

Eigen::VectorXd to_eigen(const Point& x) {
  Eigen::VectorXd v(x.dim());
  for (int i = 0; i < x.dim(); ++i) v[i] = x[i];
  return v;
}

void apply_elementwise(const Activation& act, Eigen::VectorXd& z) {
  for (int i = 0; i < z.size(); ++i) z[i] = act.apply(z[i]);
}

}  // namespace

Eigen::VectorXd apply_net(const ShallowNetParams& p, const Eigen::VectorXd& x) {
  if (x.size() != p.A.cols()) throw std::invalid_argument("apply_net: input dimension mismatch");
  Eigen::VectorXd z = p.A * x + p.b;
  apply_elementwise(p.activation, z);
  return z;
}

Eigen::VectorXd apply_net(const ShallowNetParams& p, const Point& x) {
  return apply_net(p, to_eigen(x));
}

Eigen::VectorXd moment_embed(const DiscreteMeasure& m, const ShallowNetParams& p) {
  if (m.ambient_dim != p.input_dim()) {
    throw std::invalid_argument("moment_embed: measure/network dimension mismatch");
  }
  DiscreteMeasure c = canonicalize(m);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(p.width());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    out += c.weights[i] * apply_net(p, c.points[i]);
  }
  return out;
}

ShallowNetParams sample_shallow_net(int m, int d, const Activation& activation, Seed seed,
                                    double input_scale) {
  if (m < 1 || d < 1) throw std::invalid_argument("sample_shallow_net: m and d must be >= 1");
  if (!(input_scale > 0.0)) throw std::invalid_argument("sample_shallow_net: input_scale must be > 0");
  Rng rng(seed);
  double a_std = 1.0 / (input_scale * std::sqrt(2.0 * d));
  double b_std = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd A(m, d);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) A(i, j) = a_std * rng.gaussian();
  }
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) b[i] = b_std * rng.gaussian();
  return ShallowNetParams{std::move(A), std::move(b), activation};
}

int recommended_width(EmbeddingSpace space, int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("recommended_width: n and d must be >= 1");
  switch (space) {
    case EmbeddingSpace::MeasuresRd: return 2 * n * (d + 1) + 1;
    case EmbeddingSpace::MultisetsRd: return 2 * n * d + 1;
    case EmbeddingSpace::MeasuresCountable: return 2 * n + 1;
    case EmbeddingSpace::MultisetsCountable: return 1;
  }
  throw std::invalid_argument("recommended_width: bad space");
}

Eigen::VectorXd gaussian_embed(const DiscreteMeasure& m, const GaussianParams& p) {
  if (p.centers.size() != p.widths.size()) {
    throw std::invalid_argument("gaussian_embed: |centers| != |widths|");
  }
  for (double s : p.widths) {
    if (!(s > 0.0)) throw std::invalid_argument("gaussian_embed: widths must be positive");
  }
  DiscreteMeasure c = canonicalize(m);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(p.size());
  for (int j = 0; j < p.size(); ++j) {
    if (p.centers[static_cast<std::size_t>(j)].dim() != c.ambient_dim) {
      throw std::invalid_argument("gaussian_embed: center dimension mismatch");
    }
    double s2 = p.widths[static_cast<std::size_t>(j)] * p.widths[static_cast<std::size_t>(j)];
    double acc = 0.0;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      double dist2 = 0.0;
      for (int k = 0; k < c.ambient_dim; ++k) {
        double diff = c.points[i][k] - p.centers[static_cast<std::size_t>(j)][k];
        dist2 += diff * diff;
      }
      acc += c.weights[i] * std::exp(-dist2 / s2);
    }
    out[j] = acc;
  }
  return out;
}

GaussianParams sample_gaussian_params(int m, int d, Seed seed, double data_scale) {
  if (m < 1 || d < 1) throw std::invalid_argument("sample_gaussian_params: m and d must be >= 1");
  Rng rng(seed);
  GaussianParams p;
  p.centers.reserve(static_cast<std::size_t>(m));
  p.widths.reserve(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::vector<double> c(static_cast<std::size_t>(d));
    for (double& x : c) x = data_scale * rng.gaussian();
    p.centers.emplace_back(std::move(c));
    p.widths.push_back(std::abs(data_scale * rng.gaussian()) + 0.1 * data_scale);
  }
  return p;
}

Eigen::VectorXd InnerMap::apply(const Point& x) const {
  if (x.dim() != in_dim) throw std::invalid_argument("InnerMap: input dimension mismatch");
  Eigen::VectorXd h = to_eigen(x);
  for (std::size_t l = 0; l < weights.size(); ++l) {
    h = weights[l] * h + biases[l];
    for (int i = 0; i < h.size(); ++i) h[i] = h[i] > 0.0 ? h[i] : leaky_slope * h[i];
  }
  return h;
}

InnerMap identity_inner(int d) {
  InnerMap f;
  f.in_dim = d;
  f.out_dim = d;
  return f;
}

InnerMap sample_injective_inner(const std::vector<int>& widths, Seed seed) {
  if (widths.size() < 2) throw std::invalid_argument("sample_injective_inner: need at least one layer");
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    if (widths[l + 1] < widths[l]) {
      throw std::invalid_argument("sample_injective_inner: widths must be non-decreasing");
    }
  }
  InnerMap f;
  f.in_dim = widths.front();
  f.out_dim = widths.back();
  Rng rng(seed);
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    int rows = widths[l + 1], cols = widths[l];
    Eigen::MatrixXd W(rows, cols);
    for (int attempt = 0;; ++attempt) {
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) W(i, j) = rng.gaussian() / std::sqrt(static_cast<double>(cols));
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(W);
      double smin = svd.singularValues()[cols - 1];
      double smax = svd.singularValues()[0];
      if (smin > 1e-8 * std::max(1.0, smax)) break;
      if (attempt > 64) throw std::runtime_error("sample_injective_inner: rank verification failed");
    }
    Eigen::VectorXd c(rows);
    for (int i = 0; i < rows; ++i) c[i] = rng.gaussian() / std::sqrt(2.0);
    f.weights.push_back(std::move(W));
    f.biases.push_back(std::move(c));
  }
  return f;
}

Eigen::VectorXd deep_embed(const DiscreteMeasure& m, const InnerMap& inner,
                           const ShallowNetParams& outer) {
  if (m.ambient_dim != inner.in_dim) {
    throw std::invalid_argument("deep_embed: measure/inner dimension mismatch");
  }
  if (inner.out_dim != outer.input_dim()) {
    throw std::invalid_argument("deep_embed: inner/outer dimension mismatch");
  }
  DiscreteMeasure c = canonicalize(m);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(outer.width());
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    out += c.weights[i] * apply_net(outer, Eigen::VectorXd(inner.apply(c.points[i])));
  }
  return out;
}

int TSystem::size() const {
  return kind == Kind::Monomial ? degree : static_cast<int>(shifts.size());
}

double TSystem::evaluate(int i, double x) const {
  if (kind == Kind::Monomial) return std::pow(x, i + 1);
  return 1.0 / (1.0 + std::exp(-(x + shifts[static_cast<std::size_t>(i)])));
}

TSystem TSystem::monomial(int k) {
  if (k < 1) throw std::invalid_argument("TSystem::monomial: k must be >= 1");
  TSystem t;
  t.kind = Kind::Monomial;
  t.degree = k;
  t.domain_note = "R";
  return t;
}

TSystem TSystem::sigmoid_shift(std::vector<double> shifts) {
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    for (std::size_t j = i + 1; j < shifts.size(); ++j) {
      if (shifts[i] == shifts[j]) {
        throw std::invalid_argument("TSystem::sigmoid_shift: shifts must be pairwise distinct");
      }
    }
  }
  TSystem t;
  t.kind = Kind::SigmoidShift;
  t.shifts = std::move(shifts);
  t.domain_note = "R";
  return t;
}

Eigen::MatrixXd tsystem_matrix(const TSystem& t, const std::vector<double>& xs) {
  int k = t.size();
  if (static_cast<int>(xs.size()) != k) {
    throw std::invalid_argument("tsystem_matrix: |xs| must equal the system size");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) throw std::invalid_argument("tsystem_matrix: xs must be pairwise distinct");
    }
  }
  Eigen::MatrixXd M(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) M(i, j) = t.evaluate(i, xs[static_cast<std::size_t>(j)]);
  }
  return M;
}

Eigen::VectorXd tsystem_embed(const DiscreteMeasure& m, const TSystem& t) {
  if (m.ambient_dim != 1) throw std::invalid_argument("tsystem_embed: measure must be 1-dimensional");
  DiscreteMeasure c = canonicalize(m);
  int k = t.size();
  if (2 * c.support_size() > k) {
    throw std::invalid_argument("tsystem_embed: support size exceeds size()/2");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(k);
  for (int i = 0; i < k; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      acc += c.weights[j] * t.evaluate(i, c.points[j][0]);
    }
    out[i] = acc;
  }
  return out;
}

StaircaseParams::StaircaseParams(std::vector<double> alphabet_, std::vector<double> thresholds_)
    : alphabet(std::move(alphabet_)), thresholds(std::move(thresholds_)) {
  if (alphabet.empty() || alphabet.size() != thresholds.size()) {
    throw std::invalid_argument("StaircaseParams: need one threshold per letter");
  }
  for (std::size_t j = 0; j < alphabet.size(); ++j) {
    if (!(thresholds[j] < alphabet[j])) {
      throw std::invalid_argument("StaircaseParams: thresholds must interleave the alphabet");
    }
    if (j > 0 && !(alphabet[j - 1] < thresholds[j])) {
      throw std::invalid_argument("StaircaseParams: thresholds must interleave the alphabet");
    }
  }
}

StaircaseParams StaircaseParams::with_midpoint_thresholds(std::vector<double> alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("StaircaseParams: empty alphabet");
  std::vector<double> t(alphabet.size());
  if (alphabet.size() == 1) {
    t[0] = alphabet[0] - 1.0;
  } else {
    t[0] = alphabet[0] - (alphabet[1] - alphabet[0]) / 2.0;
    for (std::size_t j = 1; j < alphabet.size(); ++j) {
      t[j] = (alphabet[j - 1] + alphabet[j]) / 2.0;
    }
  }
  return StaircaseParams(std::move(alphabet), std::move(t));
}

Eigen::VectorXd staircase_embed(const DiscreteMeasure& m, const StaircaseParams& p) {
  if (m.ambient_dim != 1) throw std::invalid_argument("staircase_embed: measure must be 1-dimensional");
  DiscreteMeasure c = canonicalize(m);
  for (const Point& x : c.points) {
    bool found = std::any_of(p.alphabet.begin(), p.alphabet.end(),
                             [&](double l) { return l == x[0]; });
    if (!found) throw std::invalid_argument("staircase_embed: support point not in alphabet");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(p.size());
  for (int j = 0; j < p.size(); ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      double z = c.points[i][0] - p.thresholds[static_cast<std::size_t>(j)];
      acc += c.weights[i] * (z > 0.0 ? z : 0.0);
    }
    out[j] = acc;
  }
  return out;
}

DiscreteMeasure staircase_decode(const Eigen::VectorXd& moments, const StaircaseParams& p) {
  int s = p.size();
  if (moments.size() != s) throw std::invalid_argument("staircase_decode: moment length mismatch");
  // Triangular back-substitution: letter l_j contributes only to components
  // with threshold below it, and component j isolates w_j once w_{j+1..S}
  // are known.
  std::vector<double> w(static_cast<std::size_t>(s), 0.0);
  for (int j = s - 1; j >= 0; --j) {
    double known = 0.0;
    for (int i = j + 1; i < s; ++i) {
      known += w[static_cast<std::size_t>(i)] *
               (p.alphabet[static_cast<std::size_t>(i)] - p.thresholds[static_cast<std::size_t>(j)]);
    }
    w[static_cast<std::size_t>(j)] =
        (moments[j] - known) /
        (p.alphabet[static_cast<std::size_t>(j)] - p.thresholds[static_cast<std::size_t>(j)]);
  }
  std::vector<Point> pts;
  std::vector<double> ws;
  for (int j = 0; j < s; ++j) {
    pts.push_back(Point::scalar(p.alphabet[static_cast<std::size_t>(j)]));
    ws.push_back(w[static_cast<std::size_t>(j)]);
  }
  return canonicalize(DiscreteMeasure(std::move(pts), std::move(ws), 1));
}

std::vector<double> sigma_alpha_alphabet(int n, int depth) {
  if (n < 1 || depth < 1) throw std::invalid_argument("sigma_alpha_alphabet: n and depth must be >= 1");
  double alpha = 1.0 / (n + 1);
  std::vector<double> out(static_cast<std::size_t>(depth));
  double v = 1.0;
  for (int i = 0; i < depth; ++i) {
    v *= alpha;
    out[static_cast<std::size_t>(i)] = v;
  }
  return out;
}

std::string to_text(const ShallowNetParams& p) {
  std::string out = std::to_string(p.width()) + " " + std::to_string(p.input_dim()) + " " +
                    p.activation.name + "\n";
  for (int i = 0; i < p.width(); ++i) {
    for (int j = 0; j < p.input_dim(); ++j) {
      if (j > 0) out += " ";
      out += fmt_g17(p.A(i, j));
    }
    out += "\n";
  }
  for (int i = 0; i < p.width(); ++i) {
    if (i > 0) out += " ";
    out += fmt_g17(p.b[i]);
  }
  out += "\n";
  return out;
}

ShallowNetParams net_from_text(const std::string& text) {
  std::istringstream in(text);
  int m = 0, d = 0;
  std::string name;
  if (!(in >> m >> d >> name) || m < 1 || d < 1) {
    throw std::invalid_argument("net_from_text: bad header");
  }
  Eigen::MatrixXd A(m, d);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!(in >> A(i, j))) throw std::invalid_argument("net_from_text: truncated matrix");
    }
  }
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    if (!(in >> b[i])) throw std::invalid_argument("net_from_text: truncated bias");
  }
  return ShallowNetParams{std::move(A), std::move(b), find_activation(name)};
}

}  // namespace mw
