#include "mw/core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace mw {

namespace {

void require_finite(const std::vector<double>& xs, const char* what) {
  for (double x : xs) {
    if (!std::isfinite(x)) throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

std::uint64_t bits_of(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof(u));
  return u;
}

}  // namespace

Point::Point(std::vector<double> c) : coords(std::move(c)) {
  require_finite(coords, "Point coordinates");
}

bool bitwise_equal(const Point& a, const Point& b) {
  if (a.coords.size() != b.coords.size()) return false;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (bits_of(a.coords[i]) != bits_of(b.coords[i])) return false;
  }
  return true;
}

bool lex_less(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
    double x = a.coords[i], y = b.coords[i];
    if (x < y) return true;
    if (x > y) return false;
    if (bits_of(x) != bits_of(y)) return std::signbit(x) && !std::signbit(y);
  }
  return a.coords.size() < b.coords.size();
}

Multiset::Multiset(std::vector<Point> elems, int dim, std::optional<int> bound)
    : elements(std::move(elems)), ambient_dim(dim), max_size_bound(bound) {
  for (const Point& p : elements) {
    if (p.dim() != ambient_dim) throw std::invalid_argument("Multiset element dimension mismatch");
  }
  if (max_size_bound && static_cast<int>(elements.size()) > *max_size_bound) {
    throw std::invalid_argument("Multiset exceeds its size bound");
  }
}

DiscreteMeasure::DiscreteMeasure(std::vector<Point> pts, std::vector<double> ws, int dim)
    : points(std::move(pts)), weights(std::move(ws)), ambient_dim(dim) {
  if (points.size() != weights.size()) {
    throw std::invalid_argument("DiscreteMeasure: |points| != |weights|");
  }
  require_finite(weights, "DiscreteMeasure weights");
  for (const Point& p : points) {
    if (p.dim() != ambient_dim) throw std::invalid_argument("DiscreteMeasure point dimension mismatch");
  }
}

double DiscreteMeasure::total_mass() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

DiscreteMeasure from_multiset(const Multiset& s) {
  std::vector<double> ws(s.elements.size(), 1.0);
  return canonicalize(DiscreteMeasure(s.elements, ws, s.ambient_dim));
}

DiscreteMeasure canonicalize(const DiscreteMeasure& m) {
  std::vector<std::size_t> order(m.points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return lex_less(m.points[i], m.points[j]);
  });

  std::vector<Point> pts;
  std::vector<double> ws;
  for (std::size_t k = 0; k < order.size();) {
    std::size_t j = k;
    double w = 0.0;
    while (j < order.size() && bitwise_equal(m.points[order[j]], m.points[order[k]])) {
      w += m.weights[order[j]];
      ++j;
    }
    if (w != 0.0) {
      pts.push_back(m.points[order[k]]);
      ws.push_back(w);
    }
    k = j;
  }
  return DiscreteMeasure(std::move(pts), std::move(ws), m.ambient_dim);
}

bool measures_equal(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.ambient_dim != b.ambient_dim) {
    throw std::invalid_argument("measures_equal: ambient dimension mismatch");
  }
  DiscreteMeasure ca = canonicalize(a), cb = canonicalize(b);
  if (ca.points.size() != cb.points.size()) return false;
  for (std::size_t i = 0; i < ca.points.size(); ++i) {
    if (!bitwise_equal(ca.points[i], cb.points[i])) return false;
    if (bits_of(ca.weights[i]) != bits_of(cb.weights[i])) return false;
  }
  return true;
}

DiscreteMeasure measure_sum(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  if (a.ambient_dim != b.ambient_dim) {
    throw std::invalid_argument("measure_sum: ambient dimension mismatch");
  }
  std::vector<Point> pts = a.points;
  pts.insert(pts.end(), b.points.begin(), b.points.end());
  std::vector<double> ws = a.weights;
  ws.insert(ws.end(), b.weights.begin(), b.weights.end());
  return DiscreteMeasure(std::move(pts), std::move(ws), a.ambient_dim);
}

std::string fmt_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_text(const DiscreteMeasure& m) {
  std::string out = std::to_string(m.ambient_dim) + " " + std::to_string(m.points.size()) + "\n";
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    out += fmt_g17(m.weights[i]);
    for (double c : m.points[i].coords) {
      out += " ";
      out += fmt_g17(c);
    }
    out += "\n";
  }
  return out;
}

DiscreteMeasure measure_from_text(const std::string& text) {
  std::istringstream in(text);
  int d = -1;
  std::size_t n = 0;
  if (!(in >> d >> n) || d < 0) throw std::invalid_argument("measure_from_text: bad header");
  std::vector<Point> pts;
  std::vector<double> ws;
  for (std::size_t i = 0; i < n; ++i) {
    double w;
    if (!(in >> w)) throw std::invalid_argument("measure_from_text: truncated atom line");
    std::vector<double> coords(static_cast<std::size_t>(d));
    for (double& c : coords) {
      if (!(in >> c)) throw std::invalid_argument("measure_from_text: truncated coordinates");
    }
    pts.emplace_back(std::move(coords));
    ws.push_back(w);
  }
  return DiscreteMeasure(std::move(pts), std::move(ws), d);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

Seed Seed::derive(std::uint64_t i) const { return Seed{splitmix64(value + i)}; }

double Rng::gaussian() { return normal_(eng_); }

double Rng::uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(eng_);
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
  std::uniform_int_distribution<std::uint64_t> dist(0, n - 1);
  return dist(eng_);
}

std::vector<double> Rng::unit_vector(int d) {
  std::vector<double> v(static_cast<std::size_t>(d));
  while (true) {
    double norm2 = 0.0;
    for (double& x : v) {
      x = gaussian();
      norm2 += x * x;
    }
    if (norm2 > 1e-24) {
      double inv = 1.0 / std::sqrt(norm2);
      for (double& x : v) x *= inv;
      return v;
    }
  }
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  std::size_t cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("MOMENT_WITNESS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) cap = std::min<std::size_t>(cap, static_cast<std::size_t>(v));
  }
  std::size_t workers = std::min(cap, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      std::size_t i;
      while (!failed.load(std::memory_order_relaxed) && (i = next.fetch_add(1)) < count) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mw
