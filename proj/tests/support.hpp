#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hcover/geometry.hpp"

namespace hcover::testing {

/// Small seeded generator of exact rationals for property tests.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  Scalar scalar(std::int64_t range = 50, std::int64_t max_den = 12) {
    return make_scalar(integer(-range * max_den, range * max_den), integer(1, max_den));
  }

  Point point(std::size_t d = 2, std::int64_t range = 50) {
    std::vector<Scalar> c(d);
    for (auto& x : c) x = scalar(range);
    return Point(std::move(c));
  }

  std::vector<Point> points(std::size_t n, std::size_t d = 2, std::int64_t range = 50) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(point(d, range));
    return out;
  }

  Hyperplane line(std::int64_t range = 20) {
    while (true) {
      Scalar a = scalar(5), b = scalar(5);
      if (sgn(a) == 0 && sgn(b) == 0) continue;
      return make_line(a, b, scalar(range));
    }
  }

  std::vector<Hyperplane> lines(std::size_t n, std::int64_t range = 20) {
    std::vector<Hyperplane> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(line(range));
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Point pt(std::int64_t x, std::int64_t y) { return Point{Scalar(x), Scalar(y)}; }

}  // namespace hcover::testing
