#include "hcover/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "hcover/angular.hpp"
#include "hcover/combinatorics.hpp"

namespace hcover {

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return sgn(c) == 0; });
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

Point& Point::operator+=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point& Point::operator*=(const Scalar& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Point operator+(Point a, const Point& b) { return a += b; }
Point operator-(Point a, const Point& b) { return a -= b; }
Point operator*(const Scalar& s, Point a) { return a *= s; }

Scalar dot(const Point& a, const Point& b) {
  require_same_dim(a, b);
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

Scalar squared_norm(const Point& a) { return dot(a, a); }

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << to_string(p[i]);
  }
  os << ')';
  return os.str();
}

Hyperplane::Hyperplane(Point normal, Scalar offset)
    : normal_(std::move(normal)), offset_(std::move(offset)) {
  auto lead = std::find_if(normal_.coords().begin(), normal_.coords().end(),
                           [](const Scalar& c) { return sgn(c) != 0; });
  if (lead == normal_.coords().end()) throw DomainError("hyperplane normal is the zero vector");
  Scalar inv = 1 / *lead;
  normal_ *= inv;
  offset_ *= inv;
}

Scalar Hyperplane::evaluate(const Point& x) const { return dot(normal_, x) - offset_; }

Hyperplane make_line(const Scalar& a, const Scalar& b, const Scalar& c) {
  return Hyperplane(Point{a, b}, c);
}

Hyperplane line_through(const Point& p, const Point& q) {
  if (p.dim() != 2 || q.dim() != 2) throw DimensionError("line_through expects planar points");
  if (p == q) throw DegeneracyError("line_through: points coincide");
  Point normal{p[1] - q[1], q[0] - p[0]};
  Scalar offset = dot(normal, p);
  return Hyperplane(std::move(normal), std::move(offset));
}

Point line_direction(const Hyperplane& line) {
  if (line.dim() != 2) throw DimensionError("line_direction expects a planar line");
  return Point{-line.normal()[1], line.normal()[0]};
}

bool parallel(const Hyperplane& a, const Hyperplane& b) {
  if (a.dim() != 2 || b.dim() != 2) throw DimensionError("parallel expects planar lines");
  return a.normal()[0] * b.normal()[1] == a.normal()[1] * b.normal()[0];
}

std::optional<Point> intersect(const Hyperplane& a, const Hyperplane& b) {
  if (a.dim() != 2 || b.dim() != 2) throw DimensionError("intersect expects planar lines");
  const auto& n1 = a.normal();
  const auto& n2 = b.normal();
  Scalar det = n1[0] * n2[1] - n1[1] * n2[0];
  if (sgn(det) == 0) return std::nullopt;
  Scalar x = (a.offset() * n2[1] - n1[1] * b.offset()) / det;
  Scalar y = (n1[0] * b.offset() - a.offset() * n2[0]) / det;
  return Point{std::move(x), std::move(y)};
}

const char* to_string(Containment c) {
  switch (c) {
    case Containment::Interior: return "INTERIOR";
    case Containment::Boundary: return "BOUNDARY";
    case Containment::Outside: return "OUTSIDE";
  }
  return "?";
}

int orient2d(const Point& a, const Point& b, const Point& c) {
  Scalar v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return sgn(v);
}

namespace {

void check_simplex_dims(std::span<const Point> points, std::size_t d) {
  if (points.size() != d + 1) {
    throw DimensionError("expected " + std::to_string(d + 1) + " points in R^" + std::to_string(d) +
                         ", got " + std::to_string(points.size()));
  }
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionError("point of dimension " + std::to_string(p.dim()) +
                                           " in R^" + std::to_string(d) + " tuple");
  }
}

// Closed convex-hull membership for an affinely dependent vertex set, by
// Caratheodory: q is in the hull iff it is in the hull of some affinely
// independent subset.
bool in_degenerate_hull(const Point& q, std::span<const Point> vertices) {
  const std::size_t k = vertices.size();
  const std::size_t d = q.dim();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) members.push_back(i);
    }
    linalg::Matrix a(d + 1, std::vector<Scalar>(members.size()));
    for (std::size_t c = 0; c < members.size(); ++c) {
      for (std::size_t r = 0; r < d; ++r) a[r][c] = vertices[members[c]][r];
      a[d][c] = 1;
    }
    if (linalg::rank(a) != members.size()) continue;
    std::vector<Scalar> rhs(q.coords());
    rhs.push_back(1);
    auto lambda = linalg::solve(a, rhs);
    if (lambda && std::all_of(lambda->begin(), lambda->end(),
                              [](const Scalar& l) { return sgn(l) >= 0; })) {
      return true;
    }
  }
  return false;
}

}  // namespace

int orientation(std::span<const Point> points) {
  if (points.empty()) throw DimensionError("orientation of an empty tuple");
  const std::size_t d = points.size() - 1;
  check_simplex_dims(points, d);
  if (d == 2) return orient2d(points[0], points[1], points[2]);
  linalg::Matrix m(d + 1, std::vector<Scalar>(d + 1));
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = points[i][j];
    m[i][d] = 1;
  }
  return sgn(linalg::determinant(std::move(m)));
}

Containment point_in_simplex(const Point& q, std::span<const Point> vertices) {
  const std::size_t d = q.dim();
  check_simplex_dims(vertices, d);
  const int s = orientation(vertices);
  if (s == 0) return in_degenerate_hull(q, vertices) ? Containment::Boundary : Containment::Outside;

  bool on_facet = false;
  std::vector<Point> probe(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i <= d; ++i) {
    probe[i] = q;
    int o = orientation(probe);
    probe[i] = vertices[i];
    if (o == -s) return Containment::Outside;
    if (o == 0) on_facet = true;
  }
  return on_facet ? Containment::Boundary : Containment::Interior;
}

Point project_onto_hyperplane(const Point& q, const Hyperplane& h) {
  require_same_dim(q, h.normal());
  Scalar t = h.evaluate(q) / squared_norm(h.normal());
  return q - t * h.normal();
}

bool segment_crosses_ray(const Point& a, const Point& b, const Point& q, const Point& dir) {
  if (a.dim() != 2 || b.dim() != 2 || q.dim() != 2 || dir.dim() != 2) {
    throw DimensionError("segment_crosses_ray is planar");
  }
  if (dir.is_zero()) throw DomainError("ray direction is zero");
  if (orient2d(a, b, q) == 0 && sgn(dot(a - q, b - q)) <= 0) {
    throw DegeneracyError("ray origin lies on the segment");
  }
  const Point tip = q + dir;
  const int oa = orient2d(q, tip, a);
  const int ob = orient2d(q, tip, b);
  if (oa * ob > 0) return false;
  if (oa == 0 && ob == 0) {
    // Segment on the ray's supporting line, not containing q: both endpoints
    // are on the same side of q.
    return sgn(dot(a - q, dir)) >= 0;
  }
  const Point edge = b - a;
  const Point aq = a - q;
  Scalar num = aq[0] * edge[1] - aq[1] * edge[0];
  Scalar den = dir[0] * edge[1] - dir[1] * edge[0];
  return sgn(num) * sgn(den) >= 0;
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Duplicate: return "duplicate";
    case Violation::Kind::AffinelyDependent: return "affinely_dependent";
    case Violation::Kind::Parallel: return "parallel";
    case Violation::Kind::Coincident: return "coincident";
    case Violation::Kind::Concurrent: return "concurrent";
  }
  return "?";
}

std::vector<Violation> general_position_report(std::span<const Point> points) {
  std::vector<Violation> out;
  if (points.empty()) return out;
  const std::size_t d = points[0].dim();
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionError("mixed dimensions in point set");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) out.push_back({Violation::Kind::Duplicate, {i, j}});
    }
  }
  std::vector<Point> tuple(d + 1);
  for_each_combination(points.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t k = 0; k <= d; ++k) tuple[k] = points[idx[k]];
    if (orientation(tuple) == 0) out.push_back({Violation::Kind::AffinelyDependent, idx});
    return true;
  });
  return out;
}

std::vector<Violation> lines_general_position_report(std::span<const Hyperplane> lines) {
  std::vector<Violation> out;
  for (const auto& l : lines) {
    if (l.dim() != 2) throw DimensionError("lines_general_position_report is planar");
  }
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lines[i] == lines[j]) {
        out.push_back({Violation::Kind::Coincident, {i, j}});
      } else if (parallel(lines[i], lines[j])) {
        out.push_back({Violation::Kind::Parallel, {i, j}});
      }
    }
  }
  for_each_combination(n, 3, [&](const std::vector<std::size_t>& idx) {
    auto x = intersect(lines[idx[0]], lines[idx[1]]);
    if (!x || parallel(lines[idx[0]], lines[idx[2]]) || parallel(lines[idx[1]], lines[idx[2]])) {
      return true;
    }
    if (lines[idx[2]].side(*x) == 0) out.push_back({Violation::Kind::Concurrent, idx});
    return true;
  });
  return out;
}

std::vector<std::vector<std::size_t>> violation_indices(const std::vector<Violation>& v) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.indices);
  return out;
}

namespace linalg {

namespace {

// Row-reduces in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, int* swaps = nullptr) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swaps) ++*swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Scalar f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  int swaps = 0;
  auto pivots = row_reduce(m, &swaps);
  if (pivots.size() < n) return 0;
  Scalar det = (swaps % 2) ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) det *= m[i][i];
  return det;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Matrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  // Rank-deficient A, or a pivot in the augmented column.
  if (pivots.size() < cols || pivots[cols ? cols - 1 : 0] >= cols) return std::nullopt;
  if (pivots.size() > cols) return std::nullopt;
  for (std::size_t i = cols; i < rows; ++i) {
    if (sgn(aug[i][cols]) != 0) return std::nullopt;
  }
  std::vector<Scalar> x(cols);
  for (std::size_t i = cols; i-- > 0;) {
    Scalar acc = aug[i][cols];
    for (std::size_t j = i + 1; j < cols; ++j) acc -= aug[i][j] * x[j];
    x[i] = acc / aug[i][i];
  }
  return x;
}

}  // namespace linalg

}  // namespace hcover
