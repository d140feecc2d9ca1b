#pragma once

// Planar convex hulls and rectilinear (separately convex in R^d) hulls of
// finite point sets.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "gausslucas/poly.hpp"

namespace gausslucas {

struct Point2 {
  double x = 0, y = 0;

  static Point2 from(Complex c) { return {c.real(), c.imag()}; }
  friend bool operator==(const Point2&, const Point2&) = default;
  friend auto operator<=>(const Point2&, const Point2&) = default;
};

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Counterclockwise vertices, starting at the lexicographically smallest
/// point. One vertex for a point, two for a segment.
struct ConvexPolygon {
  std::vector<Point2> vertices;

  double diameter() const {
    double d = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j) d = std::max(d, distance(vertices[i], vertices[j]));
    return d;
  }
};

/// Monotone chain. Collinear boundary points are dropped.
inline ConvexPolygon convex_hull_2d(std::span<const Point2> input) {
  if (input.empty()) throw Error("convex hull of an empty point set");
  for (const auto& p : input)
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw Error("non-finite point");
  std::vector<Point2> pts(input.begin(), input.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return {pts};

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return {hull};
}

inline ConvexPolygon convex_hull_2d(std::span<const Complex> input) {
  std::vector<Point2> pts;
  pts.reserve(input.size());
  for (Complex c : input) pts.push_back(Point2::from(c));
  return convex_hull_2d(std::span<const Point2>(pts));
}

enum class HullVerdict { inside, boundary, outside };

inline const char* to_string(HullVerdict v) {
  switch (v) {
    case HullVerdict::inside: return "inside";
    case HullVerdict::boundary: return "boundary";
    default: return "outside";
  }
}

struct HullMembership {
  HullVerdict verdict;
  double signed_distance;  // positive inside, negative outside
};

inline double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0) return distance(p, a);
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return distance(p, {a.x + t * dx, a.y + t * dy});
}

/// Signed distance to the hull boundary. `tol` is relative to the hull
/// diameter, or absolute for a single-point hull.
inline HullMembership point_in_hull(const ConvexPolygon& hull, const Point2& p, double tol) {
  const auto& v = hull.vertices;
  if (v.empty()) throw Error("empty hull");
  const double diam = hull.diameter();
  const double abs_tol = diam > 0 ? tol * diam : tol;

  double d = 0;
  if (v.size() == 1) {
    d = -distance(p, v[0]);
  } else if (v.size() == 2) {
    d = -segment_distance(p, v[0], v[1]);
  } else {
    bool inside = true;
    double edge = std::numeric_limits<double>::infinity();
    double outside = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point2& a = v[i];
      const Point2& b = v[(i + 1) % v.size()];
      const double c = cross(a, b, p);
      if (c < 0) inside = false;
      edge = std::min(edge, c / distance(a, b));
      outside = std::min(outside, segment_distance(p, a, b));
    }
    d = inside ? edge : -outside;
  }

  HullVerdict verdict = HullVerdict::outside;
  if (d >= abs_tol)
    verdict = HullVerdict::inside;
  else if (std::abs(d) < abs_tol)
    verdict = HullVerdict::boundary;
  return {verdict, d};
}

struct Box {
  std::vector<double> lo, hi;
};

/// Finite union of closed axis-aligned boxes, possibly degenerate.
struct BoxUnion {
  std::size_t dim = 0;
  std::vector<Box> boxes;
};

/// Coordinate-compressed cell complex. Along each axis with g grid lines
/// there are 2g-1 cells: even index 2i is the line itself, odd index 2i+1 is
/// the open interval between lines i and i+1.
struct RectiGrid {
  std::size_t dim = 0;
  std::vector<std::vector<double>> lines;
  std::vector<std::size_t> extent;   // cells per axis
  std::vector<std::size_t> stride;
  std::vector<std::uint8_t> occupied;

  std::size_t cell_count() const { return occupied.size(); }

  std::vector<std::size_t> unflatten(std::size_t flat) const {
    std::vector<std::size_t> idx(dim);
    for (std::size_t a = 0; a < dim; ++a) idx[a] = (flat / stride[a]) % extent[a];
    return idx;
  }

  /// A point inside the given cell: the line value or the interval midpoint.
  std::vector<double> representative(std::size_t flat) const {
    std::vector<double> p(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const std::size_t c = (flat / stride[a]) % extent[a];
      p[a] = c % 2 == 0 ? lines[a][c / 2] : 0.5 * (lines[a][c / 2] + lines[a][c / 2 + 1]);
    }
    return p;
  }
};

inline constexpr double kSnapRatio = 1e-12;
inline constexpr std::size_t kMaxGridCells = 50'000'000;

/// Two coordinates on one axis are merged when they differ by at most
/// 1e-12 times the larger of the axis span and the axis magnitude.
inline double snap_threshold(std::span<const double> values) {
  if (values.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double magnitude = std::max(std::abs(*lo), std::abs(*hi));
  return kSnapRatio * std::max(*hi - *lo, magnitude);
}

inline bool snapped_equal(double a, double b) {
  const double v[2] = {a, b};
  return std::abs(a - b) <= snap_threshold(v);
}

namespace detail {

// Clusters sorted distinct values; returns the representative per cluster.
inline std::vector<double> grid_lines(std::vector<double> values) {
  const double thr = snap_threshold(values);
  std::sort(values.begin(), values.end());
  std::vector<double> lines;
  double last = 0;
  for (double v : values) {
    if (lines.empty() || v - last > thr) lines.push_back(v);
    last = v;
  }
  return lines;
}

inline std::size_t line_of(const std::vector<double>& lines, double v) {
  auto it = std::upper_bound(lines.begin(), lines.end(), v);
  return static_cast<std::size_t>(it - lines.begin()) - 1;
}

}  // namespace detail

inline RectiGrid compress_points(std::span<const std::vector<double>> points, std::size_t dim) {
  if (points.empty()) throw Error("rectilinear hull of an empty point set");
  if (dim == 0) throw Error("dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != dim) throw Error("point dimension mismatch");
    for (double x : p)
      if (!std::isfinite(x)) throw Error("non-finite point");
  }

  RectiGrid g;
  g.dim = dim;
  g.lines.resize(dim);
  g.extent.resize(dim);
  g.stride.resize(dim);
  std::size_t total = 1;
  for (std::size_t a = 0; a < dim; ++a) {
    std::vector<double> vals;
    vals.reserve(points.size());
    for (const auto& p : points) vals.push_back(p[a]);
    g.lines[a] = detail::grid_lines(std::move(vals));
    g.extent[a] = 2 * g.lines[a].size() - 1;
    g.stride[a] = total;
    if (total > kMaxGridCells / g.extent[a]) throw Error("rectilinear grid too large");
    total *= g.extent[a];
  }
  g.occupied.assign(total, 0);
  for (const auto& p : points) {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dim; ++a) flat += 2 * detail::line_of(g.lines[a], p[a]) * g.stride[a];
    g.occupied[flat] = 1;
  }
  return g;
}

/// One pass over every axis-parallel row of cells, filling the gap between
/// the first and last occupied cell. Returns whether anything changed.
inline bool fill_rows_once(RectiGrid& g) {
  bool changed = false;
  for (std::size_t a = 0; a < g.dim; ++a) {
    const std::size_t step = g.stride[a];
    const std::size_t len = g.extent[a];
    for (std::size_t start = 0; start < g.cell_count(); ++start) {
      if ((start / step) % len != 0) continue;
      std::size_t first = len, last = 0;
      for (std::size_t c = 0; c < len; ++c) {
        if (g.occupied[start + c * step]) {
          first = std::min(first, c);
          last = c;
        }
      }
      if (first >= last) continue;
      for (std::size_t c = first + 1; c < last; ++c) {
        auto& cell = g.occupied[start + c * step];
        if (!cell) {
          cell = 1;
          changed = true;
        }
      }
    }
  }
  return changed;
}

/// Iterates row filling to its fixpoint; returns the number of passes.
inline std::size_t fill_to_fixpoint(RectiGrid& g) {
  std::size_t passes = 1;
  while (fill_rows_once(g)) ++passes;
  return passes;
}

/// Greedy merge of occupied cells into boxes: grow along axis 0, then
/// axis 1, and so on, while the next slab is fully occupied and unclaimed.
inline BoxUnion merge_boxes(const RectiGrid& g) {
  BoxUnion bu;
  bu.dim = g.dim;
  std::vector<std::uint8_t> claimed(g.cell_count(), 0);

  auto slab_free = [&](const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi, std::size_t axis,
                       std::size_t at) {
    std::vector<std::size_t> idx = lo;
    idx[axis] = at;
    while (true) {
      std::size_t flat = 0;
      for (std::size_t a = 0; a < g.dim; ++a) flat += idx[a] * g.stride[a];
      if (!g.occupied[flat] || claimed[flat]) return false;
      std::size_t a = 0;
      for (; a < g.dim; ++a) {
        if (a == axis) continue;
        if (idx[a] < hi[a]) {
          ++idx[a];
          break;
        }
        idx[a] = lo[a];
      }
      if (a == g.dim) return true;
    }
  };

  for (std::size_t flat = 0; flat < g.cell_count(); ++flat) {
    if (!g.occupied[flat] || claimed[flat]) continue;
    std::vector<std::size_t> lo = g.unflatten(flat), hi = lo;
    for (std::size_t a = 0; a < g.dim; ++a)
      while (hi[a] + 1 < g.extent[a] && slab_free(lo, hi, a, hi[a] + 1)) ++hi[a];

    std::vector<std::size_t> idx = lo;
    while (true) {
      std::size_t f = 0;
      for (std::size_t a = 0; a < g.dim; ++a) f += idx[a] * g.stride[a];
      claimed[f] = 1;
      std::size_t a = 0;
      for (; a < g.dim; ++a) {
        if (idx[a] < hi[a]) {
          ++idx[a];
          break;
        }
        idx[a] = lo[a];
      }
      if (a == g.dim) break;
    }

    Box box;
    for (std::size_t a = 0; a < g.dim; ++a) {
      box.lo.push_back(g.lines[a][lo[a] / 2]);
      box.hi.push_back(g.lines[a][(hi[a] + 1) / 2]);
    }
    bu.boxes.push_back(std::move(box));
  }
  return bu;
}

/// Smallest separately convex superset of the points in R^dim, as a box
/// union. Filling rows never needs coordinates beyond the input grid, so the
/// fixpoint on the compressed grid is exact.
inline BoxUnion recti_hull(std::span<const std::vector<double>> points, std::size_t dim) {
  RectiGrid g = compress_points(points, dim);
  fill_to_fixpoint(g);
  if (fill_rows_once(g)) throw Error("rectilinear fill did not reach a fixpoint");
  return merge_boxes(g);
}

inline BoxUnion recti_hull(std::span<const Complex> points) {
  std::vector<std::vector<double>> pts;
  pts.reserve(points.size());
  for (Complex c : points) pts.push_back({c.real(), c.imag()});
  return recti_hull(pts, 2);
}

/// True iff p lies within per-axis distance tol of some box.
inline bool box_union_contains(const BoxUnion& bu, std::span<const double> p, double tol = 1e-9) {
  if (p.size() != bu.dim) throw Error("point dimension mismatch");
  for (const auto& box : bu.boxes) {
    bool in = true;
    for (std::size_t a = 0; a < bu.dim && in; ++a) in = p[a] >= box.lo[a] - tol && p[a] <= box.hi[a] + tol;
    if (in) return true;
  }
  return false;
}

inline bool box_union_contains(const BoxUnion& bu, Complex p, double tol = 1e-9) {
  const double v[2] = {p.real(), p.imag()};
  return box_union_contains(bu, v, tol);
}

/// Number of connected components; boxes touching within tol are joined.
inline std::size_t component_count(const BoxUnion& bu, double tol = 1e-12) {
  const std::size_t n = bu.boxes.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool touch = true;
      for (std::size_t a = 0; a < bu.dim && touch; ++a)
        touch = bu.boxes[i].lo[a] <= bu.boxes[j].hi[a] + tol && bu.boxes[j].lo[a] <= bu.boxes[i].hi[a] + tol;
      if (touch) parent[find(i)] = find(j);
    }
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) count += find(i) == i;
  return count;
}

namespace detail {

// Cell representatives of the common refinement of both unions' box bounds.
inline std::vector<std::vector<double>> refinement_samples(const BoxUnion& a, const BoxUnion& b) {
  std::vector<std::vector<double>> axis(a.dim);
  for (std::size_t d = 0; d < a.dim; ++d) {
    for (const auto* bu : {&a, &b})
      for (const auto& box : bu->boxes) {
        axis[d].push_back(box.lo[d]);
        axis[d].push_back(box.hi[d]);
      }
    std::sort(axis[d].begin(), axis[d].end());
    axis[d].erase(std::unique(axis[d].begin(), axis[d].end()), axis[d].end());
    std::vector<double> cells;
    for (std::size_t i = 0; i < axis[d].size(); ++i) {
      cells.push_back(axis[d][i]);
      if (i + 1 < axis[d].size()) cells.push_back(0.5 * (axis[d][i] + axis[d][i + 1]));
    }
    axis[d] = std::move(cells);
  }
  std::vector<std::vector<double>> samples{{}};
  for (std::size_t d = 0; d < a.dim; ++d) {
    std::vector<std::vector<double>> next;
    for (const auto& s : samples)
      for (double v : axis[d]) {
        next.push_back(s);
        next.back().push_back(v);
      }
    samples = std::move(next);
  }
  return samples;
}

}  // namespace detail

/// Exact set inclusion, checked on the common refinement of both grids.
inline bool box_union_subset(const BoxUnion& a, const BoxUnion& b) {
  if (a.dim != b.dim) throw Error("dimension mismatch");
  if (a.boxes.empty()) return true;
  for (const auto& s : detail::refinement_samples(a, b))
    if (box_union_contains(a, s, 0.0) && !box_union_contains(b, s, 0.0)) return false;
  return true;
}

inline bool box_union_equal(const BoxUnion& a, const BoxUnion& b) {
  return box_union_subset(a, b) && box_union_subset(b, a);
}

struct NestingReport {
  bool passed = true;
  double worst_signed_distance = std::numeric_limits<double>::infinity();
  std::size_t corners_checked = 0;
  ConvexPolygon hull;
  BoxUnion recti;
};

/// Every corner of every box of the rectilinear hull must lie in the convex
/// hull; boxes and the hull are convex, so corners suffice.
inline NestingReport hull_nesting_check(std::span<const Point2> points, double tol = 1e-9) {
  NestingReport r;
  r.hull = convex_hull_2d(points);
  std::vector<std::vector<double>> pts;
  for (const auto& p : points) pts.push_back({p.x, p.y});
  r.recti = recti_hull(pts, 2);
  for (const auto& box : r.recti.boxes) {
    for (double x : {box.lo[0], box.hi[0]})
      for (double y : {box.lo[1], box.hi[1]}) {
        const auto m = point_in_hull(r.hull, {x, y}, tol);
        ++r.corners_checked;
        r.worst_signed_distance = std::min(r.worst_signed_distance, m.signed_distance);
        if (m.verdict == HullVerdict::outside) r.passed = false;
      }
  }
  return r;
}

}  // namespace gausslucas
