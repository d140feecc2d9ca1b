#pragma once

// Simultaneous root finding (Aberth-Ehrlich) with residual certification,
// plus the closed form for critical points of real cubics with one complex
// conjugate root pair.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gausslucas/poly.hpp"

namespace gausslucas {

struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |p(r)| per root
  double scale = 0;               // coefficient 1-norm of p
  bool converged = false;
  int iterations = 0;
};

inline constexpr int kDefaultRootIterations = 200;

/// Certification threshold for a candidate root r of p:
/// tol * ||p||_1 * max(1,|r|)^deg.
inline double residual_bound(const UniPoly& p, Complex r, double tol) {
  return tol * p.coefficient_norm() * std::pow(std::max(1.0, std::abs(r)), p.degree());
}

namespace detail {

struct HornerResult {
  Complex value, slope;
  double abs_sum;  // sum |a_j| |z|^j, for the rounding-error estimate
};

inline HornerResult horner(std::span<const Complex> a, Complex z) {
  Complex v{}, d{};
  double s = 0;
  const double az = std::abs(z);
  for (std::size_t j = a.size(); j-- > 0;) {
    d = d * z + v;
    v = v * z + a[j];
    s = s * az + std::abs(a[j]);
  }
  return {v, d, s};
}

}  // namespace detail

/// All roots of p. Zero low-order coefficients are deflated as exact roots
/// at 0; the remaining factor is solved by Aberth iteration from points on a
/// circle of radius 1 + max|a_j/a_n|, then each root gets three guarded
/// Newton steps. Multiple roots come back as clusters.
inline RootSet roots_all(const UniPoly& p, double tol = 1e-8, int max_iterations = kDefaultRootIterations) {
  if (p.is_null()) throw Error("null polynomial has no root set");
  if (p.degree() == 0) throw Error("no roots: polynomial is a nonzero constant");

  const auto& all = p.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  const std::span<const Complex> a(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());
  const std::size_t n = a.size() - 1;

  RootSet out;
  out.scale = p.coefficient_norm();
  std::vector<Complex> z(n);
  bool converged = true;

  if (n == 1) {
    z[0] = -a[0] / a[1];
  } else if (n > 1) {
    double radius = 0;
    for (std::size_t j = 0; j < n; ++j) radius = std::max(radius, std::abs(a[j] / a[n]));
    radius += 1;
    constexpr double phase = 0.5;  // not a rational multiple of pi
    for (std::size_t j = 0; j < n; ++j)
      z[j] = std::polar(radius, 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + phase);

    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<bool> frozen(n, false);
    converged = false;
    int it = 0;
    while (it < max_iterations) {
      ++it;
      bool all_frozen = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (frozen[i]) continue;
        const auto h = detail::horner(a, z[i]);
        if (std::abs(h.value) <= 4.0 * static_cast<double>(n) * eps * h.abs_sum) {
          frozen[i] = true;
          continue;
        }
        Complex repulsion{};
        for (std::size_t j = 0; j < n; ++j)
          if (j != i && z[j] != z[i]) repulsion += 1.0 / (z[i] - z[j]);
        const Complex denom = h.slope - h.value * repulsion;
        if (denom == Complex{} || !is_finite(denom)) {
          z[i] *= Complex{1.0, 1e-7};
          all_frozen = false;
          continue;
        }
        const Complex step = h.value / denom;
        z[i] -= step;
        if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z[i])))
          frozen[i] = true;
        else
          all_frozen = false;
      }
      if (all_frozen) {
        converged = true;
        break;
      }
    }
    out.iterations = it;

    for (auto& r : z) {
      for (int s = 0; s < 3; ++s) {
        const auto h = detail::horner(a, r);
        if (h.slope == Complex{} || h.value == Complex{}) break;
        const Complex cand = r - h.value / h.slope;
        if (!is_finite(cand) || std::abs(detail::horner(a, cand).value) >= std::abs(h.value)) break;
        r = cand;
      }
    }
  }

  out.roots.assign(zeros, Complex{});
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  out.residuals.reserve(out.roots.size());
  for (Complex r : out.roots) {
    out.residuals.push_back(std::abs(p(r)));
    if (!is_finite(r) || out.residuals.back() > residual_bound(p, r, tol)) converged = false;
  }
  out.converged = converged;
  return out;
}

struct RootCertificate {
  std::vector<double> residuals;
  std::vector<bool> passed;
  bool all_passed = true;
};

/// Pure evaluation check of candidate roots against residual_bound.
inline RootCertificate certify_roots(const UniPoly& p, std::span<const Complex> candidates, double tol) {
  if (p.is_null()) throw Error("cannot certify roots of the null polynomial");
  RootCertificate cert;
  for (Complex c : candidates) {
    const double r = std::abs(p(c));
    const bool ok = is_finite(c) && r <= residual_bound(p, c, tol);
    cert.residuals.push_back(r);
    cert.passed.push_back(ok);
    cert.all_passed = cert.all_passed && ok;
  }
  return cert;
}

/// Real cubic (z-c)((z-a)^2+b^2) with roots a+bi, a-bi, c.
struct CubicSpec {
  double a = 0, b = 1, c = 0;

  UniPoly polynomial() const { return from_roots({Complex{a, b}, Complex{a, -b}, Complex{c, 0}}); }
};

enum class CriticalRegime { complex_critical, real_critical };

struct CubicCriticalPoints {
  std::array<Complex, 2> points;
  CriticalRegime regime;
};

/// Critical points (2a+c)/3 +- (1/3) sqrt(3b^2 - (a-c)^2). When the radicand
/// is not positive the two critical points are real.
inline CubicCriticalPoints cubic_derivative_roots(const CubicSpec& s) {
  if (s.b == 0) throw Error("cubic spec requires b != 0");
  const double center = (2 * s.a + s.c) / 3;
  const double disc = 3 * s.b * s.b - (s.a - s.c) * (s.a - s.c);
  if (disc > 0) {
    const double h = std::sqrt(disc) / 3;
    return {{Complex{center, h}, Complex{center, -h}}, CriticalRegime::complex_critical};
  }
  const double h = std::sqrt(-disc) / 3;
  return {{Complex{center + h, 0}, Complex{center - h, 0}}, CriticalRegime::real_critical};
}

inline const char* to_string(CriticalRegime r) {
  return r == CriticalRegime::complex_critical ? "complex-critical" : "real-critical";
}

}  // namespace gausslucas
