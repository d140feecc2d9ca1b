#pragma once

// Stability with respect to the open product region
//   A(theta) = { z : Im(e^{i theta_k} z_k) > 0 for every k }.
// theta = 0 is the usual upper half-plane notion.

#include <cstdint>
#include <optional>
#include <vector>

#include "gausslucas/poly.hpp"
#include "gausslucas/random.hpp"
#include "gausslucas/roots.hpp"

namespace gausslucas {

struct ThetaVector {
  std::vector<double> angles;

  static ThetaVector zeros(std::size_t m) { return {std::vector<double>(m, 0.0)}; }
  std::size_t size() const { return angles.size(); }
};

enum class StabilityStatus { stable_certified, no_counterexample_found, counterexample };

inline const char* to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::stable_certified: return "stable-certified";
    case StabilityStatus::no_counterexample_found: return "no-counterexample-found";
    default: return "counterexample";
  }
}

struct StabilityVerdict {
  StabilityStatus status = StabilityStatus::no_counterexample_found;
  std::optional<ComplexVector> witness;  // present iff status == counterexample
  double residual = 0;                   // |p(witness)|
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trial_index;
};

inline constexpr double kMaxHeavyTail = 1e6;

/// Im(e^{i theta} z), written out so every caller rounds identically.
inline double rotated_imag(double theta, Complex z) {
  return z.real() * std::sin(theta) + z.imag() * std::cos(theta);
}

inline bool in_region(const ThetaVector& theta, std::span<const Complex> z) {
  if (theta.size() != z.size()) throw Error("theta and point dimensions differ");
  for (std::size_t k = 0; k < z.size(); ++k)
    if (!(rotated_imag(theta.angles[k], z[k]) > 0)) return false;
  return true;
}

/// Substitutes z_k = e^{-i theta_k} u_k. The result is upper-half-plane
/// stable iff p is theta-stable.
inline MultiPoly rotate_coords(const MultiPoly& p, const ThetaVector& theta) {
  if (theta.size() != p.num_vars()) throw Error("theta has wrong dimension");
  MultiPoly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    double angle = 0;
    for (std::size_t k = 0; k < m.size(); ++k) angle += theta.angles[k] * m[k];
    out.add_term(m, angle == 0 ? c : c * std::polar(1.0, -angle));
  }
  return out;
}

/// Maps u to z = e^{-i theta} u coordinatewise.
inline ComplexVector unrotate_point(const ThetaVector& theta, std::span<const Complex> u) {
  ComplexVector z(u.size());
  for (std::size_t k = 0; k < u.size(); ++k)
    z[k] = theta.angles[k] == 0 ? u[k] : std::polar(1.0, -theta.angles[k]) * u[k];
  return z;
}

/// Exact for M = 1 up to root-finder accuracy: certified stable iff no root r
/// has Im(e^{i theta} r) > tol (1 + |r|).
inline StabilityVerdict univariate_theta_stable(const UniPoly& p, double theta, double tol = 1e-8) {
  if (p.is_null()) throw Error("stability is not defined for the null polynomial");
  StabilityVerdict v;
  if (p.degree() == 0) {
    v.status = StabilityStatus::stable_certified;
    return v;
  }
  const RootSet rs = roots_all(p, tol);
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Complex r = rs.roots[i];
    if (rotated_imag(theta, r) > tol * (1 + std::abs(r))) {
      v.status = StabilityStatus::counterexample;
      v.witness = ComplexVector{r};
      v.residual = rs.residuals[i];
      return v;
    }
  }
  v.status = rs.converged ? StabilityStatus::stable_certified : StabilityStatus::no_counterexample_found;
  return v;
}

namespace detail {

// q(x + t v) for real x, v as a polynomial in t, by binomial expansion of
// each monomial factor.
class LineRestriction {
 public:
  explicit LineRestriction(const MultiPoly& q) : num_vars_(q.num_vars()), degree_(q.total_degree()) {
    max_exp_.assign(num_vars_, 0);
    for (const auto& [m, c] : q.terms()) {
      terms_.emplace_back(m, c);
      for (std::size_t k = 0; k < num_vars_; ++k) max_exp_[k] = std::max(max_exp_[k], m[k]);
    }
    unsigned top = 0;
    for (unsigned e : max_exp_) top = std::max(top, e);
    binom_.assign(top + 1, std::vector<double>(top + 1, 0.0));
    for (unsigned n = 0; n <= top; ++n) {
      binom_[n][0] = 1;
      for (unsigned j = 1; j <= n; ++j) binom_[n][j] = binom_[n - 1][j - 1] + (j < n ? binom_[n - 1][j] : 0.0);
    }
  }

  UniPoly operator()(std::span<const double> x, std::span<const double> v) {
    // expansions_[k][e] = coefficients of (x_k + t v_k)^e
    expansions_.resize(num_vars_);
    for (std::size_t k = 0; k < num_vars_; ++k) {
      const unsigned top = max_exp_[k];
      std::vector<double> xp(top + 1, 1.0), vp(top + 1, 1.0);
      for (unsigned e = 1; e <= top; ++e) {
        xp[e] = xp[e - 1] * x[k];
        vp[e] = vp[e - 1] * v[k];
      }
      expansions_[k].assign(top + 1, {});
      for (unsigned e = 0; e <= top; ++e) {
        auto& row = expansions_[k][e];
        row.resize(e + 1);
        for (unsigned j = 0; j <= e; ++j) row[j] = binom_[e][j] * xp[e - j] * vp[j];
      }
    }

    std::vector<Complex> g(degree_ + 1);
    std::vector<double> acc, tmp;
    for (const auto& [m, c] : terms_) {
      acc.assign(1, 1.0);
      for (std::size_t k = 0; k < num_vars_; ++k) {
        if (m[k] == 0) continue;
        const auto& f = expansions_[k][m[k]];
        tmp.assign(acc.size() + f.size() - 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i)
          for (std::size_t j = 0; j < f.size(); ++j) tmp[i + j] += acc[i] * f[j];
        acc.swap(tmp);
      }
      for (std::size_t i = 0; i < acc.size(); ++i) g[i] += c * acc[i];
    }
    return UniPoly(std::move(g));
  }

 private:
  std::size_t num_vars_;
  unsigned degree_;
  std::vector<std::pair<Monomial, Complex>> terms_;
  std::vector<unsigned> max_exp_;
  std::vector<std::vector<double>> binom_;
  std::vector<std::vector<std::vector<double>>> expansions_;
};

}  // namespace detail

/// Searches for a zero of p inside A(theta) along random complex lines
/// u = x + t v (x real, v strictly positive) in rotated coordinates. Every
/// point of the open upper product half-plane lies on such a line. A
/// counterexample is reported only after checking strict membership in
/// A(theta) and |p(z)| <= tol * absolute_scale(p, z). The lowest trial
/// index wins, so the verdict is a function of (p, theta, trials, seed).
inline StabilityVerdict mc_falsifier(const MultiPoly& p, const ThetaVector& theta, std::size_t trials,
                                     std::uint64_t seed, double tol = 1e-8) {
  if (p.is_null()) throw Error("stability is not defined for the null polynomial");
  if (trials == 0) throw Error("falsifier needs at least one trial");
  const MultiPoly q = rotate_coords(p, theta);
  const std::size_t m = p.num_vars();

  StabilityVerdict verdict;
  verdict.seed = seed;
  verdict.trials = trials;
  if (q.total_degree() == 0) return verdict;

  detail::LineRestriction restrict_line(q);
  std::vector<double> x(m), v(m);
  ComplexVector u(m);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    for (std::size_t k = 0; k < m; ++k) {
      const double mag = std::min(1.0 / rng.open01() - 1.0, kMaxHeavyTail);
      x[k] = rng.coin() ? mag : -mag;
      v[k] = std::min(1.0 / rng.open01(), kMaxHeavyTail);
    }
    const UniPoly g = restrict_line(x, v);
    if (g.degree() < 1) continue;
    const RootSet rs = roots_all(g, tol);
    for (Complex t : rs.roots) {
      if (!is_finite(t) || !(t.imag() > tol * (1 + std::abs(t)))) continue;
      for (std::size_t k = 0; k < m; ++k) u[k] = x[k] + t * v[k];
      ComplexVector z = unrotate_point(theta, u);
      if (!in_region(theta, z)) continue;
      const double residual = std::abs(evaluate(p, z));
      if (residual > tol * absolute_scale(p, z)) continue;
      verdict.status = StabilityStatus::counterexample;
      verdict.witness = std::move(z);
      verdict.residual = residual;
      verdict.trials = trial + 1;
      verdict.trial_index = trial;
      return verdict;
    }
  }
  return verdict;
}

/// Product of `degree` affine forms b + sum a_k u_k with a_k >= 0 (at least
/// one positive) and Im b > 0, built in rotated coordinates u = e^{i theta} z.
/// Each factor has positive imaginary part on A(theta), so the product is
/// theta-stable.
inline MultiPoly random_stable_poly(std::size_t num_vars, unsigned degree, const ThetaVector& theta,
                                    std::uint64_t seed) {
  if (num_vars == 0 || degree == 0) throw Error("stable generator needs num_vars >= 1 and degree >= 1");
  if (theta.size() != num_vars) throw Error("theta has wrong dimension");
  Rng rng(seed);
  MultiPoly product = MultiPoly::constant(num_vars, 1.0);
  for (unsigned f = 0; f < degree; ++f) {
    MultiPoly factor = MultiPoly::constant(num_vars, Complex{rng.uniform(-2, 2), rng.uniform(0.1, 1.1)});
    std::vector<double> a(num_vars, 0.0);
    bool any = false;
    for (auto& ak : a) {
      if (rng.coin(0.7)) {
        ak = rng.uniform(0.2, 2.0);
        any = true;
      }
    }
    if (!any) a[static_cast<std::size_t>(rng.integer(0, static_cast<int>(num_vars) - 1))] = rng.uniform(0.2, 2.0);
    for (std::size_t k = 0; k < num_vars; ++k)
      if (a[k] > 0) factor = factor + poly_scale(MultiPoly::variable(num_vars, k + 1), a[k]);
    product = product * factor;
  }
  ThetaVector back = theta;
  for (auto& t : back.angles) t = -t;
  return rotate_coords(product, back);
}

}  // namespace gausslucas
