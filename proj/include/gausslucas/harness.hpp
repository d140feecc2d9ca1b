#pragma once

// Instance-level verification of the Gauss-Lucas family of results:
// univariate root-hull containment, section witnesses for partial
// derivatives, separate convexity of the complement of A(theta), stability
// of partial derivatives, and the rectilinear-hull examples for cubics and
// quadratics. Each check returns a report carrying its evidence.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gausslucas/geometry.hpp"
#include "gausslucas/poly.hpp"
#include "gausslucas/random.hpp"
#include "gausslucas/roots.hpp"
#include "gausslucas/stability.hpp"

namespace gausslucas {

enum class Verdict { pass, fail, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "inconclusive";
  }
}

inline constexpr double kDefaultTol = 1e-8;

// ---------------------------------------------------------------------------
// Univariate Gauss-Lucas

struct GlReport {
  Verdict verdict = Verdict::inconclusive;
  RootSet roots;
  RootSet critical;
  ConvexPolygon hull;
  std::vector<HullMembership> memberships;  // one per critical point
  double worst_signed_distance = std::numeric_limits<double>::infinity();
};

inline GlReport verify_gl_univariate(const UniPoly& p, double tol = kDefaultTol) {
  if (p.degree() < 2) throw Error("Gauss-Lucas check needs degree >= 2");
  GlReport r;
  r.roots = roots_all(p, tol);
  r.critical = roots_all(p.derivative(), tol);
  if (!r.roots.converged || !r.critical.converged) return r;
  r.hull = convex_hull_2d(std::span<const Complex>(r.roots.roots));
  r.verdict = Verdict::pass;
  for (Complex w : r.critical.roots) {
    const auto m = point_in_hull(r.hull, Point2::from(w), tol);
    r.memberships.push_back(m);
    r.worst_signed_distance = std::min(r.worst_signed_distance, m.signed_distance);
    if (m.verdict == HullVerdict::outside) r.verdict = Verdict::fail;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Section witnesses for zeros of a partial derivative

enum class SectionOutcome { pass, fail, degenerate, inconclusive };

inline const char* to_string(SectionOutcome o) {
  switch (o) {
    case SectionOutcome::pass: return "pass";
    case SectionOutcome::fail: return "fail";
    case SectionOutcome::degenerate: return "degenerate";
    default: return "inconclusive";
  }
}

/// Evidence that z lies in every separately convex superset of the zero set:
/// the one-variable section f through z has z_k in the hull of its roots.
struct SectionWitness {
  std::size_t k = 1;
  ComplexVector z;
  UniPoly restriction;
  RootSet roots_of_f;
  ConvexPolygon hull;
  SectionOutcome outcome = SectionOutcome::inconclusive;
  HullMembership membership{HullVerdict::outside, 0};
  double derivative_residual = 0;  // |f'(z_k)|, equal to |Q_k(z)| up to rounding
};

inline bool is_critical_point(const MultiPoly& qk, std::span<const Complex> z, double tol) {
  return std::abs(evaluate(qk, z)) <= tol * absolute_scale(qk, z);
}

/// z must be a numerical zero of the k-th partial derivative, which must be
/// non-null. A null or constant section is reported as degenerate.
inline SectionWitness verify_section_witness(const MultiPoly& p, std::size_t k, std::span<const Complex> z,
                                      double tol = kDefaultTol) {
  const MultiPoly qk = partial_derivative(p, k);
  if (qk.is_null()) throw Error("hypothesis violated: partial derivative is null");
  if (!is_critical_point(qk, z, tol)) throw Error("point is not a zero of the partial derivative at the given tolerance");

  SectionWitness w;
  w.k = k;
  w.z.assign(z.begin(), z.end());
  const ComplexVector others = omit_coordinate(z, k);
  w.restriction = restrict_section(p, k, others);
  const Complex zk = z[k - 1];
  w.derivative_residual = std::abs(w.restriction.derivative()(zk));
  if (w.restriction.degree() < 1) {
    w.outcome = SectionOutcome::degenerate;
    return w;
  }
  w.roots_of_f = roots_all(w.restriction, tol);
  if (!w.roots_of_f.converged) return w;
  w.hull = convex_hull_2d(std::span<const Complex>(w.roots_of_f.roots));
  w.membership = point_in_hull(w.hull, Point2::from(zk), tol);
  w.outcome = w.membership.verdict == HullVerdict::outside ? SectionOutcome::fail : SectionOutcome::pass;
  return w;
}

struct SectionCriticalPoints {
  std::vector<ComplexVector> points;
  bool degenerate = false;  // section null or constant
  std::size_t rejected = 0; // derivative roots failing the |Q_k| check
};

/// Zeros of d/dw restrict(p, k, others), lifted back to C^M.
inline SectionCriticalPoints find_section_critical_points(const MultiPoly& p, std::size_t k,
                                                          std::span<const Complex> others, double tol = kDefaultTol) {
  SectionCriticalPoints out;
  const UniPoly f = restrict_section(p, k, others);
  if (f.degree() < 1) {
    out.degenerate = true;
    return out;
  }
  const UniPoly df = f.derivative();
  if (df.degree() < 1) return out;
  const MultiPoly qk = partial_derivative(p, k);
  for (Complex w : roots_all(df, tol).roots) {
    ComplexVector z = insert_coordinate(others, k, w);
    if (is_finite(w) && is_critical_point(qk, z, tol))
      out.points.push_back(std::move(z));
    else
      ++out.rejected;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sections of the complement of A(theta)

/// Section of the complement of A(theta) through fixed coordinates:
/// { x+iy : min(x sin(theta_k) + y cos(theta_k), c) <= 0 } where c is the
/// smallest Im(e^{i theta_j} z_j) over the fixed coordinates.
struct ComplementSection {
  double theta = 0;
  double c = std::numeric_limits<double>::infinity();

  bool contains(const Point2& p) const { return std::min(rotated_imag(theta, {p.x, p.y}), c) <= 0; }
  bool whole_plane() const { return c <= 0; }
};

inline ComplementSection complement_section(const ThetaVector& theta, std::size_t k, std::span<const Complex> fixed) {
  if (k < 1 || k > theta.size()) throw Error("coordinate index out of range");
  if (fixed.size() + 1 != theta.size()) throw Error("fixed coordinates must number M-1");
  ComplementSection s;
  s.theta = theta.angles[k - 1];
  for (std::size_t j = 0, slot = 0; j < theta.size(); ++j) {
    if (j == k - 1) continue;
    s.c = std::min(s.c, rotated_imag(theta.angles[j], fixed[slot++]));
  }
  return s;
}

struct ComplementSectionReport {
  Verdict verdict = Verdict::pass;
  ComplementSection section;
  std::size_t midpoint_trials = 0;
  std::size_t midpoint_violations = 0;
  std::size_t agreement_trials = 0;
  std::size_t disagreements = 0;
};

inline constexpr double kSectionSampleBox = 10.0;

/// Midpoint convexity of the section on random pairs drawn from it, and
/// pointwise agreement of the section formula with the complement of A(theta)
/// evaluated directly by complex rotation.
inline ComplementSectionReport verify_complement_section(const ThetaVector& theta, std::size_t k, std::span<const Complex> fixed,
                                  std::size_t samples, std::uint64_t seed, std::size_t agreement_points = 10000) {
  ComplementSectionReport r;
  r.section = complement_section(theta, k, fixed);
  Rng rng(seed);
  auto draw_member = [&] {
    while (true) {
      const Point2 p{rng.uniform(-kSectionSampleBox, kSectionSampleBox), rng.uniform(-kSectionSampleBox, kSectionSampleBox)};
      if (r.section.contains(p)) return p;
    }
  };
  for (std::size_t i = 0; i < samples; ++i) {
    const Point2 a = draw_member(), b = draw_member();
    ++r.midpoint_trials;
    if (!r.section.contains({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)})) ++r.midpoint_violations;
  }
  for (std::size_t i = 0; i < agreement_points; ++i) {
    const Complex w = rng.complex_in_box(kSectionSampleBox);
    const ComplexVector z = insert_coordinate(fixed, k, w);
    bool in_a = true;
    for (std::size_t j = 0; j < z.size(); ++j) in_a = in_a && (std::polar(1.0, theta.angles[j]) * z[j]).imag() > 0;
    ++r.agreement_trials;
    if (r.section.contains(Point2::from(w)) != !in_a) ++r.disagreements;
  }
  if (r.midpoint_violations != 0 || r.disagreements != 0) r.verdict = Verdict::fail;
  return r;
}

// ---------------------------------------------------------------------------
// Stability of partial derivatives

enum class DerivativeStabilityOutcome { pass, hypothesis_violated, derivative_counterexample, skipped_null_derivative };

inline const char* to_string(DerivativeStabilityOutcome o) {
  switch (o) {
    case DerivativeStabilityOutcome::pass: return "pass";
    case DerivativeStabilityOutcome::hypothesis_violated: return "hypothesis-violated";
    case DerivativeStabilityOutcome::derivative_counterexample: return "derivative-counterexample";
    default: return "skipped-null-derivative";
  }
}

struct DerivativeStabilityReport {
  DerivativeStabilityOutcome outcome = DerivativeStabilityOutcome::pass;
  Verdict verdict = Verdict::pass;
  std::size_t k = 1;
  StabilityVerdict input;
  std::optional<StabilityVerdict> derivative;
  std::optional<MultiPoly> derivative_poly;
};

inline DerivativeStabilityReport verify_derivative_stability(const MultiPoly& p, const ThetaVector& theta, std::size_t k, std::size_t trials,
                                      std::uint64_t seed, double tol = kDefaultTol) {
  DerivativeStabilityReport r;
  r.k = k;
  r.input = mc_falsifier(p, theta, trials, seed, tol);
  if (r.input.status == StabilityStatus::counterexample) {
    r.outcome = DerivativeStabilityOutcome::hypothesis_violated;
    r.verdict = Verdict::fail;
    return r;
  }
  MultiPoly qk = partial_derivative(p, k);
  if (qk.is_null()) {
    r.outcome = DerivativeStabilityOutcome::skipped_null_derivative;
    r.verdict = Verdict::inconclusive;
    return r;
  }
  r.derivative = mc_falsifier(qk, theta, trials, seed, tol);
  r.derivative_poly = std::move(qk);
  if (r.derivative->status == StabilityStatus::counterexample) {
    r.outcome = DerivativeStabilityOutcome::derivative_counterexample;
    r.verdict = Verdict::fail;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rectilinear hull examples

struct CubicContainmentReport {
  CubicSpec spec;
  CriticalRegime regime = CriticalRegime::complex_critical;
  std::array<Complex, 2> critical{};
  BoxUnion root_hull;
  bool contained = false;
  bool axis_aligned_roots = false;
  bool iff_holds = false;  // contained == axis_aligned_roots
  bool outside_premise = false;  // real-critical regime
};

/// Cubic with roots a+bi, a-bi, c. Its critical points lie in the
/// rectilinear hull of the roots exactly when the roots sit on a line
/// parallel to an axis, i.e. a = c, provided 3b^2 > (a-c)^2. Outside that
/// regime the report is produced but flagged.
inline CubicContainmentReport classify_cubic(const CubicSpec& spec, double tol = 1e-9) {
  if (spec.b == 0) throw Error("cubic spec requires b != 0");
  CubicContainmentReport r;
  r.spec = spec;
  const std::vector<Complex> roots{{spec.a, spec.b}, {spec.a, -spec.b}, {spec.c, 0}};
  r.root_hull = recti_hull(std::span<const Complex>(roots));
  const auto crit = cubic_derivative_roots(spec);
  r.regime = crit.regime;
  r.critical = crit.points;
  r.contained = box_union_contains(r.root_hull, crit.points[0], tol) && box_union_contains(r.root_hull, crit.points[1], tol);
  r.axis_aligned_roots = snapped_equal(spec.a, spec.c);
  r.iff_holds = r.contained == r.axis_aligned_roots;
  r.outside_premise = crit.regime == CriticalRegime::real_critical;
  return r;
}

struct QuadraticReport {
  Complex r1, r2, critical;
  BoxUnion root_hull;
  bool degenerate = false;  // r1 == r2
  bool contained = false;
  bool aligned = false;
  std::size_t components = 0;
  bool iff_holds = false;
};

inline QuadraticReport classify_quadratic(Complex r1, Complex r2, double tol = 1e-9) {
  QuadraticReport r;
  r.r1 = r1;
  r.r2 = r2;
  r.critical = 0.5 * (r1 + r2);
  const std::vector<Complex> roots{r1, r2};
  r.root_hull = recti_hull(std::span<const Complex>(roots));
  r.components = component_count(r.root_hull);
  r.degenerate = r1 == r2;
  r.aligned = snapped_equal(r1.real(), r2.real()) || snapped_equal(r1.imag(), r2.imag());
  r.contained = box_union_contains(r.root_hull, r.critical, tol);
  r.iff_holds = r.contained == r.aligned;
  return r;
}

// ---------------------------------------------------------------------------
// Seeded sweeps

struct SweepSummary {
  std::string name;
  std::size_t cases = 0;
  std::size_t pass = 0, fail = 0, degenerate = 0, inconclusive = 0;
  double worst = std::numeric_limits<double>::infinity();  // smallest relative signed distance seen
  std::vector<std::size_t> failing_cases;

  Verdict verdict() const {
    if (fail > 0) return Verdict::fail;
    if (pass == 0 && (inconclusive > 0 || degenerate > 0)) return Verdict::inconclusive;
    return inconclusive > 0 ? Verdict::inconclusive : Verdict::pass;
  }

  void record_fail(std::size_t c) {
    ++fail;
    if (failing_cases.size() < 20) failing_cases.push_back(c);
  }
};

inline double relative_distance(const ConvexPolygon& hull, const HullMembership& m) {
  const double d = hull.diameter();
  return d > 0 ? m.signed_distance / d : m.signed_distance;
}

/// Random polynomials of degree 2..12 with coefficients of magnitude <= 10.
inline SweepSummary sweep_gl(std::size_t count, std::uint64_t seed, double tol = kDefaultTol) {
  SweepSummary s;
  s.name = "gauss-lucas";
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const UniPoly p = random_unipoly(rng, rng.integer(2, 12), 10.0);
    const GlReport r = verify_gl_univariate(p, tol);
    ++s.cases;
    for (const auto& m : r.memberships) s.worst = std::min(s.worst, relative_distance(r.hull, m));
    switch (r.verdict) {
      case Verdict::pass: ++s.pass; break;
      case Verdict::fail: s.record_fail(i); break;
      default: ++s.inconclusive;
    }
  }
  return s;
}

/// Random (p, k, others) with M in {2,3,4} and total degree <= 5; every
/// section critical point goes through verify_section_witness. Counts are per
/// critical point, degenerate sections per case.
inline SweepSummary sweep_section_witnesses(std::size_t count, std::uint64_t seed, double tol = kDefaultTol) {
  SweepSummary s;
  s.name = "section-witnesses";
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
    MultiPoly p(m);
    std::size_t k = 1;
    do {
      p = random_multipoly(rng, m, 5, 8, 10.0);
      k = static_cast<std::size_t>(rng.integer(1, static_cast<int>(m)));
    } while (partial_derivative(p, k).is_null());
    ComplexVector others(m - 1);
    for (auto& o : others) o = rng.coin(0.1) ? Complex{} : rng.complex_in_box(2.0);

    ++s.cases;
    const auto pts = find_section_critical_points(p, k, others, tol);
    if (pts.degenerate) {
      ++s.degenerate;
      continue;
    }
    s.inconclusive += pts.rejected;
    for (const auto& z : pts.points) {
      const SectionWitness w = verify_section_witness(p, k, z, tol);
      switch (w.outcome) {
        case SectionOutcome::pass:
          ++s.pass;
          s.worst = std::min(s.worst, relative_distance(w.hull, w.membership));
          break;
        case SectionOutcome::fail:
          s.worst = std::min(s.worst, relative_distance(w.hull, w.membership));
          s.record_fail(i);
          break;
        case SectionOutcome::degenerate: ++s.degenerate; break;
        default: ++s.inconclusive;
      }
    }
  }
  return s;
}

/// Generator-produced theta-stable polynomials (M <= 3, degree <= 5, theta
/// alternating between zero and random). Every partial derivative is run
/// through the falsifier; a certified counterexample on the input or any
/// derivative is a failure. Null derivatives count as degenerate.
inline SweepSummary sweep_derivative_stability(std::size_t count, std::size_t trials, std::uint64_t seed, double tol = kDefaultTol) {
  SweepSummary s;
  s.name = "derivative-stability";
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
    const unsigned degree = static_cast<unsigned>(rng.integer(1, 5));
    ThetaVector theta = ThetaVector::zeros(m);
    if (i % 2 == 1)
      for (auto& t : theta.angles) t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const MultiPoly p = random_stable_poly(m, degree, theta, rng.bits());
    ++s.cases;
    const std::uint64_t trial_seed = rng.bits();
    if (mc_falsifier(p, theta, trials, trial_seed, tol).status == StabilityStatus::counterexample) {
      s.record_fail(i);
      continue;
    }
    for (std::size_t k = 1; k <= m; ++k) {
      const MultiPoly qk = partial_derivative(p, k);
      if (qk.is_null()) {
        ++s.degenerate;
        continue;
      }
      if (mc_falsifier(qk, theta, trials, trial_seed + k, tol).status == StabilityStatus::counterexample)
        s.record_fail(i);
      else
        ++s.pass;
    }
  }
  return s;
}

/// Random theta in [-pi, pi]^M and fixed coordinates in [-3,3]^2, M in 1..4.
/// `pairs` midpoint trials split evenly over `configs` configurations.
inline SweepSummary sweep_complement_sections(std::size_t configs, std::size_t pairs, std::uint64_t seed,
                                 std::size_t agreement_points = 10000) {
  SweepSummary s;
  s.name = "complement-sections";
  const std::size_t per = std::max<std::size_t>(1, pairs / std::max<std::size_t>(1, configs));
  const std::size_t agree_per = std::max<std::size_t>(1, agreement_points / std::max<std::size_t>(1, configs));
  for (std::size_t i = 0; i < configs; ++i) {
    Rng rng(derive_seed(seed, i));
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    ThetaVector theta = ThetaVector::zeros(m);
    for (auto& t : theta.angles) t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    ComplexVector fixed(m - 1);
    for (auto& f : fixed) f = rng.complex_in_box(3.0);
    const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<int>(m)));
    const ComplementSectionReport r = verify_complement_section(theta, k, fixed, per, rng.bits(), agree_per);
    ++s.cases;
    if (r.verdict == Verdict::pass)
      ++s.pass;
    else
      s.record_fail(i);
  }
  return s;
}

/// 21 x 21 x 21 grid: a, c in [-1, 1], b in [0.1, 2]; only points with
/// 3b^2 > (a-c)^2 are classified.
inline SweepSummary sweep_cubic_grid(double tol = 1e-9) {
  SweepSummary s;
  s.name = "cubic-grid";
  auto axis = [](double lo, double hi, int i) { return lo + (hi - lo) * i / 20.0; };
  std::size_t index = 0;
  for (int ia = 0; ia <= 20; ++ia)
    for (int ib = 0; ib <= 20; ++ib)
      for (int ic = 0; ic <= 20; ++ic, ++index) {
        const CubicSpec spec{axis(-1, 1, ia), axis(0.1, 2, ib), axis(-1, 1, ic)};
        if (!(3 * spec.b * spec.b > (spec.a - spec.c) * (spec.a - spec.c))) continue;
        const CubicContainmentReport r = classify_cubic(spec, tol);
        ++s.cases;
        if (r.regime == CriticalRegime::complex_critical && r.iff_holds)
          ++s.pass;
        else
          s.record_fail(index);
      }
  return s;
}

/// Quadratic roots: even cases share a real or imaginary part, odd cases are
/// generic.
inline SweepSummary sweep_quadratic(std::size_t count, std::uint64_t seed, double tol = 1e-9) {
  SweepSummary s;
  s.name = "quadratic";
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    Complex r1 = rng.complex_in_box(5.0), r2 = rng.complex_in_box(5.0);
    if (i % 2 == 0) {
      if (rng.coin())
        r2.real(r1.real());
      else
        r2.imag(r1.imag());
    }
    ++s.cases;
    const QuadraticReport r = classify_quadratic(r1, r2, tol);
    if (r.degenerate) {
      ++s.degenerate;
    } else if (r.iff_holds) {
      ++s.pass;
    } else {
      s.record_fail(i);
    }
  }
  return s;
}

/// Rectilinear hull inside the convex hull for random planar point sets.
inline SweepSummary sweep_nesting(std::size_t count, std::uint64_t seed, std::size_t points = 8) {
  SweepSummary s;
  s.name = "hull-nesting";
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    std::vector<Point2> pts(points);
    for (auto& p : pts) {
      // mix continuous and lattice coordinates so rows actually fill
      p = rng.coin() ? Point2{rng.uniform(-5, 5), rng.uniform(-5, 5)}
                     : Point2{static_cast<double>(rng.integer(-3, 3)), static_cast<double>(rng.integer(-3, 3))};
    }
    const auto r = hull_nesting_check(pts);
    ++s.cases;
    const double diam = r.hull.diameter();
    s.worst = std::min(s.worst, diam > 0 ? r.worst_signed_distance / diam : r.worst_signed_distance);
    if (r.passed)
      ++s.pass;
    else
      s.record_fail(i);
  }
  return s;
}

}  // namespace gausslucas
