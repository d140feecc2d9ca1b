#include <catch_amalgamated.hpp>

#include <numbers>

#include "gausslucas/harness.hpp"
#include "gausslucas/parser.hpp"
#include "oracles.hpp"

using namespace gausslucas;

namespace {

const Complex I{0.0, 1.0};

}  // namespace

TEST_CASE("Gauss-Lucas on a repeated root", "[harness]") {
  const GlReport r = verify_gl_univariate(from_roots(std::vector<Complex>(4, Complex{0.5, 2})));
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.memberships.size() == 3);
}

TEST_CASE("Gauss-Lucas on the factored cubic", "[harness]") {
  const GlReport r = verify_gl_univariate(to_uni(parse_poly("z1^3 - 2*z1^2 + z1 - 2")));
  REQUIRE(r.verdict == Verdict::pass);
  CHECK(r.hull.vertices.size() == 3);
  const auto q = oracle::quadratic_roots(3.0, -4.0, 1.0);
  CHECK(oracle::matched_max_error(r.critical.roots, {q[0], q[1]}) < 1e-12);
  for (const auto& m : r.memberships) CHECK(m.verdict == HullVerdict::inside);
}

TEST_CASE("Gauss-Lucas error and inconclusive paths", "[harness]") {
  CHECK_THROWS_AS(verify_gl_univariate(UniPoly({1.0, 1.0})), Error);
  CHECK_THROWS_AS(verify_gl_univariate(UniPoly{}), Error);
}

TEST_CASE("Gauss-Lucas sweep passes", "[harness][property]") {
  const SweepSummary s = sweep_gl(200, 1);
  CHECK(s.cases == 200);
  CHECK(s.fail == 0);
  CHECK(s.pass + s.inconclusive == 200);
  CHECK(s.pass >= 195);
  CHECK(s.worst >= -1e-8);
}

TEST_CASE("section witness for the circle", "[harness]") {
  const MultiPoly p = parse_poly("z1^2 + z2^2");
  const ComplexVector z{0.0, 1.0};
  const SectionWitness w = verify_section_witness(p, 1, z);
  CHECK(w.outcome == SectionOutcome::pass);
  CHECK(w.restriction == UniPoly({1.0, 0.0, 1.0}));
  CHECK(w.hull.vertices.size() == 2);
  CHECK(w.membership.verdict != HullVerdict::outside);
  CHECK(w.derivative_residual == 0);
}

TEST_CASE("section witness annihilation and hypothesis errors", "[harness]") {
  const MultiPoly p = parse_poly("z1*z2");
  const SectionWitness w = verify_section_witness(p, 1, ComplexVector{Complex{3, -2}, 0.0});
  CHECK(w.outcome == SectionOutcome::degenerate);
  CHECK(w.restriction.is_null());

  CHECK_THROWS_WITH(verify_section_witness(parse_poly("z2^2 + 1", 2), 1, ComplexVector{0.0, I}),
                    Catch::Matchers::ContainsSubstring("hypothesis violated"));
  CHECK_THROWS_AS(verify_section_witness(parse_poly("z1^2 + z2^2"), 1, ComplexVector{1.0, 1.0}), Error);
}

TEST_CASE("section witnesses agree with Gauss-Lucas for one variable", "[harness][property]") {
  Rng rng(211);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly p = random_unipoly(rng, 3, 10.0);
    const GlReport gl = verify_gl_univariate(p);
    if (gl.verdict == Verdict::inconclusive) continue;
    bool all_pass = true;
    for (Complex w : gl.critical.roots) {
      const SectionWitness s = verify_section_witness(to_multi(p), 1, ComplexVector{w});
      all_pass = all_pass && s.outcome == SectionOutcome::pass;
    }
    CHECK(all_pass == (gl.verdict == Verdict::pass));
  }
}

TEST_CASE("section critical points", "[harness]") {
  const auto cube = find_section_critical_points(parse_poly("z1^3", 2), 1, ComplexVector{Complex{4, 1}});
  REQUIRE(cube.points.size() == 2);
  for (const auto& z : cube.points) {
    CHECK(z[0] == Complex{});
    CHECK(z[1] == Complex{4, 1});
  }

  const auto circle = find_section_critical_points(parse_poly("z1^2 + z2^2"), 1, ComplexVector{1.0});
  REQUIRE(circle.points.size() == 1);
  CHECK(std::abs(circle.points[0][0]) < 1e-15);
  CHECK(circle.points[0][1] == Complex{1});

  const auto flat = find_section_critical_points(parse_poly("z1*z2 + 1"), 1, ComplexVector{0.0});
  CHECK(flat.degenerate);
  CHECK(flat.points.empty());

  const auto linear = find_section_critical_points(parse_poly("z1*z2 + 1"), 1, ComplexVector{2.0});
  CHECK_FALSE(linear.degenerate);
  CHECK(linear.points.empty());
}

TEST_CASE("section critical points are zeros of the partial derivative", "[harness][property]") {
  Rng rng(223);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(2, 4));
    const MultiPoly p = random_multipoly(rng, m, 5, 8, 10.0);
    const auto k = static_cast<std::size_t>(rng.integer(1, static_cast<int>(m)));
    ComplexVector others(m - 1);
    for (auto& o : others) o = rng.complex_in_box(2.0);
    const MultiPoly qk = partial_derivative(p, k);
    for (const auto& z : find_section_critical_points(p, k, others).points) {
      CHECK(std::abs(evaluate(qk, z)) <= 1e-8 * absolute_scale(qk, z));
      CHECK(omit_coordinate(z, k) == others);
    }
  }
}

TEST_CASE("section witness sweep has no failures", "[harness][property]") {
  const SweepSummary s = sweep_section_witnesses(100, 2);
  CHECK(s.fail == 0);
  CHECK(s.pass > 50);
  CHECK(s.worst >= -1e-8);
}

TEST_CASE("complement section with positive fixed margin is a half-plane", "[harness]") {
  const ThetaVector theta{{0.0, 0.0}};
  const ComplexVector fixed{Complex{0.3, 2.0}};
  const ComplementSection s = complement_section(theta, 1, fixed);
  CHECK(s.c == 2.0);
  CHECK_FALSE(s.whole_plane());
  CHECK(s.contains({5, 0}));
  CHECK(s.contains({-1, -3}));
  CHECK_FALSE(s.contains({0, 0.1}));
  const ComplementSectionReport r = verify_complement_section(theta, 1, fixed, 2000, 7);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.midpoint_violations == 0);
  CHECK(r.disagreements == 0);
}

TEST_CASE("complement section with non-positive fixed margin is the plane", "[harness]") {
  const ThetaVector theta{{0.4, 0.0, -1.0}};
  const ComplexVector fixed{Complex{1, -0.5}, Complex{2, 2}};
  const ComplementSection s = complement_section(theta, 1, fixed);
  CHECK(s.c <= 0);
  CHECK(s.whole_plane());
  CHECK(s.contains({0, 100}));
  CHECK(verify_complement_section(theta, 1, fixed, 2000, 9).verdict == Verdict::pass);
}

TEST_CASE("complement section with no fixed coordinates", "[harness]") {
  const ThetaVector theta{{std::numbers::pi / 2}};
  const ComplementSection s = complement_section(theta, 1, ComplexVector{});
  CHECK(std::isinf(s.c));
  CHECK(s.contains({-1, 5}));
  CHECK_FALSE(s.contains({1, 5}));
  CHECK(verify_complement_section(theta, 1, ComplexVector{}, 1000, 3).verdict == Verdict::pass);
  CHECK_THROWS_AS(complement_section(theta, 2, ComplexVector{}), Error);
  CHECK_THROWS_AS(complement_section(theta, 1, ComplexVector{1.0}), Error);
}

TEST_CASE("Lemma-1 sweep has no violations", "[harness][property]") {
  const SweepSummary s = sweep_complement_sections(100, 10000, 4, 2000);
  CHECK(s.cases == 100);
  CHECK(s.fail == 0);
}

TEST_CASE("derivatives of stable polynomials stay stable", "[harness]") {
  const ThetaVector zero{{0.0, 0.0}};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const MultiPoly p = random_stable_poly(2, 4, zero, seed);
    const DerivativeStabilityReport r = verify_derivative_stability(p, zero, 1, 10000, seed);
    CHECK(r.outcome == DerivativeStabilityOutcome::pass);
    CHECK(r.verdict == Verdict::pass);
  }

  const DerivativeStabilityReport bad = verify_derivative_stability(parse_poly("z1*z2 + 1"), zero, 1, 1000, 0);
  CHECK(bad.outcome == DerivativeStabilityOutcome::hypothesis_violated);
  CHECK(bad.verdict == Verdict::fail);
  CHECK(bad.input.witness.has_value());

  const DerivativeStabilityReport lin = verify_derivative_stability(parse_poly("z1 + z2"), zero, 2, 1000, 0);
  CHECK(lin.outcome == DerivativeStabilityOutcome::pass);
  REQUIRE(lin.derivative_poly.has_value());
  CHECK(*lin.derivative_poly == MultiPoly::constant(2, 1.0));

  const DerivativeStabilityReport skip = verify_derivative_stability(parse_poly("z1 + 1i", 2), zero, 2, 100, 0);
  CHECK(skip.outcome == DerivativeStabilityOutcome::skipped_null_derivative);
}

TEST_CASE("derivative stability sweep finds no counterexamples", "[harness][property]") {
  const SweepSummary s = sweep_derivative_stability(20, 1000, 5);
  CHECK(s.fail == 0);
  CHECK(s.pass > 0);
}

TEST_CASE("cubic classification anchors", "[harness]") {
  const CubicContainmentReport sym = classify_cubic({0, 1, 0});
  CHECK(sym.contained);
  CHECK(sym.axis_aligned_roots);
  CHECK(sym.iff_holds);
  CHECK_FALSE(sym.outside_premise);
  CHECK(std::abs(sym.critical[0] - I / std::sqrt(3.0)) < 1e-15);
  CHECK(std::abs(sym.critical[1] + I / std::sqrt(3.0)) < 1e-15);

  const CubicContainmentReport off = classify_cubic({0, 1, 1});
  CHECK_FALSE(off.contained);
  CHECK_FALSE(off.axis_aligned_roots);
  CHECK(off.iff_holds);
  CHECK(component_count(off.root_hull) == 1);

  const CubicContainmentReport real = classify_cubic({0, 1, 2});
  CHECK(real.regime == CriticalRegime::real_critical);
  CHECK(real.outside_premise);
  CHECK(real.contained);
  CHECK_FALSE(real.axis_aligned_roots);
  CHECK_FALSE(real.iff_holds);

  CHECK_THROWS_AS(classify_cubic({0, 0, 1}), Error);
}

TEST_CASE("cubic classification is stable under roundoff in a and c", "[harness]") {
  const CubicContainmentReport r = classify_cubic({0.1 + 0.2, 0.7, 0.3});
  CHECK(r.axis_aligned_roots);
  CHECK(r.contained);
  CHECK(r.iff_holds);
}

TEST_CASE("cubic grid agrees with the iff in the complex regime", "[harness][property]") {
  const SweepSummary s = sweep_cubic_grid();
  CHECK(s.fail == 0);
  CHECK(s.cases > 5000);
}

TEST_CASE("quadratic classification", "[harness]") {
  const QuadraticReport v = classify_quadratic(I, -I);
  CHECK(v.contained);
  CHECK(v.aligned);
  CHECK(v.components == 1);
  CHECK(v.critical == Complex{});

  const QuadraticReport g = classify_quadratic(0.0, Complex{1, 1});
  CHECK_FALSE(g.contained);
  CHECK_FALSE(g.aligned);
  CHECK(g.components == 2);
  CHECK(g.iff_holds);

  CHECK(classify_quadratic(Complex{1, 1}, Complex{1, 1}).degenerate);

  const SweepSummary s = sweep_quadratic(500, 6);
  CHECK(s.fail == 0);
  CHECK(s.pass == 500);
}

TEST_CASE("nesting sweep passes", "[harness][property]") {
  const SweepSummary s = sweep_nesting(200, 8);
  CHECK(s.fail == 0);
  CHECK(s.worst >= -1e-9);
}
