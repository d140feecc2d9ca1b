#include <catch_amalgamated.hpp>

#include <numbers>

#include "gausslucas/parser.hpp"
#include "gausslucas/stability.hpp"

using namespace gausslucas;

namespace {

const Complex I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

ThetaVector theta(std::initializer_list<double> a) { return {std::vector<double>(a)}; }

// Direct substitution z_k = e^{-i theta_k} u_k, evaluated termwise.
Complex substituted(const MultiPoly& p, const ThetaVector& t, const ComplexVector& u) {
  Complex sum{};
  for (const auto& [m, c] : p.terms()) {
    Complex term = c;
    for (std::size_t k = 0; k < m.size(); ++k) term *= std::pow(std::exp(-I * t.angles[k]) * u[k], static_cast<int>(m[k]));
    sum += term;
  }
  return sum;
}

ThetaVector random_theta(Rng& rng, std::size_t m) {
  ThetaVector t{std::vector<double>(m)};
  for (auto& a : t.angles) a = rng.uniform(-kPi, kPi);
  return t;
}

void check_counterexample(const MultiPoly& p, const ThetaVector& t, const StabilityVerdict& v, double tol) {
  REQUIRE(v.status == StabilityStatus::counterexample);
  REQUIRE(v.witness.has_value());
  CHECK(in_region(t, *v.witness));
  CHECK(std::abs(evaluate(p, *v.witness)) <= tol * absolute_scale(p, *v.witness));
  CHECK(v.trial_index.has_value());
}

}  // namespace

TEST_CASE("region membership", "[stability]") {
  CHECK(in_region(theta({0, 0}), ComplexVector{I, I}));
  CHECK_FALSE(in_region(theta({0, 0}), ComplexVector{I, -I}));
  CHECK(in_region(theta({kPi / 2, 0}), ComplexVector{1.0, I}));
  CHECK_FALSE(in_region(theta({0}), ComplexVector{1.0}));
  CHECK_THROWS_AS(in_region(theta({0}), ComplexVector{I, I}), Error);
}

TEST_CASE("region is open", "[stability][property]") {
  Rng rng(131);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const ThetaVector t = random_theta(rng, m);
    ComplexVector z(m);
    for (auto& c : z) c = rng.complex_in_box(3.0);
    if (!in_region(t, z)) continue;
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) margin = std::min(margin, rotated_imag(t.angles[k], z[k]) / 2);
    ComplexVector moved = z;
    for (auto& c : moved) c += rng.complex_in_disk(margin * 0.999);
    CHECK(in_region(t, moved));
  }
}

TEST_CASE("rotation examples", "[stability]") {
  const MultiPoly p = parse_poly("z1*z2 + (2-1i)*z2^3 + 4");
  CHECK(rotate_coords(p, theta({0, 0})) == p);
  const MultiPoly r = rotate_coords(MultiPoly::variable(1, 1), theta({kPi / 2}));
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r.coefficient({1}) - (-I)) < 1e-15);
  CHECK_THROWS_AS(rotate_coords(p, theta({0})), Error);
}

TEST_CASE("rotation satisfies the evaluation identity", "[stability][property]") {
  Rng rng(137);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const MultiPoly p = random_multipoly(rng, m, 5, 10, 10.0);
    const ThetaVector t = random_theta(rng, m);
    ComplexVector u(m);
    for (auto& c : u) c = rng.complex_in_box(2.0);
    const Complex lhs = evaluate(rotate_coords(p, t), u);
    const Complex rhs = substituted(p, t, u);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, absolute_scale(p, u)));
  }
}

TEST_CASE("rotated points land in the region exactly when u is in the upper half-plane", "[stability][property]") {
  Rng rng(139);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 4));
    const ThetaVector t = random_theta(rng, m);
    ComplexVector u(m);
    bool upper = true;
    for (auto& c : u) {
      // keep away from the real axis so rounding of the rotation cannot flip a sign
      c = {rng.uniform(-3, 3), rng.coin(0.8) ? rng.uniform(0.01, 3) : rng.uniform(-3, -0.01)};
      upper = upper && c.imag() > 0;
    }
    CHECK(in_region(t, unrotate_point(t, u)) == upper);
  }
}

TEST_CASE("univariate stability", "[stability]") {
  const auto a = univariate_theta_stable(UniPoly({I, 1.0}), 0);
  CHECK(a.status == StabilityStatus::stable_certified);

  const auto b = univariate_theta_stable(UniPoly({-I, 1.0}), 0);
  REQUIRE(b.status == StabilityStatus::counterexample);
  CHECK(std::abs((*b.witness)[0] - I) < 1e-12);

  const auto c = univariate_theta_stable(UniPoly({1.0, 0.0, 1.0}), kPi / 2);
  CHECK(c.status == StabilityStatus::stable_certified);

  CHECK(univariate_theta_stable(UniPoly({5.0}), 0.3).status == StabilityStatus::stable_certified);
  CHECK_THROWS_AS(univariate_theta_stable(UniPoly{}, 0), Error);
}

TEST_CASE("falsifier on stable and non-stable fixtures", "[stability]") {
  const MultiPoly sum = parse_poly("z1 + z2");
  const auto s = mc_falsifier(sum, theta({0, 0}), 10000, 0);
  CHECK(s.status == StabilityStatus::no_counterexample_found);
  CHECK_FALSE(s.witness.has_value());
  CHECK(s.trials == 10000);

  const MultiPoly minus = parse_poly("z1*z2 - 1");
  CHECK(mc_falsifier(minus, theta({0, 0}), 10000, 3).status == StabilityStatus::no_counterexample_found);

  const MultiPoly plus = parse_poly("z1*z2 + 1");
  int found = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto v = mc_falsifier(plus, theta({0, 0}), 1000, seed);
    if (v.status != StabilityStatus::counterexample) continue;
    ++found;
    check_counterexample(plus, theta({0, 0}), v, 1e-8);
  }
  CHECK(found >= 9);

  CHECK_THROWS_AS(mc_falsifier(MultiPoly(2), theta({0, 0}), 10, 0), Error);
  CHECK_THROWS_AS(mc_falsifier(sum, theta({0, 0}), 0, 0), Error);
  CHECK(mc_falsifier(MultiPoly::constant(2, 3.0), theta({0, 0}), 10, 0).status ==
        StabilityStatus::no_counterexample_found);
}

TEST_CASE("falsifier finds zeros in rotated regions", "[stability]") {
  // z1 - 1 vanishes at z1 = 1, which lies in A(pi/2) (Re z1 > 0)
  const MultiPoly p = parse_poly("z1 - 1", 2);
  const ThetaVector t = theta({kPi / 2, 0});
  check_counterexample(p, t, mc_falsifier(p, t, 1000, 1), 1e-8);
  CHECK(mc_falsifier(p, theta({0, 0}), 2000, 1).status ==
        StabilityStatus::no_counterexample_found);
}

TEST_CASE("falsifier is deterministic and reports the first winning trial", "[stability]") {
  const MultiPoly p = parse_poly("z1*z2 + z1 + 2*z2^2 + 1 - 1i");
  const ThetaVector t = theta({0.3, -0.7});
  const auto a = mc_falsifier(p, t, 500, 42);
  const auto b = mc_falsifier(p, t, 500, 42);
  CHECK(a.status == b.status);
  CHECK(a.witness == b.witness);
  CHECK(a.residual == b.residual);
  CHECK(a.trial_index == b.trial_index);
  if (a.trial_index) {
    // a shorter run that still includes the winning trial gives the same answer
    const auto c = mc_falsifier(p, t, *a.trial_index + 1, 42);
    CHECK(c.witness == a.witness);
    if (*a.trial_index > 0) {
      const auto d = mc_falsifier(p, t, *a.trial_index, 42);
      CHECK(d.status == StabilityStatus::no_counterexample_found);
    }
  }
}

TEST_CASE("falsifier witnesses are certified on random polynomials", "[stability][property]") {
  Rng rng(149);
  int found = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
    const MultiPoly p = random_multipoly(rng, m, 4, 6, 5.0);
    const ThetaVector t = random_theta(rng, m);
    if (p.total_degree() == 0) continue;
    const auto v = mc_falsifier(p, t, 50, static_cast<std::uint64_t>(trial));
    if (v.status == StabilityStatus::counterexample) {
      ++found;
      check_counterexample(p, t, v, 1e-8);
    }
  }
  CHECK(found > 10);
}

TEST_CASE("stable generator", "[stability]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const MultiPoly p = random_stable_poly(1, 1, ThetaVector::zeros(1), seed);
    const RootSet rs = roots_all(to_uni(p));
    CHECK(rs.roots[0].imag() < 0);
  }
  CHECK_THROWS_AS(random_stable_poly(0, 2, ThetaVector::zeros(0), 0), Error);
  CHECK_THROWS_AS(random_stable_poly(2, 0, ThetaVector::zeros(2), 0), Error);
  CHECK_THROWS_AS(random_stable_poly(2, 2, ThetaVector::zeros(1), 0), Error);
  CHECK(random_stable_poly(3, 4, ThetaVector::zeros(3), 9) == random_stable_poly(3, 4, ThetaVector::zeros(3), 9));
}

TEST_CASE("generated polynomials are stable", "[stability][property]") {
  Rng rng(151);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
    const ThetaVector t = trial % 2 == 0 ? ThetaVector::zeros(m) : random_theta(rng, m);
    const auto degree = static_cast<unsigned>(rng.integer(1, 5));
    const MultiPoly p = random_stable_poly(m, degree, t, static_cast<std::uint64_t>(trial));
    CHECK(p.total_degree() <= degree);
    CHECK(mc_falsifier(p, t, 2000, static_cast<std::uint64_t>(trial)).status != StabilityStatus::counterexample);
  }
}

TEST_CASE("generated factors are stable along random lines", "[stability][property]") {
  // a degree-1 output is a single affine factor; restrict it to lines
  // u = x + t v with v > 0 and check its root lies in Im t <= 0
  Rng rng(157);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    for (int line = 0; line < 100; ++line) {
      const MultiPoly factor = random_stable_poly(2, 1, ThetaVector::zeros(2), seed * 1000 + static_cast<std::uint64_t>(line));
      const Complex x1 = rng.uniform(-5, 5), x2 = rng.uniform(-5, 5);
      const double v1 = rng.uniform(0.1, 3), v2 = rng.uniform(0.1, 3);
      // factor(x + t v) = c0 + c1 t
      const Complex c0 = evaluate(factor, ComplexVector{x1, x2});
      const Complex c1 = evaluate(factor, ComplexVector{x1 + v1, x2 + v2}) - c0;
      REQUIRE(std::abs(c1) > 0);
      CHECK((-c0 / c1).imag() < 0);
    }
  }
}
