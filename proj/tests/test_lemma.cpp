#include <cmath>
#include <random>

#include "doctest.h"
#include "hermite/geometry.hpp"
#include "hermite/bezier.hpp"
#include "hermite/lemma.hpp"
#include "support/oracles.hpp"

using namespace hermite;
using testsupport::kPi;
using testsupport::random_triple;
using testsupport::realize_random;

namespace {

/// Triple away from the origin, where the child angles are well conditioned.
AngleTriple generic_triple(std::mt19937_64& rng, double cap = 0.75 * testsupport::kPi) {
  for (;;) {
    const AngleTriple t = random_triple(rng, cap);
    if (std::hypot(t.theta0, t.theta1) >= 1e-3) return t;
  }
}

}  // namespace

TEST_CASE("child deviation angles vanish exactly with the parent's") {
  const auto [first, mid] = theta_tilde({0.0, 0.0, 0.0});
  CHECK(first == 0.0);
  CHECK(mid == 0.0);
  CHECK(d_value({0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("reference value at the symmetric right-angle triple") {
  const AngleTriple t{kPi / 4, kPi / 4, kPi / 2};
  CHECK(d_value(t) == doctest::Approx(0.80190535758850978).epsilon(1e-14));
  const auto [first, mid] = theta_tilde(t);
  CHECK(first == doctest::Approx(kPi / 8).epsilon(1e-13));
  CHECK(mid == doctest::Approx(kPi / 8).epsilon(1e-13));
}

TEST_CASE("degenerate denominators and the origin quotient are rejected") {
  CHECK_THROWS_AS(theta_tilde({kPi, kPi, 0.0}), DegenerateDenominator);
  CHECK_THROWS_AS(q_value({0.0, 0.0, 0.0}), UndefinedAtOrigin);
}

TEST_CASE("domain membership") {
  CHECK(in_omega({0.0, 0.0, 0.0}));
  CHECK(in_omega({kPi / 2, kPi / 2, kPi}));          // boundary: theta = sum
  CHECK(in_omega({0.1, 0.3, 0.2}));
  CHECK_FALSE(in_omega({kPi, 0.0, kPi / 4}));        // outside the radius
  CHECK_FALSE(in_omega({0.1, 0.2, 0.05}));           // below |theta1 - theta0|
  CHECK_FALSE(in_omega({0.3, 0.3, 0.7}));            // above the sum
}

TEST_CASE("random triples from the generator lie in the domain") {
  std::mt19937_64 rng(91001);
  for (int i = 0; i < 5000; ++i) CHECK(in_omega(random_triple(rng, 0.75 * kPi)));
}

TEST_CASE("margin and quotient describe the same contraction") {
  std::mt19937_64 rng(91002);
  for (int i = 0; i < 5000; ++i) {
    const AngleTriple t = generic_triple(rng);
    const double sigma2 = t.theta0 * t.theta0 + t.theta1 * t.theta1;
    const double d = d_value(t);
    const double q = q_value(t);
    CHECK(d == doctest::Approx(sigma2 * (0.9 - q)).epsilon(1e-10));
    if (std::abs(d) > 1e-12) CHECK((q <= 0.9) == (d >= 0.0));
  }
}

TEST_CASE("closed-form child angles match measured averages") {
  std::mt19937_64 rng(91003);
  for (int i = 0; i < 2000; ++i) {
    const AngleTriple t = generic_triple(rng);
    const auto [a, b] = realize_random(t, rng);
    const HermitePair m = midpoint_average(a, b);
    const PairGeometry left = pair_geometry(a, m);
    const auto [first, mid] = theta_tilde(t);
    CHECK(std::abs(left.theta0 - first) <= 1e-9);
    CHECK(std::abs(left.theta1 - mid) <= 1e-9);
  }
}

TEST_CASE("the right child is the left child of the mirrored triple") {
  std::mt19937_64 rng(91004);
  for (int i = 0; i < 500; ++i) {
    const AngleTriple t = generic_triple(rng);
    const auto [a, b] = realize_random(t, rng);
    const HermitePair m = midpoint_average(a, b);
    const PairGeometry right = pair_geometry(m, b);
    const auto [first, mid] = theta_tilde({t.theta1, t.theta0, t.theta});
    CHECK(std::abs(right.theta1 - first) <= 1e-9);
    CHECK(std::abs(right.theta0 - mid) <= 1e-9);
  }
}

TEST_CASE("finite-difference gradient stays within the assumed bound") {
  std::mt19937_64 rng(91005);
  double sup = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const AngleTriple t = generic_triple(rng);
    const Vec g = gradient_probe(t, 1e-6);
    for (std::size_t j = 0; j < 3; ++j) sup = std::max(sup, std::abs(g[j]));
  }
  INFO("largest finite-difference gradient component observed: ", sup);
  CHECK(sup <= 6.3e4);   // the conservative certified constant
  CHECK(sup <= 200.0);   // the empirical scale, far below it
}

TEST_CASE("full nonnegativity sweep passes within its point budget") {
  SearchParams p;
  p.threads = 1;
  const VerificationCertificate cert = verify_nonnegativity(p);
  CHECK(cert.passed);
  CHECK(cert.points_evaluated >= 374718);     // within 10x of the reference count
  CHECK(cert.points_evaluated <= 37471790);
  CHECK(cert.min_value > 0.0);
  CHECK(cert.boundary_min == 0.0);            // the origin itself
  CHECK(cert.boundary_points > 0);
  CHECK(cert.params.M == 10.0);
  CHECK(in_omega(cert.min_location));
}

TEST_CASE("sweep outcome is independent of the thread count") {
  SearchParams p;
  p.M = 2.0;
  p.threads = 1;
  const VerificationCertificate one = verify_nonnegativity(p);
  p.threads = 4;
  const VerificationCertificate four = verify_nonnegativity(p);
  CHECK(one.passed);
  CHECK(four.passed);
  CHECK(one.points_evaluated == four.points_evaluated);
  CHECK(one.min_value == four.min_value);
  CHECK(one.min_location.theta0 == four.min_location.theta0);
  CHECK(one.min_location.theta1 == four.min_location.theta1);
  CHECK(one.min_location.theta == four.min_location.theta);
  CHECK(one.boundary_points == four.boundary_points);
  CHECK(one.boundary_min == four.boundary_min);
}

TEST_CASE("a counterexample is found and reported") {
  SearchParams p;
  p.threads = 2;
  const VerificationCertificate cert = verify_nonnegativity(
      p, [](const AngleTriple& t) { return d_value(t) - 0.5; });
  CHECK_FALSE(cert.passed);
  CHECK(cert.min_value < 0.0);
  // The origin (value -0.5) sits on the sampled ball boundary and fails first.
  CHECK(cert.min_value == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(cert.min_location.theta0 == 0.0);
  CHECK(cert.min_location.theta1 == 0.0);
}

TEST_CASE("a uniformly raised margin passes quickly") {
  SearchParams p;
  p.threads = 1;
  const VerificationCertificate cert = verify_nonnegativity(
      p, [](const AngleTriple& t) { return d_value(t) + 1.0; });
  CHECK(cert.passed);
  CHECK(cert.min_value >= 1.0);
}

TEST_CASE("search parameters are validated") {
  SearchParams p;
  p.M = 0.0;
  CHECK_THROWS_AS(verify_nonnegativity(p), ParameterError);
  p = SearchParams{};
  p.r = -1.0;
  CHECK_THROWS_AS(verify_nonnegativity(p), ParameterError);
  p = SearchParams{};
  p.r = 3.0;  // swallows the whole domain
  CHECK_THROWS_AS(verify_nonnegativity(p), ParameterError);
  p = SearchParams{};
  p.threads = 0;
  CHECK_THROWS_AS(verify_nonnegativity(p), ParameterError);
}
