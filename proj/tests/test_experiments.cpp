#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "hermite/curves.hpp"
#include "hermite/metrics.hpp"
#include "hermite/order.hpp"
#include "hermite/subdivision.hpp"
#include "hermite/transform.hpp"
#include "support/oracles.hpp"

using namespace hermite;
using testsupport::kPi;
using testsupport::max_coord_error;
using testsupport::random_sequence;

TEST_CASE("curve parsing and display names") {
  CHECK(parse_curve("sine").kind == CurveKind::Sine);
  CHECK(parse_curve("spiral2d").kind == CurveKind::Spiral2D);
  CHECK(parse_curve("spiral3d").kind == CurveKind::Spiral3D);
  const CurveSpec circle = parse_curve("circle:2.5");
  CHECK(circle.kind == CurveKind::Circle);
  CHECK(circle.radius == 2.5);
  CHECK(curve_name(circle) == "circle:2.5");
  const CurveSpec poly = parse_curve("poly:0,0,1");
  REQUIRE(poly.coefficients.size() == 3);
  CHECK(poly.coefficients[2] == 1.0);
  CHECK(curve_name(poly) == "poly:0,0,1");

  CHECK_THROWS_AS(parse_curve("nope"), ParameterError);
  CHECK_THROWS_AS(parse_curve("circle:-1"), ParameterError);
  CHECK_THROWS_AS(parse_curve("circle:x"), ParameterError);
  CHECK_THROWS_AS(parse_curve("poly:"), ParameterError);
}

TEST_CASE("default sampling plans") {
  const CurveSpec sine = make_curve(CurveKind::Sine);
  CHECK(sine.range_begin == doctest::Approx(kPi / 2));
  CHECK(sine.range_end == doctest::Approx(4.0 * kPi));
  CHECK(sine.topology == Topology::Open);
  const CurveSpec circle = make_curve(CurveKind::Circle);
  CHECK(circle.range_begin == 0.0);
  CHECK(circle.range_end == doctest::Approx(2.0 * kPi));
  CHECK(circle.topology == Topology::Closed);
  const CurveSpec poly = make_curve(CurveKind::Poly);
  CHECK(poly.range_begin == 0.0);
  CHECK(poly.range_end == 2.0);
}

TEST_CASE("analytic points and tangents") {
  CurveSpec quintic = make_curve(CurveKind::Poly);
  quintic.coefficients = {0, 0, 0, 0, 0, 1};
  const HermitePair p = curve_point(quintic, 1.0);
  CHECK(p.point[0] == 1.0);
  CHECK(p.point[1] == 1.0);
  const double n = std::sqrt(26.0);
  CHECK(p.tangent[0] == doctest::Approx(1.0 / n).epsilon(1e-15));
  CHECK(p.tangent[1] == doctest::Approx(5.0 / n).epsilon(1e-15));

  const CurveSpec circle = make_curve(CurveKind::Circle);
  const HermitePair c = curve_point(circle, kPi / 2);
  CHECK(std::abs(c.point[0]) <= 1e-15);
  CHECK(c.point[1] == doctest::Approx(1.0));
  CHECK(c.tangent[0] == doctest::Approx(-1.0));

  const CurveSpec spiral = make_curve(CurveKind::Spiral3D);
  const HermitePair s = curve_point(spiral, kPi);
  CHECK(s.point[0] == doctest::Approx(-kPi));
  CHECK(s.point[2] == doctest::Approx(kPi));
}

TEST_CASE("functional curves expose their graph") {
  const CurveSpec sine = make_curve(CurveKind::Sine);
  CHECK(is_functional(sine));
  CHECK(functional_value(sine, 0.25) == doctest::Approx(std::sin(0.25)));
  CurveSpec poly = make_curve(CurveKind::Poly);
  poly.coefficients = {1.0, 0.0, 2.0};
  CHECK(functional_value(poly, 3.0) == doctest::Approx(19.0));
  CHECK_FALSE(is_functional(make_curve(CurveKind::Circle)));
  CHECK_THROWS_AS(functional_value(make_curve(CurveKind::Circle), 0.0),
                  NonFunctionalInput);
}

TEST_CASE("sample counts: open grids include a landing endpoint, closed "
          "grids stop a step short") {
  CurveSpec sine = make_curve(CurveKind::Sine);
  sine.range_begin = 0.0;
  sine.range_end = 4.0 * kPi;
  sine.h = 2.0 * kPi;
  const HermiteSequence s = sample_curve(sine);
  REQUIRE(s.size() == 3);
  CHECK(s[2].point[0] == doctest::Approx(4.0 * kPi));
  // At the zeros of the sine the tangent climbs at 45 degrees.
  CHECK(s[0].tangent[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(s[0].tangent[1] == doctest::Approx(std::sqrt(0.5)));

  CurveSpec circle = make_curve(CurveKind::Circle);
  circle.h = kPi / 2;
  const HermiteSequence c = sample_curve(circle);
  REQUIRE(c.size() == 4);
  CHECK(c.topology() == Topology::Closed);
  CHECK(c[3].point[1] == doctest::Approx(-1.0));

  CurveSpec bad = make_curve(CurveKind::Sine);
  bad.h = 100.0;  // a single sample is not a sequence
  CHECK_THROWS_AS(sample_curve(bad), ParameterError);
  bad.h = -0.1;
  CHECK_THROWS_AS(sample_curve(bad), ParameterError);
}

TEST_CASE("point-to-segment and Hausdorff distances") {
  CHECK(point_segment_distance(Vec{3.0, 4.0}, Vec{0.0, 0.0}, Vec{1.0, 0.0}) ==
        doctest::Approx(std::sqrt(20.0)));
  CHECK(point_segment_distance(Vec{0.5, 2.0}, Vec{0.0, 0.0}, Vec{1.0, 0.0}) ==
        doctest::Approx(2.0));
  CHECK(point_segment_distance(Vec{0.5, 2.0}, Vec{1.0, 1.0}, Vec{1.0, 1.0}) ==
        doctest::Approx(std::sqrt(1.25)));

  const std::vector<Vec> base{Vec{0.0, 0.0}, Vec{2.0, 0.0}};
  CHECK(hausdorff(base, base) == 0.0);
  const std::vector<Vec> shifted{Vec{0.0, 1.0}, Vec{2.0, 1.0}};
  CHECK(hausdorff(base, shifted) == doctest::Approx(1.0));
  // Asymmetric pair: the detour vertex dominates in one direction only.
  const std::vector<Vec> detour{Vec{0.0, 0.0}, Vec{1.0, 1.0}, Vec{2.0, 0.0}};
  CHECK(hausdorff(base, detour) == doctest::Approx(1.0));
}

TEST_CASE("vertical error against a functional curve") {
  CurveSpec line = make_curve(CurveKind::Poly);
  line.coefficients = {0.0, 1.0};
  const std::vector<Vec> approx{Vec{0.0, 0.1}, Vec{1.0, 1.0}, Vec{2.0, 1.7}};
  CHECK(functional_error(line, approx) == doctest::Approx(0.3));
  CHECK_THROWS_AS(functional_error(make_curve(CurveKind::Circle), approx),
                  NonFunctionalInput);

  // Refining collinear functional data leaves the vertical error at zero.
  line.h = 0.5;
  RefineConfig cfg;
  cfg.levels = 6;
  cfg.record_drift = false;
  const RefineResult res = refine(sample_curve(line), cfg);
  CHECK(functional_error(line, res.sequence.points()) <= 1e-12);
}

TEST_CASE("interpolatory refinement of circle samples stays on the circle") {
  CurveSpec circle = make_curve(CurveKind::Circle);
  circle.radius = 2.5;
  circle.h = kPi / 2;
  RefineConfig cfg;
  cfg.levels = 6;
  cfg.record_drift = false;
  const RefineResult res = refine(sample_curve(circle), cfg);
  double worst = 0.0;
  for (const Vec& p : res.sequence.points()) {
    worst = std::max(worst, std::abs(norm(p) - circle.radius));
  }
  CHECK(worst <= 1e-9 * circle.radius);
}

TEST_CASE("approximation order on a quintic away from its flat point") {
  CurveSpec quintic = make_curve(CurveKind::Poly);
  quintic.coefficients = {0, 0, 0, 0, 0, 1};
  quintic.range_begin = 3.0;
  quintic.range_end = 5.0;
  const std::vector<double> hs{1.0, 0.5, 0.25, 0.125, 0.0625};

  RefineConfig ihb;
  ihb.record_drift = false;
  const OrderReport hermite_fit = order_experiment(quintic, ihb, hs, 10);
  REQUIRE(hermite_fit.rows.size() == 5);
  CHECK(hermite_fit.slope == doctest::Approx(4.0).epsilon(0.075));  // 4 +- 0.3
  CHECK(hermite_fit.residual < 0.05);

  RefineConfig lr;
  lr.scheme = Scheme::LinearLR;
  lr.m = 1;
  lr.record_drift = false;
  const OrderReport linear_fit = order_experiment(quintic, lr, hs, 10);
  CHECK(linear_fit.slope == doctest::Approx(2.0).epsilon(0.1));  // 2 +- 0.2

  SUBCASE("slopes are stable under halving the refinement depth") {
    CHECK(std::abs(order_experiment(quintic, ihb, hs, 9).slope - hermite_fit.slope) <=
          0.1);
    CHECK(std::abs(order_experiment(quintic, lr, hs, 9).slope - linear_fit.slope) <=
          0.1);
  }
}

TEST_CASE("cubic errors shrink monotonically") {
  CurveSpec cubic = make_curve(CurveKind::Poly);
  cubic.coefficients = {0, 0, 0, 1};
  RefineConfig cfg;
  cfg.record_drift = false;
  const OrderReport fit =
      order_experiment(cubic, cfg, {1.0, 0.5, 0.25, 0.125, 0.0625}, 6);
  REQUIRE(fit.rows.size() == 5);
  for (std::size_t i = 0; i + 1 < fit.rows.size(); ++i) {
    CHECK(fit.rows[i + 1].error < fit.rows[i].error);
  }
}

TEST_CASE("order experiment parameter validation") {
  CurveSpec quintic = make_curve(CurveKind::Poly);
  quintic.coefficients = {0, 0, 0, 0, 0, 1};
  RefineConfig cfg;
  CHECK_THROWS_AS(order_experiment(quintic, cfg, {1.0, 0.5, 0.25}, 10),
                  ParameterError);  // fewer than four steps
  CHECK_THROWS_AS(order_experiment(quintic, cfg, {1.0, 0.5, 0.5, 0.25}, 10),
                  ParameterError);  // not strictly decreasing
  CHECK_THROWS_AS(order_experiment(quintic, cfg, {1.0, 0.5, 0.25, 0.125}, 5),
                  ParameterError);  // depth too shallow
  CHECK_THROWS_AS(
      order_experiment(make_curve(CurveKind::Circle), cfg, {1.0, 0.5, 0.25, 0.125}, 6),
      NonFunctionalInput);
}

TEST_CASE("estimated tangents beat the point-only scheme on the sine") {
  const CurveSpec sine = make_curve(CurveKind::Sine);
  for (double h : {2.0 * kPi / 3.0, kPi}) {
    CurveSpec spec = sine;
    spec.h = h;
    const HermiteSequence samples = sample_curve(spec);

    RefineConfig linear;
    linear.scheme = Scheme::LinearLR;
    linear.m = 3;
    linear.levels = 8;
    linear.record_drift = false;
    const double linear_error =
        functional_error(spec, refine(samples, linear).sequence.points());

    RefineConfig hermite_cfg;
    hermite_cfg.scheme = Scheme::HBLR;
    hermite_cfg.m = 3;
    hermite_cfg.levels = 8;
    hermite_cfg.record_drift = false;
    const HermiteSequence estimated =
        estimate_tangents(samples.points(), samples.topology());
    const double estimated_error =
        functional_error(spec, refine(estimated, hermite_cfg).sequence.points());

    CHECK(estimated_error < linear_error);
  }
}

TEST_CASE("similarity transforms move points and rotate tangents") {
  std::mt19937_64 rng(101001);
  const HermiteSequence s = random_sequence(rng, 2, 4);
  const SimilarityTransform id = SimilarityTransform::identity(2);
  const HermiteSequence same = apply_transform(s, id);
  for (std::size_t j = 0; j < s.size(); ++j) CHECK(same[j] == s[j]);

  // Pure scaling doubles points and keeps tangents.
  const SimilarityTransform twice({1.0, 0.0, 0.0, 1.0}, Vec(2), 2.0);
  const HermiteSequence scaled = apply_transform(s, twice);
  for (std::size_t j = 0; j < s.size(); ++j) {
    CHECK(max_coord_error(scaled[j].point, 2.0 * s[j].point) <= 1e-15);
    CHECK(scaled[j].tangent == s[j].tangent);
  }

  CHECK_THROWS_AS(SimilarityTransform({1.0, 0.5, 0.0, 1.0}, Vec(2), 1.0),
                  ParameterError);
  CHECK_THROWS_AS(SimilarityTransform({1.0, 0.0, 0.0, 1.0}, Vec(2), 0.0),
                  ParameterError);
}

TEST_CASE("random rotations are orthogonal") {
  std::mt19937_64 rng(101002);
  for (std::size_t dim : {2ul, 3ul, 5ul}) {
    const std::vector<double> r = random_rotation(dim, rng);
    REQUIRE(r.size() == dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < dim; ++k) s += r[i * dim + k] * r[j * dim + k];
        CHECK(std::abs(s - (i == j ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("refinement commutes with similarity transforms") {
  std::mt19937_64 rng(101003);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t dim : {2ul, 3ul, 5ul}) {
    for (int rep = 0; rep < 5; ++rep) {
      const HermiteSequence s = random_sequence(rng, dim, 5);
      Vec shift(dim);
      for (std::size_t i = 0; i < dim; ++i) shift[i] = 2.0 * unit(rng) - 1.0;
      const SimilarityTransform map(random_rotation(dim, rng), shift,
                                    0.4 + 2.0 * unit(rng));
      RefineConfig cfg;
      cfg.scheme = Scheme::HBLR;
      cfg.m = 2;
      cfg.levels = 3;
      cfg.record_drift = false;

      const HermiteSequence before = refine(apply_transform(s, map), cfg).sequence;
      const HermiteSequence after =
          apply_transform(refine(s, cfg).sequence, map);
      REQUIRE(before.size() == after.size());
      double worst = 0.0;
      for (std::size_t j = 0; j < before.size(); ++j) {
        worst = std::max(worst, max_coord_error(before[j].point, after[j].point));
        worst = std::max(
            worst, max_coord_error(before[j].tangent.vec(), after[j].tangent.vec()));
      }
      CHECK(worst <= 1e-10);
    }
  }
}
