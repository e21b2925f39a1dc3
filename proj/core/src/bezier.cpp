#include "hermite/bezier.hpp"

#include <cmath>
#include <string>

namespace hermite {

namespace {
constexpr double kAlphaDenominatorTol = 1e-12;

double vanish_threshold(double dist) { return 1e-12 * (1.0 + dist); }

Vec lerp(const Vec& a, const Vec& b, double t) { return (1.0 - t) * a + t * b; }
}  // namespace

double alpha(const PairGeometry& g, double dist, AlphaVariant variant) {
  if (!(dist > 0.0)) throw ParameterError("alpha requires a positive distance");
  const double half_angle =
      variant == AlphaVariant::SumAngle ? 0.25 * (g.theta0 + g.theta1) : 0.25 * g.theta;
  const double c = std::cos(half_angle);
  const double denom = 3.0 * c * c;
  if (denom < kAlphaDenominatorTol) {
    throw DegenerateAngles("tangent-handle denominator is degenerate (cos^2 term " +
                           std::to_string(denom) + ")");
  }
  return dist / denom;
}

BezierSegment segment(const HermitePair& a, const HermitePair& b, AlphaVariant variant) {
  require_averaging_admissible(a, b);
  const PairGeometry g = pair_geometry(a, b);
  const double d = distance(a.point, b.point);
  const double al = alpha(g, d, variant);
  return BezierSegment{a.point, a.point + al * a.tangent.vec(),
                       b.point - al * b.tangent.vec(), b.point, al};
}

CurvePoint eval(const BezierSegment& seg, double t) {
  if (t < 0.0 || t > 1.0) throw OutOfRange("cubic parameter outside [0,1]");
  const Vec l0 = lerp(seg.q0, seg.q1, t);
  const Vec l1 = lerp(seg.q1, seg.q2, t);
  const Vec l2 = lerp(seg.q2, seg.q3, t);
  const Vec r0 = lerp(l0, l1, t);
  const Vec r1 = lerp(l1, l2, t);
  return CurvePoint{lerp(r0, r1, t), 3.0 * (r1 - r0)};
}

HermitePair average(const HermitePair& a, const HermitePair& b, double w,
                    AlphaVariant variant) {
  if (w < 0.0 || w > 1.0) throw OutOfRange("average weight outside [0,1]");
  if (w == 0.0) return a;
  if (w == 1.0) return b;
  const BezierSegment seg = segment(a, b, variant);
  const CurvePoint c = eval(seg, w);
  const double mag = norm(c.derivative);
  if (mag < vanish_threshold(distance(a.point, b.point))) {
    throw VanishingTangent("curve derivative vanishes at weight " + std::to_string(w));
  }
  return HermitePair(c.point, UnitVec(c.derivative));
}

HermitePair midpoint_average(const HermitePair& a, const HermitePair& b,
                             AlphaVariant variant) {
  if (a == b) return a;  // a duplicated element averages to itself
  require_averaging_admissible(a, b);
  const PairGeometry g = pair_geometry(a, b);
  const double d = distance(a.point, b.point);
  const double al = alpha(g, d, variant);
  const Vec point = 0.5 * (a.point + b.point) +
                    (3.0 / 8.0) * al * (a.tangent.vec() - b.tangent.vec());
  const Vec deriv = b.point - a.point - 0.5 * al * (a.tangent.vec() + b.tangent.vec());
  if (norm(deriv) < vanish_threshold(d)) {
    throw VanishingTangent("midpoint derivative vanishes unexpectedly");
  }
  return HermitePair(point, UnitVec(deriv));
}

HermitePair reverse(const HermitePair& a) {
  return HermitePair(a.point, UnitVec(-1.0 * a.tangent.vec()));
}

}  // namespace hermite
