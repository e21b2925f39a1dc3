#pragma once

#include "hermite/admissibility.hpp"
#include "hermite/geometry.hpp"
#include "hermite/types.hpp"

namespace hermite {

/// Choice of denominator in the tangent-handle length:
///   SumAngle    — distance / (3 cos^2((theta0 + theta1)/4)),
///   MutualAngle — distance / (3 cos^2(theta/4)), using the angle between the
///                 two tangents instead of the sum of their chord deviations.
enum class AlphaVariant { SumAngle, MutualAngle };

/// Control polygon of the cubic connecting an ordered pair:
/// q0 = p0, q1 = p0 + alpha*v0, q2 = p1 - alpha*v1, q3 = p1.
struct BezierSegment {
  Vec q0, q1, q2, q3;
  double alpha;
};

/// Tangent-handle length for a pair with the given geometry and point
/// distance.  Throws DegenerateAngles when the denominator collapses.
double alpha(const PairGeometry& g, double dist, AlphaVariant variant);

/// Build the cubic control polygon for the ordered pair (a, b).
/// Throws Inadmissible when the pair cannot be averaged.
BezierSegment segment(const HermitePair& a, const HermitePair& b,
                      AlphaVariant variant = AlphaVariant::SumAngle);

/// Position and derivative of the cubic at parameter t in [0,1], evaluated by
/// repeated linear interpolation of the control polygon.
struct CurvePoint {
  Vec point;
  Vec derivative;
};
CurvePoint eval(const BezierSegment& seg, double t);

/// The weighted average of two Hermite elements: the cubic's position at w
/// paired with its normalized derivative.  w = 0 and w = 1 return the inputs
/// exactly.  Throws VanishingTangent when the derivative magnitude falls
/// below 1e-12 * (1 + distance) — possible only for w outside {0, 1/2, 1}.
HermitePair average(const HermitePair& a, const HermitePair& b, double w,
                    AlphaVariant variant = AlphaVariant::SumAngle);

/// Closed-form fast path for the w = 1/2 average:
///   point   = (p0 + p1)/2 + (3/8) alpha (v0 - v1),
///   tangent = normalize(p1 - p0 - (alpha/2)(v0 + v1)),
/// whose derivative magnitude is guaranteed positive for admissible pairs.
/// By convention the average of two bitwise-identical elements is that
/// element (the half-step of a duplicated element is itself).
HermitePair midpoint_average(const HermitePair& a, const HermitePair& b,
                             AlphaVariant variant = AlphaVariant::SumAngle);

/// The same element traversed backwards: tangent negated.
HermitePair reverse(const HermitePair& a);

}  // namespace hermite
