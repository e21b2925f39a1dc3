#pragma once

#include "hermite/types.hpp"
#include "hermite/vec.hpp"

namespace hermite {

/// Point on the great circle through u and v at angular distance
/// w * angle(u, v) from u (so w = 0 gives u, w = 1 gives v, and w = 1/2 the
/// geodesic midpoint).  Throws AntipodalVectors when the angle between the
/// inputs is within 1e-9 of a half turn, where the great circle is not unique.
UnitVec geodesic_average(const UnitVec& u, const UnitVec& v, double w);

/// Piecewise-geodesic interpolant of the tangents of a level-`level` sequence:
/// parameter t in [0, (N-1) * 2^-level] for open topology (one extra segment,
/// wrapping, for closed), with knot j at t = j * 2^-level carrying tangent
/// v_j and geodesic interpolation in between.  Throws OutOfRange for t
/// outside the domain.
UnitVec geodesic_interpolant(const HermiteSequence& s, int level, double t);

/// Parameter-domain length of the interpolant at the given level.
double interpolant_range(const HermiteSequence& s, int level);

}  // namespace hermite
