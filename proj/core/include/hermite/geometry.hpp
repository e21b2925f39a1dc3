#pragma once

#include "hermite/types.hpp"
#include "hermite/vec.hpp"

namespace hermite {

/// Angular quantities describing an ordered pair of Hermite elements:
///   u       unit direction from the first point to the second,
///   theta   angle between the two tangents,
///   theta0  deviation of the first tangent from u,
///   theta1  deviation of the second tangent from u,
///   sigma   sqrt(theta0^2 + theta1^2), the pair's distance-from-a-line measure.
struct PairGeometry {
  UnitVec u;
  double theta;
  double theta0;
  double theta1;
  double sigma;
};

/// Compute the angular quantities of the ordered pair (a, b).
/// Throws CoincidentPoints when the two points are closer than 1e-14.
PairGeometry pair_geometry(const HermitePair& a, const HermitePair& b);

/// Supremum of sigma over the consecutive pairs of the sequence (the
/// wrap-around pair included for closed topology).
double sigma_sup(const HermiteSequence& s);

/// Supremum of consecutive point distances (wrap-around included for closed
/// topology).
double max_gap(const HermiteSequence& s);

}  // namespace hermite
