#pragma once

#include <vector>

#include "hermite/curves.hpp"
#include "hermite/vec.hpp"

namespace hermite {

/// Euclidean distance from q to the segment [a, b] (the segment may be a
/// single point).
double point_segment_distance(const Vec& q, const Vec& a, const Vec& b);

/// Symmetric Hausdorff distance between two polylines: the larger of the two
/// directed distances, each taken as the maximum over one polyline's vertices
/// of the distance to the other polyline's nearest segment.  Both inputs must
/// be nonempty.
double hausdorff(const std::vector<Vec>& a, const std::vector<Vec>& b);

/// Maximum over the polyline's vertices of the vertical distance
/// |y - f(x)| to a functional curve (x, f(x)).  Throws NonFunctionalInput
/// for curves that are not such a graph.
double functional_error(const CurveSpec& curve, const std::vector<Vec>& approx);

}  // namespace hermite
