#include "hermite/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hermite/errors.hpp"

namespace hermite {

double point_segment_distance(const Vec& q, const Vec& a, const Vec& b) {
  if (q.dim() != a.dim() || q.dim() != b.dim()) {
    throw ParameterError("point and segment dimensions disagree");
  }
  const Vec ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(q, a);
  double t = dot(q - a, ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(q, a + t * ab);
}

namespace {

double directed_hausdorff(const std::vector<Vec>& from, const std::vector<Vec>& to) {
  double worst = 0.0;
  for (const Vec& q : from) {
    double best = std::numeric_limits<double>::infinity();
    if (to.size() == 1) {
      best = distance(q, to.front());
    } else {
      for (std::size_t j = 0; j + 1 < to.size(); ++j) {
        best = std::min(best, point_segment_distance(q, to[j], to[j + 1]));
        if (best == 0.0) break;
      }
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  if (a.empty() || b.empty()) throw ParameterError("polylines must be nonempty");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double functional_error(const CurveSpec& curve, const std::vector<Vec>& approx) {
  if (!is_functional(curve)) {
    throw NonFunctionalInput("curve '" + curve_name(curve) +
                             "' is not the graph of a scalar function");
  }
  if (approx.empty()) throw ParameterError("polyline must be nonempty");
  double worst = 0.0;
  for (const Vec& p : approx) {
    if (p.dim() != 2) throw ParameterError("functional comparison needs planar vertices");
    worst = std::max(worst, std::abs(p[1] - functional_value(curve, p[0])));
  }
  return worst;
}

}  // namespace hermite
