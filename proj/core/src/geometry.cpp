#include "hermite/geometry.hpp"

#include <cmath>
#include <string>

namespace hermite {

PairGeometry pair_geometry(const HermitePair& a, const HermitePair& b) {
  if (a.dim() != b.dim()) throw ParameterError("pair dimensions disagree");
  const Vec diff = b.point - a.point;
  const double d = norm(diff);
  if (d <= kCoincidenceTol) {
    throw CoincidentPoints("points coincide (distance " + std::to_string(d) + ")");
  }
  UnitVec u(diff);
  const double theta = angular_distance(a.tangent, b.tangent);
  const double theta0 = std::acos(clamp_unit(dot(a.tangent.vec(), u.vec())));
  const double theta1 = std::acos(clamp_unit(dot(b.tangent.vec(), u.vec())));
  return PairGeometry{u, theta, theta0, theta1, std::hypot(theta0, theta1)};
}

double sigma_sup(const HermiteSequence& s) {
  double sup = 0.0;
  const std::size_t n = s.size();
  for (std::size_t j = 0; j < s.segment_count(); ++j) {
    const PairGeometry g = pair_geometry(s[j], s[(j + 1) % n]);
    if (g.sigma > sup) sup = g.sigma;
  }
  return sup;
}

double max_gap(const HermiteSequence& s) {
  double sup = 0.0;
  const std::size_t n = s.size();
  for (std::size_t j = 0; j < s.segment_count(); ++j) {
    const double d = distance(s[j].point, s[(j + 1) % n].point);
    if (d > sup) sup = d;
  }
  return sup;
}

}  // namespace hermite
