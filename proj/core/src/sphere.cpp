#include "hermite/sphere.hpp"

#include <cmath>
#include <string>

namespace hermite {

namespace {
constexpr double kAntipodalMargin = 1e-9;
// Below this angle the chord interpolation is exact to double precision.
constexpr double kSmallAngle = 1e-8;
}  // namespace

UnitVec geodesic_average(const UnitVec& u, const UnitVec& v, double w) {
  if (u.dim() != v.dim()) throw ParameterError("unit vector dimensions disagree");
  if (w < 0.0 || w > 1.0) throw OutOfRange("geodesic weight outside [0,1]");
  if (w == 0.0) return u;
  if (w == 1.0) return v;
  const double angle = angular_distance(u, v);
  if (angle >= M_PI - kAntipodalMargin) {
    throw AntipodalVectors("directions are antipodal (angle " + std::to_string(angle) + ")");
  }
  if (angle < kSmallAngle) {
    return UnitVec((1.0 - w) * u.vec() + w * v.vec());
  }
  const double s = std::sin(angle);
  return UnitVec((std::sin((1.0 - w) * angle) / s) * u.vec() +
                 (std::sin(w * angle) / s) * v.vec());
}

double interpolant_range(const HermiteSequence& s, int level) {
  if (level < 0 || level > 60) throw ParameterError("interpolant level outside [0,60]");
  return std::ldexp(double(s.segment_count()), -level);
}

UnitVec geodesic_interpolant(const HermiteSequence& s, int level, double t) {
  const double scale = std::ldexp(1.0, -level);
  const double range = interpolant_range(s, level);
  if (!(t >= 0.0 && t <= range)) {
    throw OutOfRange("interpolant parameter " + std::to_string(t) +
                     " outside [0, " + std::to_string(range) + "]");
  }
  const std::size_t segments = s.segment_count();
  std::size_t j = std::size_t(std::floor(t / scale));
  if (j >= segments) j = segments - 1;  // right endpoint of the last segment
  const double local = t / scale - double(j);
  const std::size_t n = s.size();
  return geodesic_average(s[j].tangent, s[(j + 1) % n].tangent,
                          local > 1.0 ? 1.0 : local);
}

}  // namespace hermite
