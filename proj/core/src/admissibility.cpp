#include "hermite/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace hermite {

namespace {

// |<a,b>| within this of 1 counts as parallel directions.
constexpr double kDependenceTol = 1e-12;
// Gram-determinant threshold below which {v0, v1, u} has rank <= 2.
constexpr double kRankTol = 1e-10;
// Coefficient magnitudes below this collapse a quadratic to lower degree.
constexpr double kCoeffTol = 1e-12;
// Two roots within this distance are considered the same parameter.
constexpr double kRootTol = 1e-9;

bool parallel(double d) { return std::abs(d) >= 1.0 - kDependenceTol; }
bool same_direction(double d) { return d >= 1.0 - kDependenceTol; }

// Root set of a*t^2 + b*t + c = 0; nullopt encodes "identically zero"
// (every t is a root).
std::optional<std::vector<double>> quadratic_roots(double a, double b, double c) {
  if (std::abs(a) < kCoeffTol) {
    if (std::abs(b) < kCoeffTol) {
      if (std::abs(c) < kCoeffTol) return std::nullopt;
      return std::vector<double>{};
    }
    return std::vector<double>{-c / b};
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    if (disc < -kCoeffTol) return std::vector<double>{};
    disc = 0.0;
  }
  const double s = std::sqrt(disc);
  // Stable quadratic formula: compute the larger-magnitude root first.
  const double q = -0.5 * (b + (b >= 0.0 ? s : -s));
  std::vector<double> roots{q / a};
  if (std::abs(q) > kCoeffTol) roots.push_back(c / q);
  else roots.push_back((-b - (b >= 0.0 ? s : -s)) / (2.0 * a));
  return roots;
}

std::vector<double> clip_to_unit_interval(std::vector<double> roots) {
  std::vector<double> out;
  for (double r : roots) {
    if (r < -kRootTol || r > 1.0 + kRootTol) continue;
    out.push_back(std::clamp(r, 0.0, 1.0));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) <= kRootTol; }),
            out.end());
  return out;
}

// Parameters in [0,1] where the derivative of the connecting cubic vanishes,
// for a coplanar configuration described by in-plane signed tangent angles
// (cx, sx) and (cy, sy) relative to the chord direction, with c2 the squared
// cosine of the quarter sum of the deviation angles.
std::vector<double> planar_roots(double c2, double cx, double sx, double cy, double sy) {
  // Components of the (rescaled) cubic derivative along and across the chord,
  // each a quadratic in t.
  const auto along = quadratic_roots(-6.0 * c2 + 3.0 * cx + 3.0 * cy,
                                     6.0 * c2 - 4.0 * cx - 2.0 * cy, cx);
  const auto across = quadratic_roots(3.0 * (sx + sy), -4.0 * sx - 2.0 * sy, sx);
  if (!along && !across) return {};  // cannot occur for distinct points; be safe
  if (!along) return clip_to_unit_interval(*across);
  if (!across) return clip_to_unit_interval(*along);
  std::vector<double> both;
  for (double r1 : *along) {
    for (double r2 : *across) {
      if (std::abs(r1 - r2) <= kRootTol) both.push_back(0.5 * (r1 + r2));
    }
  }
  return clip_to_unit_interval(both);
}

}  // namespace

AdmissibilityReport check_admissible(const HermitePair& a, const HermitePair& b) {
  if (a.dim() != b.dim()) throw ParameterError("pair dimensions disagree");
  AdmissibilityReport report;
  report.points_distinct = distance(a.point, b.point) > kCoincidenceTol;
  if (!report.points_distinct) return report;

  const PairGeometry g = pair_geometry(a, b);
  const double d01 = dot(a.tangent, b.tangent);
  const double d0u = dot(a.tangent.vec(), g.u.vec());
  const double d1u = dot(b.tangent.vec(), g.u.vec());

  if (same_direction(d01) && same_direction(d0u) && same_direction(d1u)) {
    report.direction_status = DirectionStatus::Aligned;
  } else if (!parallel(d01) && !parallel(d0u) && !parallel(d1u)) {
    report.direction_status = DirectionStatus::PairwiseIndependent;
  } else {
    report.direction_status = DirectionStatus::Degenerate;
  }

  const double c = std::cos(0.25 * (g.theta0 + g.theta1));
  const double c2 = c * c;
  const double cos_theta = clamp_unit(d01);
  report.acute_sufficient =
      g.theta < M_PI_2 &&
      3.0 * c2 * clamp_unit(d0u) - 1.0 - cos_theta > 0.0 &&
      3.0 * c2 * clamp_unit(d1u) - 1.0 - cos_theta > 0.0;

  // Rank of {v0, v1, u} via the Gram determinant; full rank means the four
  // control points span three dimensions and the derivative cannot vanish.
  const double gram = 1.0 + 2.0 * d01 * d0u * d1u - d01 * d01 - d0u * d0u - d1u * d1u;
  if (std::abs(gram) < kRankTol) {
    // Build an in-plane orthonormal basis (u, e2) and signed angles.
    Vec w = a.tangent.vec() - d0u * g.u.vec();
    if (norm(w) < 1e-8) w = b.tangent.vec() - d1u * g.u.vec();
    double sx = 0.0, sy = 0.0;
    if (norm(w) >= 1e-8) {
      const UnitVec e2(w);
      sx = dot(a.tangent.vec(), e2.vec());
      sy = dot(b.tangent.vec(), e2.vec());
    }
    report.planar_degeneracy_roots = planar_roots(c2, d0u, sx, d1u, sy);
  }
  return report;
}

bool averaging_admissible(const HermitePair& a, const HermitePair& b) {
  if (a.dim() != b.dim()) throw ParameterError("pair dimensions disagree");
  if (distance(a.point, b.point) <= kCoincidenceTol) return false;
  const PairGeometry g = pair_geometry(a, b);
  const double d01 = dot(a.tangent, b.tangent);
  const double d0u = dot(a.tangent.vec(), g.u.vec());
  const double d1u = dot(b.tangent.vec(), g.u.vec());
  const int dependent = int(parallel(d01)) + int(parallel(d0u)) + int(parallel(d1u));
  if (dependent <= 1) return true;  // independent, or a single parallel pair
  // Two or more parallel pairs means the whole frame is collinear up to
  // tolerance. A nearly straight configuration (every parallel pair pointing
  // the same way) is fine; a reversal among them is not, since the blend
  // weight degenerates as the deviation angles approach a straight angle.
  return !((parallel(d01) && d01 < 0.0) || (parallel(d0u) && d0u < 0.0) ||
           (parallel(d1u) && d1u < 0.0));
}

void require_averaging_admissible(const HermitePair& a, const HermitePair& b,
                                  long index, int round) {
  if (averaging_admissible(a, b)) return;
  std::string what = distance(a.point, b.point) <= kCoincidenceTol
                         ? "inadmissible pair: points coincide"
                         : "inadmissible pair: directions collinear with a reversal";
  if (index >= 0) what += " at index " + std::to_string(index);
  if (round >= 0) what += " in round " + std::to_string(round);
  throw Inadmissible(what, index, round);
}

}  // namespace hermite
