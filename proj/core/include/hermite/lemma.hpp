#pragma once

#include <cstdint>
#include <functional>
#include <utility>

#include "hermite/vec.hpp"

namespace hermite {

/// Deviation-angle triple (theta0, theta1, theta) of an ordered pair: the two
/// tangent-to-chord angles and the tangent-to-tangent angle, all in [0, pi].
struct AngleTriple {
  double theta0;
  double theta1;
  double theta;
};

/// Parameters of the nonnegativity search:
///   M       bound assumed on the max-norm of the gradient of D,
///   r       radius of the origin ball handled by boundary sampling instead
///           of sweeping (D vanishes at the origin itself),
///   eps     margin every swept point must clear,
///   threads worker count for the sweep (tiles are independent).
struct SearchParams {
  double M = 10.0;
  double r = 0.1;
  double eps = 0x1p-52;
  int threads = 1;
};

/// Outcome of the exhaustive search.  `points_evaluated` and the minimum
/// refer to the adaptive sweep outside the origin ball; the boundary fields
/// describe the dense sampling of the ball boundary (plus the origin, whose
/// value 0 is recorded as the ball-region minimum).
struct VerificationCertificate {
  bool passed = false;
  std::uint64_t points_evaluated = 0;
  double min_value = 0.0;
  AngleTriple min_location{0.0, 0.0, 0.0};
  SearchParams params;
  double wall_time = 0.0;  // seconds
  std::uint64_t boundary_points = 0;
  double boundary_min = 0.0;
  double boundary_step = 0.0;  // angular grid density used on the ball boundary
  std::uint64_t escalations = 0;  // hops clamped to the step floor and bisected
};

/// Deviation angles of the left child pair (first element, midpoint average)
/// expressed in closed form as a function of the parent triple: first the
/// angle of the parent's first tangent to the child chord, then the angle of
/// the midpoint tangent to the child chord.  Arccos arguments are clamped to
/// [-1, 1]; throws DegenerateDenominator when an expression under a square
/// root is not positive.
std::pair<double, double> theta_tilde(const AngleTriple& t);

/// Contraction quotient: the child sigma^2 over the parent sigma^2.
/// Throws UndefinedAtOrigin at theta0 = theta1 = 0.
double q_value(const AngleTriple& t);

/// Contraction margin D = 0.9 (theta0^2 + theta1^2) - theta00^2 - theta01^2;
/// nonnegative exactly where the quotient is at most 0.9.
double d_value(const AngleTriple& t);

/// Membership in the triple domain: sqrt(theta0^2 + theta1^2) <= 3 pi / 4 and
/// |theta1 - theta0| <= theta <= theta0 + theta1 (exact comparisons).
bool in_omega(const AngleTriple& t);

/// Exhaustively certify D >= eps over the triple domain outside the origin
/// ball, stepping by (D - eps) / (M sqrt(3)) along adaptive axis-aligned
/// lines, and D >= 0 on the densely sampled ball boundary.  Deterministic
/// for passing runs regardless of thread count; a failing run reports one
/// offending point (deterministically so when threads = 1).
VerificationCertificate verify_nonnegativity(const SearchParams& p);

/// Same search with the evaluated function replaced — a self-test hook.
VerificationCertificate verify_nonnegativity(
    const SearchParams& p, const std::function<double(const AngleTriple&)>& value);

/// Central finite-difference gradient of D at t with step h, one component
/// per coordinate of the triple.
Vec gradient_probe(const AngleTriple& t, double h);

}  // namespace hermite
