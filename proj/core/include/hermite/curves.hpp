#pragma once

#include <string>
#include <vector>

#include "hermite/types.hpp"

namespace hermite {

/// Built-in parametric test curves.
enum class CurveKind { Sine, Spiral2D, Spiral3D, Circle, Poly };

/// A curve together with its sampling plan.  `radius` applies to Circle,
/// `coefficients` (ascending degree) to Poly.  Defaults per kind: the sine
/// and the spirals run over [pi/2, 4 pi] open, the circle over [0, 2 pi)
/// closed, polynomials over [0, 2] open.
struct CurveSpec {
  CurveKind kind = CurveKind::Sine;
  double radius = 1.0;
  std::vector<double> coefficients;
  double h = 1.0;
  double range_begin = 0.0;
  double range_end = 1.0;
  Topology topology = Topology::Open;
};

/// A spec for `kind` with its default sampling range and topology.
CurveSpec make_curve(CurveKind kind);

/// Parse "sine" | "spiral2d" | "spiral3d" | "circle[:radius]" |
/// "poly:c0,c1,..." into a spec with default sampling.  Throws
/// ParameterError on anything else.
CurveSpec parse_curve(const std::string& text);

/// Canonical display name ("circle:2.5", "poly:0,0,1", ...).
std::string curve_name(const CurveSpec& spec);

/// Point and normalized analytic tangent at parameter t.
HermitePair curve_point(const CurveSpec& spec, double t);

/// True when the curve is the graph (x, f(x)) of a scalar function.
bool is_functional(const CurveSpec& spec);

/// f(x) for a functional curve; throws NonFunctionalInput otherwise.
double functional_value(const CurveSpec& spec, double x);

/// Equispaced samples t = range_begin + j h: open curves include range_end
/// when it lands on the grid (1e-9 relative tolerance), closed curves stop
/// one step short of it (the wrap closes the gap).
HermiteSequence sample_curve(const CurveSpec& spec);

}  // namespace hermite
