#pragma once

#include <string>
#include <vector>

#include "hermite/bezier.hpp"
#include "hermite/types.hpp"

namespace hermite {

/// Refinement scheme selector:
///   IHB      — interpolatory step: keep every element, insert the midpoint
///              average between neighbors,
///   HBLR     — smoothing family of order m: duplicate every element once,
///              then run m rounds of adjacent midpoint averaging,
///   LinearLR — the classical point-only analogue of HBLR (tangents are
///              reconstructed from the refined points afterwards).
enum class Scheme { IHB, HBLR, LinearLR };

/// Endpoint policy: Auto derives from the sequence topology (open clamps the
/// endpoints, closed wraps around); the explicit values must agree with the
/// topology.
enum class Boundary { Auto, ClampEndpoints, Wrap };

struct RefineConfig {
  Scheme scheme = Scheme::IHB;
  int m = 1;        // smoothing rounds for HBLR / LinearLR
  int levels = 1;   // capped at 30
  AlphaVariant variant = AlphaVariant::SumAngle;
  Boundary boundary = Boundary::Auto;
  bool record_drift = true;  // tangent-drift rows are the costly part of the trace
};

/// Per-level diagnostics: the tangent-deviation supremum sigma_sup, the
/// largest consecutive point gap, and the supremum of the angular distance
/// between this level's piecewise-geodesic tangent interpolant and the next
/// level's (NaN on the last level, where there is no next).
struct TraceRow {
  int level;
  double sigma_sup;
  double max_gap;
  double tangent_drift;
};

struct ConvergenceTrace {
  std::vector<TraceRow> rows;
  std::vector<std::string> warnings;
};

/// One interpolatory refinement step: even output indices keep the input
/// elements bitwise, odd indices hold the midpoint average of their
/// neighbors.  Open topology maps N elements to 2N-1, closed to 2N.
HermiteSequence ihb_step(const HermiteSequence& s, AlphaVariant variant);

/// One smoothing-family step of order m >= 1: duplicate every element, then
/// m rounds replacing the list by adjacent midpoint averages.  Open topology
/// maps N elements to 2N-m (each round shortens the open list by one);
/// closed topology wraps and keeps 2N.  m = 1 reproduces ihb_step.
HermiteSequence hb_lr_step(const HermiteSequence& s, int m, AlphaVariant variant);

/// Classical point-only smoothing step of order m: duplicate every point,
/// then m rounds of adjacent midpoint averaging.
std::vector<Vec> linear_lr_step(const std::vector<Vec>& points, int m,
                                Topology topology = Topology::Open);

struct RefineResult {
  HermiteSequence sequence;
  ConvergenceTrace trace;
};

/// Apply the configured step cfg.levels times, recording per-level
/// diagnostics.  levels = 0 returns the input with a single trace row.
RefineResult refine(const HermiteSequence& s, const RefineConfig& cfg);

/// Reconstruct unit tangents for point-only data: interior points get the
/// geodesic average of the normalized backward and forward difference
/// directions, weighted by the backward share of the two gap lengths;
/// endpoints of open data get the one-sided difference direction; closed
/// data wraps.  Throws CoincidentPoints when consecutive points coincide.
HermiteSequence estimate_tangents(const std::vector<Vec>& points, Topology topology);

}  // namespace hermite
