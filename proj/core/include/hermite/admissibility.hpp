#pragma once

#include <vector>

#include "hermite/geometry.hpp"
#include "hermite/types.hpp"

namespace hermite {

/// Classification of the direction triple {v0, v1, u} of an ordered pair:
///   Aligned             — v0 = v1 = u (straight-line configuration),
///   PairwiseIndependent — no two of the three directions are parallel,
///   Degenerate          — some two directions are parallel without full
///                         alignment.
enum class DirectionStatus { Aligned, PairwiseIndependent, Degenerate };

/// Full admissibility verdicts for an ordered pair.  `acute_sufficient` is a
/// sufficient condition for a nonvanishing curve derivative on (0,1) based on
/// all deviation angles being acute.  `planar_degeneracy_roots` lists the
/// parameters t in [0,1] where the derivative of the connecting cubic
/// vanishes, computable exactly when the four control points are coplanar
/// (the list is empty for full-rank configurations).
struct AdmissibilityReport {
  bool points_distinct = false;
  DirectionStatus direction_status = DirectionStatus::Degenerate;
  bool acute_sufficient = false;
  std::vector<double> planar_degeneracy_roots;
};

/// Evaluate every admissibility verdict for the ordered pair (a, b).
/// Never throws; the report carries all outcomes.
AdmissibilityReport check_admissible(const HermitePair& a, const HermitePair& b);

/// True when the cubic construction through (a, b) is usable: points are
/// distinct and the direction triple is aligned, pairwise independent, or has
/// exactly one parallel pair (which still guarantees a nonvanishing
/// derivative on (0,1)).  The fully collinear non-aligned triples — a
/// reversal along the connecting line — are rejected.
bool averaging_admissible(const HermitePair& a, const HermitePair& b);

/// Throw Inadmissible (annotated with `index` and `round` when >= 0) unless
/// averaging_admissible(a, b) holds.
void require_averaging_admissible(const HermitePair& a, const HermitePair& b,
                                  long index = -1, int round = -1);

}  // namespace hermite
