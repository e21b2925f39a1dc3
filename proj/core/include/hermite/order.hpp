#pragma once

#include <vector>

#include "hermite/curves.hpp"
#include "hermite/subdivision.hpp"

namespace hermite {

/// One cell of an approximation-order experiment.
struct OrderRow {
  double h;
  double error;
};

/// Log-log fit of the error ansatz e(h) = C * h^beta: `slope` is beta,
/// `intercept` is log C, `residual` the root-mean-square misfit of the
/// fitted line over the rows used.
struct OrderReport {
  std::vector<OrderRow> rows;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

/// For each step h (strictly decreasing, at least 4 values): sample the
/// functional curve, refine `depth` levels (at least 6) with the given
/// configuration, and measure the maximal vertical error of the refined
/// polyline.  The point-only linear scheme drops the tangents and refines
/// vertices alone.  Rows whose error sits at the floating-point floor
/// (below 1000 machine epsilons) are excluded from the fit.
OrderReport order_experiment(const CurveSpec& spec, const RefineConfig& cfg,
                             const std::vector<double>& h_list, int depth);

}  // namespace hermite
