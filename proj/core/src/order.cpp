#include "hermite/order.hpp"

#include <cmath>
#include <limits>

#include "hermite/errors.hpp"
#include "hermite/metrics.hpp"

namespace hermite {

OrderReport order_experiment(const CurveSpec& spec, const RefineConfig& cfg,
                             const std::vector<double>& h_list, int depth) {
  if (!is_functional(spec)) {
    throw NonFunctionalInput("order experiments need a functional curve");
  }
  if (h_list.size() < 4) throw ParameterError("need at least 4 step values");
  for (std::size_t i = 0; i + 1 < h_list.size(); ++i) {
    if (!(h_list[i] > h_list[i + 1])) {
      throw ParameterError("step values must be strictly decreasing");
    }
  }
  if (!(h_list.front() > 0.0) || !(h_list.back() > 0.0)) {
    throw ParameterError("step values must be positive");
  }
  if (depth < 6) throw ParameterError("refinement depth must be at least 6");

  OrderReport report;
  for (const double h : h_list) {
    CurveSpec cell = spec;
    cell.h = h;
    const HermiteSequence samples = sample_curve(cell);

    std::vector<Vec> polyline;
    if (cfg.scheme == Scheme::LinearLR) {
      polyline = samples.points();
      for (int level = 0; level < depth; ++level) {
        polyline = linear_lr_step(polyline, cfg.m, samples.topology());
      }
    } else {
      RefineConfig run = cfg;
      run.levels = depth;
      run.record_drift = false;
      polyline = refine(samples, run).sequence.points();
    }
    report.rows.push_back(OrderRow{h, functional_error(spec, polyline)});
  }

  // Least squares on (log h, log e), skipping rows drowned in rounding noise.
  const double floor = 1e3 * std::numeric_limits<double>::epsilon();
  std::vector<double> xs;
  std::vector<double> ys;
  for (const OrderRow& row : report.rows) {
    if (row.error < floor) continue;
    xs.push_back(std::log(row.h));
    ys.push_back(std::log(row.error));
  }
  if (xs.size() < 2) {
    throw ParameterError("all errors sit at the floating-point floor; nothing to fit");
  }

  const auto n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) throw ParameterError("degenerate step grid");
  report.slope = sxy / sxx;
  report.intercept = my - report.slope * mx;

  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (report.intercept + report.slope * xs[i]);
    ss += r * r;
  }
  report.residual = std::sqrt(ss / n);
  return report;
}

}  // namespace hermite
