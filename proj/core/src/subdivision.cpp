#include "hermite/subdivision.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hermite/geometry.hpp"
#include "hermite/sphere.hpp"

namespace hermite {

namespace {

HermitePair annotated_midpoint(const HermitePair& a, const HermitePair& b,
                               AlphaVariant variant, long index, int round = -1) {
  try {
    return midpoint_average(a, b, variant);
  } catch (const Inadmissible& e) {
    std::string what = std::string(e.what()) + " at index " + std::to_string(index);
    if (round >= 0) what += " in round " + std::to_string(round);
    throw Inadmissible(what, index, round);
  }
}

// Supremum over a parameter grid of the angular distance between the tangent
// interpolants of two consecutive refinement levels.  The grid carries four
// samples per segment of the finer level plus the common right endpoint.
double tangent_drift(const HermiteSequence& coarse, int level, const HermiteSequence& fine) {
  const double common = std::min(interpolant_range(coarse, level),
                                 interpolant_range(fine, level + 1));
  const double scale = std::ldexp(1.0, -(level + 1));
  double sup = 0.0;
  const auto sample = [&](double t) {
    const double g = angular_distance(geodesic_interpolant(coarse, level, t),
                                      geodesic_interpolant(fine, level + 1, t));
    if (g > sup) sup = g;
  };
  for (std::size_t j = 0; j < fine.segment_count(); ++j) {
    for (double f : {0.0, 0.25, 0.5, 0.75}) {
      const double t = (double(j) + f) * scale;
      if (t > common) break;
      sample(t);
    }
  }
  sample(common);
  return sup;
}

}  // namespace

HermiteSequence ihb_step(const HermiteSequence& s, AlphaVariant variant) {
  const std::size_t n = s.size();
  std::vector<HermitePair> out;
  out.reserve(2 * n);
  for (std::size_t j = 0; j < s.segment_count(); ++j) {
    out.push_back(s[j]);
    out.push_back(annotated_midpoint(s[j], s[(j + 1) % n], variant, long(j)));
  }
  if (s.topology() == Topology::Open) out.push_back(s[n - 1]);
  return HermiteSequence(std::move(out), s.topology());
}

HermiteSequence hb_lr_step(const HermiteSequence& s, int m, AlphaVariant variant) {
  if (m < 1) throw ParameterError("smoothing order m must be >= 1");
  const std::size_t n = s.size();
  const bool closed = s.topology() == Topology::Closed;
  if (!closed && 2 * n < std::size_t(m) + 2) {
    throw ParameterError("sequence too short for smoothing order " + std::to_string(m));
  }
  std::vector<HermitePair> work;
  work.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    work.push_back(s[j]);
    work.push_back(s[j]);
  }
  for (int round = 1; round <= m; ++round) {
    const std::size_t len = work.size();
    std::vector<HermitePair> next;
    next.reserve(len);
    const std::size_t count = closed ? len : len - 1;
    for (std::size_t i = 0; i < count; ++i) {
      next.push_back(annotated_midpoint(work[i], work[(i + 1) % len], variant,
                                        long(i), round));
    }
    work = std::move(next);
  }
  return HermiteSequence(std::move(work), s.topology());
}

std::vector<Vec> linear_lr_step(const std::vector<Vec>& points, int m, Topology topology) {
  if (m < 1) throw ParameterError("smoothing order m must be >= 1");
  if (points.size() < 2) throw ParameterError("need at least 2 points");
  const bool closed = topology == Topology::Closed;
  if (!closed && 2 * points.size() < std::size_t(m) + 2) {
    throw ParameterError("point list too short for smoothing order " + std::to_string(m));
  }
  std::vector<Vec> work;
  work.reserve(2 * points.size());
  for (const Vec& p : points) {
    work.push_back(p);
    work.push_back(p);
  }
  for (int round = 1; round <= m; ++round) {
    const std::size_t len = work.size();
    std::vector<Vec> next;
    next.reserve(len);
    const std::size_t count = closed ? len : len - 1;
    for (std::size_t i = 0; i < count; ++i) {
      next.push_back(0.5 * (work[i] + work[(i + 1) % len]));
    }
    work = std::move(next);
  }
  return work;
}

RefineResult refine(const HermiteSequence& s, const RefineConfig& cfg) {
  if (cfg.levels < 0 || cfg.levels > 30) {
    throw ParameterError("levels must lie in [0, 30]");
  }
  if (cfg.scheme != Scheme::IHB && cfg.m < 1) {
    throw ParameterError("smoothing order m must be >= 1");
  }
  if (cfg.boundary == Boundary::Wrap && s.topology() != Topology::Closed) {
    throw ParameterError("wrap boundary requires closed topology");
  }
  if (cfg.boundary == Boundary::ClampEndpoints && s.topology() != Topology::Open) {
    throw ParameterError("clamped endpoints require open topology");
  }

  ConvergenceTrace trace;
  if (cfg.scheme == Scheme::IHB) {
    const double s0 = sigma_sup(s);
    if (s0 > 0.75 * M_PI) {
      trace.warnings.push_back(
          "initial tangent deviation sigma = " + std::to_string(s0) +
          " exceeds 3*pi/4; the contraction guarantee does not apply");
    }
  }

  const auto step = [&](const HermiteSequence& cur, int level) -> HermiteSequence {
    try {
      switch (cfg.scheme) {
        case Scheme::IHB:
          return ihb_step(cur, cfg.variant);
        case Scheme::HBLR:
          return hb_lr_step(cur, cfg.m, cfg.variant);
        case Scheme::LinearLR:
          return estimate_tangents(linear_lr_step(cur.points(), cfg.m, cur.topology()),
                                   cur.topology());
      }
      throw ParameterError("unknown scheme");
    } catch (const Inadmissible& e) {
      throw Inadmissible("level " + std::to_string(level) + ": " + e.what(),
                         e.index, e.round);
    }
  };

  HermiteSequence current = s;
  for (int k = 0; k <= cfg.levels; ++k) {
    TraceRow row{k, sigma_sup(current), max_gap(current),
                 std::numeric_limits<double>::quiet_NaN()};
    if (k < cfg.levels) {
      HermiteSequence next = step(current, k + 1);
      if (cfg.record_drift) row.tangent_drift = tangent_drift(current, k, next);
      trace.rows.push_back(row);
      current = std::move(next);
    } else {
      trace.rows.push_back(row);
    }
  }
  return RefineResult{std::move(current), std::move(trace)};
}

HermiteSequence estimate_tangents(const std::vector<Vec>& points, Topology topology) {
  const std::size_t n = points.size();
  if (n < 3) throw ParameterError("tangent estimation needs at least 3 points");
  const bool closed = topology == Topology::Closed;
  const std::size_t segments = closed ? n : n - 1;

  std::vector<Vec> diff;
  std::vector<double> len;
  diff.reserve(segments);
  len.reserve(segments);
  for (std::size_t j = 0; j < segments; ++j) {
    Vec d = points[(j + 1) % n] - points[j];
    const double l = norm(d);
    if (l <= kCoincidenceTol) {
      throw CoincidentPoints("consecutive points coincide at index " + std::to_string(j));
    }
    diff.push_back(std::move(d));
    len.push_back(l);
  }

  std::vector<HermitePair> pairs;
  pairs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!closed && j == 0) {
      pairs.emplace_back(points[j], UnitVec(diff[0]));
      continue;
    }
    if (!closed && j == n - 1) {
      pairs.emplace_back(points[j], UnitVec(diff[segments - 1]));
      continue;
    }
    const std::size_t back = (j + segments - 1) % segments;
    const std::size_t fwd = j % segments;
    const double w = len[back] / (len[back] + len[fwd]);
    pairs.emplace_back(points[j],
                       geodesic_average(UnitVec(diff[back]), UnitVec(diff[fwd]), w));
  }
  return HermiteSequence(std::move(pairs), topology);
}

}  // namespace hermite
