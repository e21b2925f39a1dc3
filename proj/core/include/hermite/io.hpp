#pragma once

#include <string>
#include <vector>

#include "hermite/bezier.hpp"
#include "hermite/lemma.hpp"
#include "hermite/order.hpp"
#include "hermite/subdivision.hpp"
#include "hermite/types.hpp"

namespace hermite {

/// Shortest decimal representation that round-trips to the same double
/// ("nan"/"inf"/"-inf" for non-finite values).
std::string format_double(double x);

/// Hermite data as JSON text:
/// {"dimension": n, "topology": "open"|"closed",
///  "samples": [{"point": [...], "tangent": [...]}, ...]}.
/// Tangents are normalized on load.
std::string sequence_to_json(const HermiteSequence& s);
HermiteSequence sequence_from_json(const std::string& text);

/// Hermite data as CSV: a header row, then one row per sample with 2n
/// columns (point coordinates, then tangent coordinates).  The topology is
/// not part of the format and must be supplied when reading.
std::string sequence_to_csv(const HermiteSequence& s);
HermiteSequence sequence_from_csv(const std::string& text, Topology topology);

/// One point-tangent element as JSON: {"point": [...], "tangent": [...]}.
std::string pair_to_json(const HermitePair& p);

/// Cubic segment as JSON: {"alpha": x, "q": [[...], [...], [...], [...]]}.
std::string segment_to_json(const BezierSegment& seg);

/// Vertices as CSV (header row, one vertex per row).
std::string polyline_to_csv(const std::vector<Vec>& points);
std::vector<Vec> polyline_from_csv(const std::string& text);

/// Per-level diagnostics as CSV with columns
/// level,sigma_sup,max_gap,tangent_drift.
std::string trace_to_csv(const ConvergenceTrace& trace);

/// Search certificate as JSON with keys
/// {"passed","points","min_value","min_at","M","r","eps","seconds"}.
std::string certificate_to_json(const VerificationCertificate& cert);

/// Order experiment: JSON summary {"slope","intercept","residual"} and CSV
/// rows h,error,log_h,log_error.
std::string order_to_json(const OrderReport& report);
std::string order_rows_to_csv(const OrderReport& report);

/// A planar polyline as a standalone SVG document: a single path, viewBox
/// fitted to the data with a small margin, stroke width 0.5% of the larger
/// bounding-box side, y axis flipped so larger y draws upward.  Throws
/// ParameterError for non-planar input.
std::string polyline_to_svg(const std::vector<Vec>& points);

/// Whole-file helpers; both throw IoError on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace hermite
