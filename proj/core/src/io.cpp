#include "hermite/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string strip(const std::string& s) {
  auto b = s.begin();
  auto e = s.end();
  while (b != e && std::isspace(static_cast<unsigned char>(*b))) ++b;
  while (e != b && std::isspace(static_cast<unsigned char>(*(e - 1)))) --e;
  return std::string(b, e);
}

double parse_number(const std::string& cell, const std::string& where) {
  const std::string t = strip(cell);
  if (t.empty()) throw IoError(where + ": empty numeric field");
  try {
    std::size_t used = 0;
    const double v = std::stod(t, &used);
    if (used != t.size()) throw IoError("");
    return v;
  } catch (const std::exception&) {
    throw IoError(where + ": bad number '" + t + "'");
  }
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::stringstream ss(text);
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!strip(line).empty()) lines.push_back(line);
  }
  return lines;
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(v[i]);
  return arr;
}

Vec vec_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() < 2) {
    throw IoError(where + ": expected an array of at least two numbers");
  }
  std::vector<double> coords;
  coords.reserve(arr.size());
  for (const auto& x : arr) {
    if (!x.is_number()) throw IoError(where + ": expected numbers");
    coords.push_back(x.get<double>());
  }
  return Vec(std::move(coords));
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string sequence_to_json(const HermiteSequence& s) {
  json doc;
  doc["dimension"] = s.dim();
  doc["topology"] = s.topology() == Topology::Closed ? "closed" : "open";
  json samples = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json item;
    item["point"] = vec_to_json(s[i].point);
    item["tangent"] = vec_to_json(s[i].tangent.vec());
    samples.push_back(std::move(item));
  }
  doc["samples"] = std::move(samples);
  return doc.dump(2) + "\n";
}

HermiteSequence sequence_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw IoError(std::string("JSON parse failure: ") + e.what());
  }
  if (!doc.is_object()) throw IoError("top level must be an object");
  if (!doc.contains("samples") || !doc["samples"].is_array()) {
    throw IoError("missing 'samples' array");
  }
  Topology topology = Topology::Open;
  if (doc.contains("topology")) {
    const std::string t = doc["topology"].is_string() ? doc["topology"].get<std::string>()
                                                      : std::string();
    if (t == "closed") {
      topology = Topology::Closed;
    } else if (t == "open") {
      topology = Topology::Open;
    } else {
      throw IoError("'topology' must be \"open\" or \"closed\"");
    }
  }

  std::vector<HermitePair> pairs;
  std::size_t index = 0;
  for (const auto& item : doc["samples"]) {
    const std::string where = "sample " + std::to_string(index);
    if (!item.is_object() || !item.contains("point") || !item.contains("tangent")) {
      throw IoError(where + ": expected {\"point\": [...], \"tangent\": [...]}");
    }
    const Vec p = vec_from_json(item["point"], where + " point");
    const Vec v = vec_from_json(item["tangent"], where + " tangent");
    try {
      pairs.emplace_back(p, UnitVec(v));
    } catch (const VanishingTangent&) {
      throw VanishingTangent(where + ": tangent length is too small to normalize");
    }
    ++index;
  }
  if (pairs.size() < 2) throw IoError("need at least two samples");
  if (doc.contains("dimension")) {
    if (!doc["dimension"].is_number_integer() ||
        doc["dimension"].get<long>() != static_cast<long>(pairs.front().point.dim())) {
      throw IoError("'dimension' disagrees with the samples");
    }
  }
  return HermiteSequence(std::move(pairs), topology);
}

std::string sequence_to_csv(const HermiteSequence& s) {
  std::string out;
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    out += "p" + std::to_string(i) + ",";
  }
  for (std::size_t i = 0; i < n; ++i) {
    out += "v" + std::to_string(i);
    out += (i + 1 < n) ? "," : "\n";
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out += format_double(s[i].point[j]) + ",";
    }
    for (std::size_t j = 0; j < n; ++j) {
      out += format_double(s[i].tangent[j]);
      out += (j + 1 < n) ? "," : "\n";
    }
  }
  return out;
}

HermiteSequence sequence_from_csv(const std::string& text, Topology topology) {
  const auto lines = data_lines(text);
  if (lines.size() < 3) throw IoError("need a header row and at least two sample rows");
  const std::size_t columns = split(lines.front(), ',').size();
  if (columns < 4 || columns % 2 != 0) {
    throw IoError("header must have 2n columns (point then tangent), n >= 2");
  }
  const std::size_t n = columns / 2;

  std::vector<HermitePair> pairs;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::string where = "row " + std::to_string(row - 1);
    const auto cells = split(lines[row], ',');
    if (cells.size() != columns) {
      throw IoError(where + ": expected " + std::to_string(columns) + " columns, got " +
                    std::to_string(cells.size()));
    }
    std::vector<double> p(n);
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = parse_number(cells[j], where);
    for (std::size_t j = 0; j < n; ++j) v[j] = parse_number(cells[n + j], where);
    try {
      pairs.emplace_back(Vec(std::move(p)), UnitVec(Vec(std::move(v))));
    } catch (const VanishingTangent&) {
      throw VanishingTangent(where + ": tangent length is too small to normalize");
    }
  }
  return HermiteSequence(std::move(pairs), topology);
}

std::string pair_to_json(const HermitePair& p) {
  json doc;
  doc["point"] = vec_to_json(p.point);
  doc["tangent"] = vec_to_json(p.tangent.vec());
  return doc.dump(2) + "\n";
}

std::string segment_to_json(const BezierSegment& seg) {
  json doc;
  doc["alpha"] = seg.alpha;
  doc["q"] = json::array({vec_to_json(seg.q0), vec_to_json(seg.q1),
                          vec_to_json(seg.q2), vec_to_json(seg.q3)});
  return doc.dump(2) + "\n";
}

std::string polyline_to_csv(const std::vector<Vec>& points) {
  if (points.empty()) throw ParameterError("polyline must be nonempty");
  const std::size_t n = points.front().dim();
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    out += "x" + std::to_string(i);
    out += (i + 1 < n) ? "," : "\n";
  }
  for (const Vec& p : points) {
    if (p.dim() != n) throw ParameterError("polyline vertices have mixed dimensions");
    for (std::size_t j = 0; j < n; ++j) {
      out += format_double(p[j]);
      out += (j + 1 < n) ? "," : "\n";
    }
  }
  return out;
}

std::vector<Vec> polyline_from_csv(const std::string& text) {
  const auto lines = data_lines(text);
  if (lines.size() < 2) throw IoError("need a header row and at least one vertex row");
  const std::size_t n = split(lines.front(), ',').size();
  if (n < 2) throw IoError("vertex rows need at least two columns");
  std::vector<Vec> out;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const std::string where = "row " + std::to_string(row - 1);
    const auto cells = split(lines[row], ',');
    if (cells.size() != n) {
      throw IoError(where + ": expected " + std::to_string(n) + " columns, got " +
                    std::to_string(cells.size()));
    }
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = parse_number(cells[j], where);
    out.emplace_back(std::move(p));
  }
  return out;
}

std::string trace_to_csv(const ConvergenceTrace& trace) {
  std::string out = "level,sigma_sup,max_gap,tangent_drift\n";
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.level) + "," + format_double(row.sigma_sup) + "," +
           format_double(row.max_gap) + "," + format_double(row.tangent_drift) + "\n";
  }
  return out;
}

std::string certificate_to_json(const VerificationCertificate& cert) {
  json doc;
  doc["passed"] = cert.passed;
  doc["points"] = cert.points_evaluated;
  doc["min_value"] = cert.min_value;
  doc["min_at"] = {cert.min_location.theta0, cert.min_location.theta1,
                   cert.min_location.theta};
  doc["M"] = cert.params.M;
  doc["r"] = cert.params.r;
  doc["eps"] = cert.params.eps;
  doc["seconds"] = cert.wall_time;
  return doc.dump(2) + "\n";
}

std::string order_to_json(const OrderReport& report) {
  json doc;
  doc["slope"] = report.slope;
  doc["intercept"] = report.intercept;
  doc["residual"] = report.residual;
  return doc.dump(2) + "\n";
}

std::string order_rows_to_csv(const OrderReport& report) {
  std::string out = "h,error,log_h,log_error\n";
  for (const OrderRow& row : report.rows) {
    out += format_double(row.h) + "," + format_double(row.error) + "," +
           format_double(std::log(row.h)) + "," + format_double(std::log(row.error)) +
           "\n";
  }
  return out;
}

std::string polyline_to_svg(const std::vector<Vec>& points) {
  if (points.empty()) throw ParameterError("polyline must be nonempty");
  for (const Vec& p : points) {
    if (p.dim() != 2) {
      throw ParameterError("SVG export is restricted to planar polylines");
    }
  }
  double min_x = points.front()[0];
  double max_x = min_x;
  double min_y = -points.front()[1];
  double max_y = min_y;
  for (const Vec& p : points) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, -p[1]);
    max_y = std::max(max_y, -p[1]);
  }
  double span = std::max(max_x - min_x, max_y - min_y);
  if (!(span > 0.0)) span = 1.0;
  const double stroke = 0.005 * span;
  const double margin = stroke;

  std::string d;
  for (std::size_t i = 0; i < points.size(); ++i) {
    d += (i == 0) ? "M " : " L ";
    d += format_double(points[i][0]) + " " + format_double(-points[i][1]);
  }

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  out += format_double(min_x - margin) + " " + format_double(min_y - margin) + " " +
         format_double(max_x - min_x + 2 * margin) + " " +
         format_double(max_y - min_y + 2 * margin) + "\">\n";
  out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
         format_double(stroke) + "\"/>\n";
  out += "</svg>\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading '" + path + "'");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed while writing '" + path + "'");
}

}  // namespace hermite
