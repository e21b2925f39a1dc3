#include "hermite/curves.hpp"

#include <cctype>
#include <cmath>
#include <cstddef>
#include <sstream>

#include "hermite/errors.hpp"

namespace hermite {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Horner evaluation of the polynomial and its derivative.
void poly_eval(const std::vector<double>& c, double x, double& value, double& deriv) {
  value = 0.0;
  deriv = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = deriv * x + value;
    value = value * x + c[i];
  }
}

std::vector<double> parse_coefficients(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
        ++used;
      }
      if (used != item.size()) throw ParameterError("trailing junk");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError("bad polynomial coefficient '" + item + "'");
    }
  }
  if (out.empty()) throw ParameterError("polynomial needs at least one coefficient");
  return out;
}

}  // namespace

CurveSpec make_curve(CurveKind kind) {
  CurveSpec spec;
  spec.kind = kind;
  switch (kind) {
    case CurveKind::Sine:
    case CurveKind::Spiral2D:
    case CurveKind::Spiral3D:
      spec.range_begin = 0.5 * kPi;
      spec.range_end = 4.0 * kPi;
      break;
    case CurveKind::Circle:
      spec.range_begin = 0.0;
      spec.range_end = 2.0 * kPi;
      spec.topology = Topology::Closed;
      break;
    case CurveKind::Poly:
      spec.range_begin = 0.0;
      spec.range_end = 2.0;
      spec.coefficients = {0.0, 1.0};  // the line (t, t) unless overridden
      break;
  }
  return spec;
}

CurveSpec parse_curve(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);

  if (name == "sine") {
    if (!args.empty()) throw ParameterError("curve 'sine' takes no arguments");
    return make_curve(CurveKind::Sine);
  }
  if (name == "spiral2d") {
    if (!args.empty()) throw ParameterError("curve 'spiral2d' takes no arguments");
    return make_curve(CurveKind::Spiral2D);
  }
  if (name == "spiral3d") {
    if (!args.empty()) throw ParameterError("curve 'spiral3d' takes no arguments");
    return make_curve(CurveKind::Spiral3D);
  }
  if (name == "circle") {
    CurveSpec spec = make_curve(CurveKind::Circle);
    if (!args.empty()) {
      try {
        std::size_t used = 0;
        spec.radius = std::stod(args, &used);
        if (used != args.size()) throw ParameterError("trailing junk");
      } catch (const std::exception&) {
        throw ParameterError("bad circle radius '" + args + "'");
      }
      if (!(spec.radius > 0.0)) throw ParameterError("circle radius must be positive");
    }
    return spec;
  }
  if (name == "poly") {
    CurveSpec spec = make_curve(CurveKind::Poly);
    if (args.empty()) {
      throw ParameterError("curve 'poly' needs coefficients: poly:c0,c1,...");
    }
    spec.coefficients = parse_coefficients(args);
    return spec;
  }
  throw ParameterError("unknown curve '" + text +
                       "' (expected sine, spiral2d, spiral3d, circle[:r], poly:c0,c1,...)");
}

std::string curve_name(const CurveSpec& spec) {
  switch (spec.kind) {
    case CurveKind::Sine:
      return "sine";
    case CurveKind::Spiral2D:
      return "spiral2d";
    case CurveKind::Spiral3D:
      return "spiral3d";
    case CurveKind::Circle: {
      std::ostringstream os;
      os << "circle:" << spec.radius;
      return os.str();
    }
    case CurveKind::Poly: {
      std::ostringstream os;
      os << "poly:";
      for (std::size_t i = 0; i < spec.coefficients.size(); ++i) {
        if (i) os << ',';
        os << spec.coefficients[i];
      }
      return os.str();
    }
  }
  return "?";
}

HermitePair curve_point(const CurveSpec& spec, double t) {
  switch (spec.kind) {
    case CurveKind::Sine:
      return HermitePair(Vec({t, std::sin(t)}), UnitVec(Vec({1.0, std::cos(t)})));
    case CurveKind::Spiral2D: {
      const double c = std::cos(t);
      const double s = std::sin(t);
      return HermitePair(Vec({t * c, t * s}), UnitVec(Vec({c - t * s, s + t * c})));
    }
    case CurveKind::Spiral3D: {
      const double c = std::cos(t);
      const double s = std::sin(t);
      return HermitePair(Vec({t * c, t * s, t}),
                         UnitVec(Vec({c - t * s, s + t * c, 1.0})));
    }
    case CurveKind::Circle: {
      const double c = std::cos(t);
      const double s = std::sin(t);
      return HermitePair(Vec({spec.radius * c, spec.radius * s}), UnitVec(Vec({-s, c})));
    }
    case CurveKind::Poly: {
      double value = 0.0;
      double deriv = 0.0;
      poly_eval(spec.coefficients, t, value, deriv);
      return HermitePair(Vec({t, value}), UnitVec(Vec({1.0, deriv})));
    }
  }
  throw ParameterError("unknown curve kind");
}

bool is_functional(const CurveSpec& spec) {
  return spec.kind == CurveKind::Sine || spec.kind == CurveKind::Poly;
}

double functional_value(const CurveSpec& spec, double x) {
  switch (spec.kind) {
    case CurveKind::Sine:
      return std::sin(x);
    case CurveKind::Poly: {
      double value = 0.0;
      double deriv = 0.0;
      poly_eval(spec.coefficients, x, value, deriv);
      return value;
    }
    default:
      throw NonFunctionalInput("curve '" + curve_name(spec) +
                               "' is not the graph of a scalar function");
  }
}

HermiteSequence sample_curve(const CurveSpec& spec) {
  if (!(spec.h > 0.0)) throw ParameterError("sampling step must be positive");
  const double span = spec.range_end - spec.range_begin;
  if (!(span > 0.0)) throw ParameterError("sampling range is empty");

  const double ratio = span / spec.h;
  long count;
  if (spec.topology == Topology::Closed) {
    count = static_cast<long>(std::ceil(ratio - 1e-9));
  } else {
    count = static_cast<long>(std::floor(ratio + 1e-9)) + 1;
  }
  if (count < 2) {
    throw ParameterError("sampling step leaves fewer than two samples in the range");
  }

  std::vector<HermitePair> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  for (long j = 0; j < count; ++j) {
    pairs.push_back(curve_point(spec, spec.range_begin + static_cast<double>(j) * spec.h));
  }
  return HermiteSequence(std::move(pairs), spec.topology);
}

}  // namespace hermite
