// Command-line front end: batch subcommands wiring the library to files.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "hermite/admissibility.hpp"
#include "hermite/bezier.hpp"
#include "hermite/curves.hpp"
#include "hermite/errors.hpp"
#include "hermite/geometry.hpp"
#include "hermite/io.hpp"
#include "hermite/lemma.hpp"
#include "hermite/metrics.hpp"
#include "hermite/order.hpp"
#include "hermite/subdivision.hpp"
#include "hermite/transform.hpp"

namespace {

using namespace hermite;

constexpr double kPi = 3.141592653589793238462643383279502884;

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Topology topology_from_string(const std::string& name) {
  if (name == "open") return Topology::Open;
  if (name == "closed") return Topology::Closed;
  throw ParameterError("topology must be 'open' or 'closed', got '" + name + "'");
}

HermiteSequence load_sequence(const std::string& path, const std::string& topology) {
  const std::string text = read_text_file(path);
  if (ends_with(path, ".json")) return sequence_from_json(text);
  if (ends_with(path, ".csv")) return sequence_from_csv(text, topology_from_string(topology));
  throw IoError("cannot tell the format of '" + path + "' (expected .json or .csv)");
}

void store_sequence(const std::string& path, const HermiteSequence& s) {
  if (ends_with(path, ".json")) {
    write_text_file(path, sequence_to_json(s));
  } else if (ends_with(path, ".csv")) {
    write_text_file(path, sequence_to_csv(s));
  } else {
    throw IoError("cannot tell the format of '" + path + "' (expected .json or .csv)");
  }
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "ihb") return Scheme::IHB;
  if (name == "hb-lr") return Scheme::HBLR;
  if (name == "linear-lr") return Scheme::LinearLR;
  throw ParameterError("unknown scheme '" + name + "'");
}

AlphaVariant variant_from_string(const std::string& name) {
  if (name == "sum-angle") return AlphaVariant::SumAngle;
  if (name == "mutual-angle") return AlphaVariant::MutualAngle;
  throw ParameterError("unknown variant '" + name + "'");
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw ParameterError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError("bad number '" + item + "' in list");
    }
  }
  if (out.empty()) throw ParameterError("empty number list");
  return out;
}

std::uint64_t seed_from_environment() {
  if (const char* env = std::getenv("HERMITE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParameterError(std::string("HERMITE_SEED is not an integer: '") + env + "'");
    }
  }
  return 8675309;
}

// ---------------------------------------------------------------------------
// reconstruct-check helpers

Vec random_unit(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::vector<double> c(dim);
    double n2 = 0.0;
    for (auto& x : c) {
      x = gauss(rng);
      n2 += x * x;
    }
    if (n2 > 1e-12) {
      const double inv = 1.0 / std::sqrt(n2);
      for (auto& x : c) x *= inv;
      return Vec(std::move(c));
    }
  }
}

// A mildly bent random sequence whose consecutive pairs stay well inside the
// averaging admissibility region (tangents within ~30 degrees of each chord).
HermiteSequence random_admissible_sequence(std::mt19937_64& rng, std::size_t dim,
                                           std::size_t count) {
  std::uniform_real_distribution<double> gap(0.5, 1.5);
  std::uniform_real_distribution<double> bend(-0.25, 0.25);
  std::vector<Vec> points;
  points.push_back(random_unit(rng, dim));
  Vec dir = random_unit(rng, dim);
  for (std::size_t i = 1; i < count; ++i) {
    points.push_back(points.back() + gap(rng) * dir);
    Vec next = dir + bend(rng) * random_unit(rng, dim);
    dir = UnitVec(next).vec();
  }
  std::vector<HermitePair> pairs;
  for (std::size_t i = 0; i < count; ++i) {
    Vec t = (i + 1 < count ? points[i + 1] - points[i] : points[i] - points[i - 1]);
    t = t + 0.2 * random_unit(rng, dim);
    pairs.emplace_back(points[i], UnitVec(t));
  }
  return HermiteSequence(std::move(pairs), Topology::Open);
}

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

CheckResult check_line(std::mt19937_64& rng, Scheme scheme, int m, const char* name) {
  const Vec origin = random_unit(rng, 3);
  const UnitVec u(random_unit(rng, 3));
  std::uniform_real_distribution<double> gap(0.5, 1.5);
  std::vector<HermitePair> pairs;
  double t = 0.0;
  for (int i = 0; i < 5; ++i) {
    pairs.emplace_back(origin + t * u.vec(), u);
    t += gap(rng);
  }
  RefineConfig cfg;
  cfg.scheme = scheme;
  cfg.m = m;
  cfg.levels = 6;
  cfg.record_drift = false;
  const RefineResult result = refine(HermiteSequence(pairs, Topology::Open), cfg);

  double worst_point = 0.0;
  double worst_tangent = 0.0;
  for (std::size_t i = 0; i < result.sequence.size(); ++i) {
    const Vec d = result.sequence[i].point - origin;
    const Vec off = d - dot(d, u.vec()) * u.vec();
    worst_point = std::max(worst_point, norm(off));
    worst_tangent =
        std::max(worst_tangent, norm(result.sequence[i].tangent.vec() - u.vec()));
  }
  const bool ok = worst_point <= 1e-12 && worst_tangent <= 1e-12;
  char buf[128];
  std::snprintf(buf, sizeof(buf), "max point offset %.2e, max tangent offset %.2e",
                worst_point, worst_tangent);
  return {name, ok, buf};
}

CheckResult check_circle() {
  std::vector<HermitePair> pairs;
  for (int j = 0; j < 4; ++j) {
    const double a = 0.5 * kPi * j;
    pairs.emplace_back(Vec({std::cos(a), std::sin(a)}),
                       UnitVec(Vec({-std::sin(a), std::cos(a)})));
  }
  RefineConfig cfg;
  cfg.levels = 6;
  cfg.record_drift = false;
  const RefineResult result = refine(HermiteSequence(pairs, Topology::Closed), cfg);

  double worst_radial = 0.0;
  double worst_ortho = 0.0;
  for (std::size_t i = 0; i < result.sequence.size(); ++i) {
    const Vec& p = result.sequence[i].point;
    worst_radial = std::max(worst_radial, std::abs(norm(p) - 1.0));
    worst_ortho =
        std::max(worst_ortho, std::abs(dot(result.sequence[i].tangent.vec(), p)));
  }
  double worst_ratio_err = 0.0;
  for (std::size_t k = 0; k + 1 < result.trace.rows.size(); ++k) {
    const double ratio =
        result.trace.rows[k + 1].sigma_sup / result.trace.rows[k].sigma_sup;
    worst_ratio_err = std::max(worst_ratio_err, std::abs(ratio - 0.5));
  }
  const bool ok = worst_radial <= 1e-10 && worst_ortho <= 1e-9 && worst_ratio_err <= 1e-9;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "radial %.2e, tangent-radius dot %.2e, sigma-ratio offset %.2e",
                worst_radial, worst_ortho, worst_ratio_err);
  return {"circle-ihb", ok, buf};
}

int cmd_reconstruct_check() {
  std::mt19937_64 rng(seed_from_environment());
  std::vector<CheckResult> rows;
  rows.push_back(check_line(rng, Scheme::IHB, 1, "line-ihb"));
  rows.push_back(check_line(rng, Scheme::HBLR, 3, "line-hb-lr3"));
  rows.push_back(check_circle());

  // Similarity equivariance across dimensions.
  {
    double worst = 0.0;
    for (const std::size_t dim : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
      for (int rep = 0; rep < 5; ++rep) {
        const HermiteSequence s = random_admissible_sequence(rng, dim, 5);
        std::uniform_real_distribution<double> sc(0.4, 2.5);
        std::uniform_real_distribution<double> tr(-2.0, 2.0);
        std::vector<double> shift(dim);
        for (auto& x : shift) x = tr(rng);
        const SimilarityTransform T(random_rotation(dim, rng), Vec(shift), sc(rng));

        RefineConfig cfg;
        cfg.scheme = Scheme::HBLR;
        cfg.m = 2;
        cfg.levels = 3;
        cfg.record_drift = false;
        const HermiteSequence a = refine(apply_transform(s, T), cfg).sequence;
        const HermiteSequence b = apply_transform(refine(s, cfg).sequence, T);
        for (std::size_t i = 0; i < a.size(); ++i) {
          worst = std::max(worst, distance(a[i].point, b[i].point));
          worst = std::max(worst, norm(a[i].tangent.vec() - b[i].tangent.vec()));
        }
      }
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "max commutation defect %.2e", worst);
    rows.push_back({"similarity", worst <= 1e-10, buf});
  }

  bool all = true;
  for (const auto& row : rows) {
    std::printf("%-14s %s  (%s)\n", row.name.c_str(), row.passed ? "PASS" : "FAIL",
                row.detail.c_str());
    all = all && row.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric Hermite curve refinement toolkit"};
  app.require_subcommand(1);

  // ---- average ----------------------------------------------------------
  std::string avg_in;
  std::string avg_out;
  std::string avg_topology = "open";
  std::string avg_variant = "sum-angle";
  double avg_w = 0.5;
  auto* avg = app.add_subcommand(
      "average", "Average the two elements of a Hermite file at weight w");
  avg->add_option("--in", avg_in, "Hermite .json/.csv with exactly two samples")
      ->required();
  avg->add_option("--w", avg_w, "averaging weight in [0,1] (default 0.5)");
  avg->add_option("--variant", avg_variant, "tangent-length rule: sum-angle | mutual-angle")
      ->check(CLI::IsMember({"sum-angle", "mutual-angle"}));
  avg->add_option("--topology", avg_topology, "topology for CSV input (open | closed)");
  avg->add_option("--out", avg_out, "write the averaged element here (default stdout)");

  // ---- refine -----------------------------------------------------------
  std::string ref_in;
  std::string ref_out;
  std::string ref_svg;
  std::string ref_trace;
  std::string ref_scheme = "ihb";
  std::string ref_variant = "sum-angle";
  std::string ref_boundary = "auto";
  std::string ref_topology = "open";
  int ref_m = 1;
  int ref_levels = 1;
  auto* ref = app.add_subcommand("refine", "Refine a Hermite file by subdivision");
  ref->add_option("--in", ref_in, "input Hermite .json or .csv")->required();
  ref->add_option("--scheme", ref_scheme, "ihb | hb-lr | linear-lr")
      ->check(CLI::IsMember({"ihb", "hb-lr", "linear-lr"}));
  ref->add_option("--m", ref_m, "smoothing rounds for hb-lr / linear-lr (default 1)");
  ref->add_option("--levels", ref_levels, "refinement levels (default 1)");
  ref->add_option("--variant", ref_variant, "tangent-length rule: sum-angle | mutual-angle")
      ->check(CLI::IsMember({"sum-angle", "mutual-angle"}));
  ref->add_option("--boundary", ref_boundary, "endpoint policy: auto | clamp | wrap")
      ->check(CLI::IsMember({"auto", "clamp", "wrap"}));
  ref->add_option("--topology", ref_topology, "topology for CSV input (open | closed)");
  ref->add_option("--out", ref_out, "output Hermite .json or .csv (default stdout JSON)");
  ref->add_option("--svg", ref_svg, "also draw the refined polyline (planar data only)");
  ref->add_option("--trace", ref_trace, "write per-level diagnostics CSV here");

  // ---- estimate-tangents ------------------------------------------------
  std::string est_in;
  std::string est_out;
  std::string est_topology = "open";
  auto* est = app.add_subcommand("estimate-tangents",
                                 "Attach unit tangents to a point-only CSV polyline");
  est->add_option("--in", est_in, "vertex CSV (header row, one vertex per row)")
      ->required();
  est->add_option("--topology", est_topology, "open | closed");
  est->add_option("--out", est_out, "output Hermite .json or .csv (default stdout JSON)");

  // ---- validate-lemma ---------------------------------------------------
  SearchParams lemma_params;
  lemma_params.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string lemma_certificate;
  std::string lemma_grid_dump;
  double lemma_grid_step = 0.05;
  auto* lem = app.add_subcommand(
      "validate-lemma",
      "Exhaustively certify the contraction margin over its angle domain");
  lem->add_option("--M", lemma_params.M, "gradient sup-norm bound (default 10)");
  lem->add_option("--r", lemma_params.r, "origin-ball radius (default 0.1)");
  lem->add_option("--eps", lemma_params.eps, "required margin (default 2^-52)");
  lem->add_option("--threads", lemma_params.threads,
                  "worker threads (default: hardware parallelism)");
  lem->add_option("--certificate", lemma_certificate, "write the JSON certificate here");
  lem->add_option("--grid-dump", lemma_grid_dump,
                  "write a coarse CSV sample grid of the margin and quotient");
  lem->add_option("--grid-step", lemma_grid_step, "spacing of the dump grid (default 0.05)");

  // ---- order ------------------------------------------------------------
  std::string ord_curve;
  std::string ord_scheme = "ihb";
  std::string ord_variant = "sum-angle";
  std::string ord_h_list;
  std::string ord_report;
  std::string ord_rows;
  int ord_m = 1;
  int ord_depth = 10;
  auto* ord = app.add_subcommand(
      "order", "Measure the approximation order of a scheme on a functional curve");
  ord->add_option("--curve", ord_curve,
                  "sine | poly:c0,c1,... (functional curves only)")
      ->required();
  ord->add_option("--scheme", ord_scheme, "ihb | hb-lr | linear-lr")
      ->check(CLI::IsMember({"ihb", "hb-lr", "linear-lr"}));
  ord->add_option("--m", ord_m, "smoothing rounds for hb-lr / linear-lr");
  ord->add_option("--variant", ord_variant, "sum-angle | mutual-angle")
      ->check(CLI::IsMember({"sum-angle", "mutual-angle"}));
  ord->add_option("--h-list", ord_h_list, "comma list of steps, strictly decreasing")
      ->required();
  std::string ord_range;
  ord->add_option("--range", ord_range, "override the parameter range, as begin,end");
  ord->add_option("--depth", ord_depth, "refinement depth per cell (default 10)");
  ord->add_option("--report", ord_report, "write the JSON fit summary here");
  ord->add_option("--rows", ord_rows, "write the per-step CSV rows here");

  // ---- sample -----------------------------------------------------------
  std::string smp_curve;
  std::string smp_out;
  std::string smp_range;
  std::string smp_topology;
  double smp_h = 0.0;
  auto* smp = app.add_subcommand("sample", "Sample a built-in curve into a Hermite file");
  smp->set_help_flag("--help", "Print this help message and exit");
  smp->add_option("--curve", smp_curve,
                  "sine | spiral2d | spiral3d | circle[:radius] | poly:c0,c1,...")
      ->required();
  smp->add_option("--h", smp_h, "parameter step")->required();
  smp->add_option("--range", smp_range, "override the parameter range, as begin,end");
  smp->add_option("--topology", smp_topology, "override the topology (open | closed)");
  smp->add_option("--out", smp_out, "output Hermite .json or .csv (default stdout JSON)");

  // ---- reconstruct-check ------------------------------------------------
  app.add_subcommand("reconstruct-check",
                     "Run the line/circle/similarity invariant suite (HERMITE_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (avg->parsed()) {
      const HermiteSequence s = load_sequence(avg_in, avg_topology);
      if (s.size() != 2) {
        throw ParameterError("averaging input must contain exactly two samples, got " +
                             std::to_string(s.size()));
      }
      const HermitePair result =
          average(s[0], s[1], avg_w, variant_from_string(avg_variant));
      const std::string text = pair_to_json(result);
      if (avg_out.empty()) {
        std::cout << text;
      } else {
        write_text_file(avg_out, text);
      }
      return 0;
    }

    if (ref->parsed()) {
      const HermiteSequence s = load_sequence(ref_in, ref_topology);
      RefineConfig cfg;
      cfg.scheme = scheme_from_string(ref_scheme);
      cfg.m = ref_m;
      cfg.levels = ref_levels;
      cfg.variant = variant_from_string(ref_variant);
      if (ref_boundary == "clamp") {
        cfg.boundary = Boundary::ClampEndpoints;
      } else if (ref_boundary == "wrap") {
        cfg.boundary = Boundary::Wrap;
      } else {
        cfg.boundary = Boundary::Auto;
      }
      cfg.record_drift = !ref_trace.empty();
      const RefineResult result = refine(s, cfg);
      for (const std::string& w : result.trace.warnings) {
        std::cerr << "warning: " << w << "\n";
      }
      if (ref_out.empty()) {
        std::cout << sequence_to_json(result.sequence);
      } else {
        store_sequence(ref_out, result.sequence);
      }
      if (!ref_svg.empty()) {
        write_text_file(ref_svg, polyline_to_svg(result.sequence.points()));
      }
      if (!ref_trace.empty()) {
        write_text_file(ref_trace, trace_to_csv(result.trace));
      }
      return 0;
    }

    if (est->parsed()) {
      const std::vector<Vec> points = polyline_from_csv(read_text_file(est_in));
      const HermiteSequence s =
          estimate_tangents(points, topology_from_string(est_topology));
      if (est_out.empty()) {
        std::cout << sequence_to_json(s);
      } else {
        store_sequence(est_out, s);
      }
      return 0;
    }

    if (lem->parsed()) {
      const VerificationCertificate cert = verify_nonnegativity(lemma_params);
      const std::string text = certificate_to_json(cert);
      std::cout << text;
      if (!lemma_certificate.empty()) {
        write_text_file(lemma_certificate, text);
      }
      if (!lemma_grid_dump.empty()) {
        if (!(lemma_grid_step > 0.0)) {
          throw ParameterError("grid step must be positive");
        }
        std::string csv = "theta0,theta1,theta,d,q\n";
        const double limit = 0.75 * kPi;
        for (double t0 = 0.0; t0 <= limit; t0 += lemma_grid_step) {
          for (double t1 = 0.0; t1 <= limit; t1 += lemma_grid_step) {
            if (std::hypot(t0, t1) > limit) continue;
            const double hi = std::min(t0 + t1, kPi);
            for (double th = std::abs(t1 - t0); th <= hi; th += lemma_grid_step) {
              const AngleTriple t{t0, t1, th};
              if (t0 == 0.0 && t1 == 0.0) continue;  // quotient undefined
              csv += format_double(t0) + "," + format_double(t1) + "," +
                     format_double(th) + "," + format_double(d_value(t)) + "," +
                     format_double(q_value(t)) + "\n";
            }
          }
        }
        write_text_file(lemma_grid_dump, csv);
      }
      return cert.passed ? 0 : 1;
    }

    if (ord->parsed()) {
      CurveSpec spec = parse_curve(ord_curve);
      if (!ord_range.empty()) {
        const std::vector<double> r = parse_double_list(ord_range);
        if (r.size() != 2) throw ParameterError("--range needs exactly begin,end");
        spec.range_begin = r[0];
        spec.range_end = r[1];
      }
      RefineConfig cfg;
      cfg.scheme = scheme_from_string(ord_scheme);
      cfg.m = ord_m;
      cfg.variant = variant_from_string(ord_variant);
      const OrderReport report =
          order_experiment(spec, cfg, parse_double_list(ord_h_list), ord_depth);
      std::cout << "slope " << format_double(report.slope) << ", intercept "
                << format_double(report.intercept) << ", residual "
                << format_double(report.residual) << "\n";
      if (!ord_report.empty()) write_text_file(ord_report, order_to_json(report));
      if (!ord_rows.empty()) write_text_file(ord_rows, order_rows_to_csv(report));
      return 0;
    }

    if (smp->parsed()) {
      CurveSpec spec = parse_curve(smp_curve);
      spec.h = smp_h;
      if (!smp_range.empty()) {
        const std::vector<double> r = parse_double_list(smp_range);
        if (r.size() != 2) throw ParameterError("--range needs exactly begin,end");
        spec.range_begin = r[0];
        spec.range_end = r[1];
      }
      if (!smp_topology.empty()) {
        spec.topology = topology_from_string(smp_topology);
      }
      const HermiteSequence s = sample_curve(spec);
      if (smp_out.empty()) {
        std::cout << sequence_to_json(s);
      } else {
        store_sequence(smp_out, s);
      }
      return 0;
    }

    return cmd_reconstruct_check();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
