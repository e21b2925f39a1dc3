#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "hermite/io.hpp"
#include "hermite/bezier.hpp"
#include "support/oracles.hpp"

using namespace hermite;
using testsupport::circle_sequence;
using testsupport::max_coord_error;
using testsupport::random_sequence;

TEST_CASE("doubles serialize to shortest round-tripping decimals") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5522847498307935) == "0.5522847498307935");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(HUGE_VAL) == "inf");
  CHECK(format_double(-HUGE_VAL) == "-inf");
}

TEST_CASE("Hermite JSON round-trips points bitwise and tangents to an ulp") {
  std::mt19937_64 rng(111001);
  for (const HermiteSequence& s :
       {random_sequence(rng, 3, 5), HermiteSequence(circle_sequence(4))}) {
    const std::string text = sequence_to_json(s);
    const HermiteSequence back = sequence_from_json(text);
    CHECK(back.topology() == s.topology());
    REQUIRE(back.size() == s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
      CHECK(back[j].point == s[j].point);
      // The decimal text is exact, but construction re-normalizes the parsed
      // tangent and that can move its last bit.
      CHECK(max_coord_error(back[j].tangent.vec(), s[j].tangent.vec()) <= 5e-16);
    }
  }

  // With exactly-unit tangents nothing moves and the text is a fixpoint.
  std::vector<HermitePair> axis;
  axis.emplace_back(Vec{0.0, 0.0}, UnitVec(Vec{1.0, 0.0}));
  axis.emplace_back(Vec{1.0, 0.5}, UnitVec(Vec{0.0, 1.0}));
  axis.emplace_back(Vec{2.0, 1.0}, UnitVec(Vec{-1.0, 0.0}));
  const HermiteSequence exact(axis, Topology::Open);
  const std::string text = sequence_to_json(exact);
  const HermiteSequence back = sequence_from_json(text);
  REQUIRE(back.size() == exact.size());
  for (std::size_t j = 0; j < exact.size(); ++j) CHECK(back[j] == exact[j]);
  CHECK(sequence_to_json(back) == text);
}

TEST_CASE("JSON loading normalizes tangents and validates structure") {
  const std::string text = R"({
    "topology": "open",
    "samples": [
      {"point": [0, 0], "tangent": [2, 0]},
      {"point": [1, 0], "tangent": [0, -3]}
    ]
  })";
  const HermiteSequence s = sequence_from_json(text);
  CHECK(s[0].tangent[0] == 1.0);
  CHECK(s[1].tangent[1] == -1.0);

  CHECK_THROWS_AS(sequence_from_json("not json"), IoError);
  CHECK_THROWS_AS(sequence_from_json("[1,2]"), IoError);
  CHECK_THROWS_AS(sequence_from_json(R"({"samples": []})"), IoError);
  CHECK_THROWS_AS(
      sequence_from_json(
          R"({"topology":"loop","samples":[{"point":[0,0],"tangent":[1,0]}]})"),
      IoError);
  CHECK_THROWS_AS(
      sequence_from_json(
          R"({"dimension": 3, "samples": [
              {"point": [0,0], "tangent": [1,0]},
              {"point": [1,0], "tangent": [1,0]}]})"),
      IoError);
  // A dead tangent is reported with its sample index.
  CHECK_THROWS_WITH_AS(
      sequence_from_json(
          R"({"samples": [
              {"point": [0,0], "tangent": [1,0]},
              {"point": [1,0], "tangent": [0,0]}]})"),
      "sample 1: tangent length is too small to normalize", VanishingTangent);
}

TEST_CASE("Hermite CSV round-trips points bitwise and tangents to an ulp") {
  std::mt19937_64 rng(111002);
  const HermiteSequence s = random_sequence(rng, 3, 4);
  const std::string text = sequence_to_csv(s);
  CHECK(text.rfind("p0,p1,p2,v0,v1,v2\n", 0) == 0);
  const HermiteSequence back = sequence_from_csv(text, Topology::Open);
  REQUIRE(back.size() == s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    CHECK(back[j].point == s[j].point);
    CHECK(max_coord_error(back[j].tangent.vec(), s[j].tangent.vec()) <= 5e-16);
  }

  // Axis-aligned tangents survive re-normalization, so the text is stable.
  std::vector<HermitePair> axis;
  axis.emplace_back(Vec{0.0, 0.0}, UnitVec(Vec{0.0, 1.0}));
  axis.emplace_back(Vec{2.0, 0.25}, UnitVec(Vec{1.0, 0.0}));
  const HermiteSequence exact(axis, Topology::Open);
  const std::string exact_text = sequence_to_csv(exact);
  CHECK(sequence_to_csv(sequence_from_csv(exact_text, Topology::Open)) == exact_text);
}

TEST_CASE("CSV errors carry the offending row") {
  CHECK_THROWS_AS(sequence_from_csv("p0,p1,v0,v1\n", Topology::Open), IoError);
  CHECK_THROWS_AS(sequence_from_csv("p0,p1,v0\n0,0,1\n1,0,1\n", Topology::Open),
                  IoError);  // odd column count
  CHECK_THROWS_WITH_AS(
      sequence_from_csv("p0,p1,v0,v1\n0,0,1,0\n1,oops,1,0\n", Topology::Open),
      "row 1: bad number 'oops'", IoError);
  CHECK_THROWS_WITH_AS(
      sequence_from_csv("p0,p1,v0,v1\n0,0,1,0\n1,0,1\n", Topology::Open),
      "row 1: expected 4 columns, got 3", IoError);
}

TEST_CASE("single elements and segments serialize for inspection") {
  const HermitePair p(Vec{1.0, 2.0}, UnitVec(Vec{0.0, 1.0}));
  const auto pj = nlohmann::json::parse(pair_to_json(p));
  CHECK(pj["point"][1] == 2.0);
  CHECK(pj["tangent"][1] == 1.0);

  const HermitePair a(Vec{0.0, 0.0}, UnitVec(Vec{1.0, 0.0}));
  const HermitePair b(Vec{3.0, 0.0}, UnitVec(Vec{1.0, 0.0}));
  const auto sj = nlohmann::json::parse(segment_to_json(segment(a, b)));
  CHECK(sj["alpha"] == 1.0);
  REQUIRE(sj["q"].size() == 4);
  CHECK(sj["q"][1][0] == 1.0);
  CHECK(sj["q"][2][0] == 2.0);
}

TEST_CASE("trace CSV uses one row per level and spells out NaN") {
  ConvergenceTrace trace;
  trace.rows.push_back({0, 1.25, 0.5, 0.125});
  trace.rows.push_back({1, 0.625, 0.25, std::nan("")});
  const std::string text = trace_to_csv(trace);
  CHECK(text ==
        "level,sigma_sup,max_gap,tangent_drift\n"
        "0,1.25,0.5,0.125\n"
        "1,0.625,0.25,nan\n");
}

TEST_CASE("certificate JSON carries exactly the published fields") {
  VerificationCertificate cert;
  cert.passed = true;
  cert.points_evaluated = 123456;
  cert.min_value = 2.5e-4;
  cert.min_location = {0.1, 0.2, 0.25};
  cert.params.M = 10.0;
  cert.params.r = 0.1;
  cert.wall_time = 1.5;
  const auto doc = nlohmann::json::parse(certificate_to_json(cert));
  std::set<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.insert(it.key());
  CHECK(keys == std::set<std::string>{"passed", "points", "min_value", "min_at", "M",
                                      "r", "eps", "seconds"});
  CHECK(doc["passed"] == true);
  CHECK(doc["points"] == 123456);
  REQUIRE(doc["min_at"].size() == 3);
  CHECK(doc["min_at"][2] == 0.25);
  CHECK(doc["eps"] == 0x1p-52);
}

TEST_CASE("order report serialization") {
  OrderReport report;
  report.rows = {{1.0, 0.5}, {0.5, 0.03125}};
  report.slope = 4.0;
  report.intercept = -0.7;
  report.residual = 0.01;
  const auto doc = nlohmann::json::parse(order_to_json(report));
  CHECK(doc["slope"] == 4.0);
  CHECK(doc["intercept"] == -0.7);
  CHECK(doc["residual"] == 0.01);
  CHECK(doc.size() == 3);

  const std::string csv = order_rows_to_csv(report);
  CHECK(csv.rfind("h,error,log_h,log_error\n", 0) == 0);
  CHECK(csv.find("1,0.5,0,") != std::string::npos);
}

TEST_CASE("polyline CSV round-trips") {
  const std::vector<Vec> pts{Vec{0.0, 1.0, 2.0}, Vec{0.5, -1.0, 3.0}};
  const std::string text = polyline_to_csv(pts);
  CHECK(text.rfind("x0,x1,x2\n", 0) == 0);
  const std::vector<Vec> back = polyline_from_csv(text);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == pts[0]);
  CHECK(back[1] == pts[1]);
  CHECK_THROWS_WITH_AS(polyline_from_csv("x0,x1\n1,bad\n"), "row 0: bad number 'bad'",
                       IoError);
}

TEST_CASE("SVG drawing is planar-only, fitted, and flips the vertical axis") {
  const std::vector<Vec> pts{Vec{0.0, 0.0}, Vec{4.0, 2.0}};
  const std::string svg = polyline_to_svg(pts);
  CHECK(svg.find("viewBox=\"") != std::string::npos);
  CHECK(svg.find("M 0 -0 L 4 -2") != std::string::npos);
  CHECK(svg.find("stroke-width=\"0.02\"") != std::string::npos);  // 0.5% of 4
  CHECK_THROWS_AS(polyline_to_svg({Vec{0.0, 0.0, 0.0}, Vec{1.0, 1.0, 1.0}}),
                  ParameterError);
}

TEST_CASE("whole-file helpers") {
  const std::string path = "/tmp/hermite_io_test.txt";
  write_text_file(path, "payload\n");
  CHECK(read_text_file(path) == "payload\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_text_file("/nonexistent/definitely/missing.txt"), IoError);
  CHECK_THROWS_AS(write_text_file("/nonexistent/definitely/missing.txt", "x"), IoError);
}
