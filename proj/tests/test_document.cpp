#include "doctest.h"

#include "orbitrig/constructions.hpp"
#include "orbitrig/document.hpp"
#include "orbitrig/errors.hpp"

#include "json.hpp"

#include <numeric>
#include <random>
#include <regex>

using namespace orbitrig;
using json = nlohmann::json;

namespace {

Document doc_of(const std::string& name) {
  auto ex = catalog(name);
  return Document{ex.framework, ex.tensegrity};
}

ErrorKind parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document parsed unexpectedly");
  return ErrorKind::Internal;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

// Renumber vertices by sigma (0-based, old -> new) in a serialized document.
json relabel(const json& doc, const std::vector<int>& sigma) {
  json out = doc;
  const int n = doc["vertices"];
  for (auto& e : out["edges"]) {
    e[0] = sigma[e[0].get<int>() - 1] + 1;
    e[1] = sigma[e[1].get<int>() - 1] + 1;
  }
  for (auto& perm : out["action"]["generators"]) {
    json moved = perm;
    for (int i = 0; i < n; ++i) moved[sigma[i]] = sigma[perm[i].get<int>() - 1] + 1;
    perm = moved;
  }
  json pts = doc["configuration"]["full"];
  for (int i = 0; i < n; ++i) out["configuration"]["full"][sigma[i]] = pts[i];
  if (out.contains("tensegrity")) {
    for (auto& [role, list] : out["tensegrity"].items()) {
      for (auto& e : list) {
        e[0] = sigma[e[0].get<int>() - 1] + 1;
        e[1] = sigma[e[1].get<int>() - 1] + 1;
      }
    }
  }
  return out;
}

json scalar_summary(const json& report) {
  json s;
  s["counts"] = report["counts"];
  s["rank"] = report["rank"];
  s["dims"] = report["dims"];
  for (const auto& v : report["verdicts"]) s["verdicts"].push_back({v["rule"], v["conclusion"]});
  s["orbit_count"] = report["orbits"]["edge_orbits"].size();
  return s;
}

}  // namespace

TEST_CASE("serialize then parse reproduces every catalog entry and its report") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto doc = doc_of(name);
    const auto text = serialize_document(doc);
    const auto back = parse_document(text);
    CHECK(serialize_document(back) == text);
    CHECK(back.framework.config().points == doc.framework.config().points);
    CHECK(back.framework.action().perms == doc.framework.action().perms);
    CHECK(analyze_report(back, {}) == analyze_report(doc, {}));
  }
}

TEST_CASE("report is stable under vertex relabeling") {
  std::mt19937_64 rng(7);
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto doc = doc_of(name);
    const json original = json::parse(serialize_document(doc));
    const auto base = scalar_summary(json::parse(analyze_report(doc, {})));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> sigma(original["vertices"].get<int>());
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin(), sigma.end(), rng);
      const auto moved = parse_document(relabel(original, sigma).dump());
      CHECK(scalar_summary(json::parse(analyze_report(moved, {}))) == base);
    }
  }
}

TEST_CASE("k22 with a mirror reports the expected counts and verdicts") {
  const auto report = json::parse(analyze_report(doc_of("k22-cs-a"), {}));
  CHECK(report["counts"]["r"] == 2);
  CHECK(report["counts"]["c"] == 4);
  CHECK(report["counts"]["m"] == 1);
  CHECK(report["dims"]["fully_symmetric_flexes"] == 1);
  CHECK(report["certificates"]["flexes"].size() == 1);
  CHECK(report["certificates"]["flexes"][0]["lifted"].size() == 8);
  bool flex_certified = false;
  for (const auto& v : report["verdicts"]) {
    if (v["rule"] == "rank") flex_certified = v["conclusion"] == "flex-certified";
  }
  CHECK(flex_certified);
  CHECK(report["warnings"].empty());
}

TEST_CASE("tensegrity analysis of the cube with fourfold symmetry") {
  AnalyzeOptions opts;
  opts.tensegrity = true;
  const auto report = json::parse(analyze_report(doc_of("cube-c4v"), opts));
  CHECK(report["tensegrity"]["outcome"] == "feasible");
  CHECK(report["tensegrity"]["underlying_rigid"] == false);
  CHECK(report["tensegrity"]["tensegrity_rigid"] == false);
  CHECK(report["tensegrity"].contains("witness"));
}

TEST_CASE("generic option resamples deterministically") {
  AnalyzeOptions opts;
  opts.generic = true;
  opts.seed = 3;
  const auto doc = doc_of("k22-cs-a");
  const auto a = analyze_report(doc, opts);
  CHECK(a == analyze_report(doc, opts));
  const auto report = json::parse(a);
  CHECK(report["framework"]["generic"] == true);
  CHECK(report["warnings"].size() == 1);
}

TEST_CASE("named groups, element actions and representative placements") {
  const std::string text = R"({
    "dimension": 2, "vertices": 4,
    "edges": [[1,3],[1,4],[2,3],[2,4]],
    "group": {"schoenflies": "Cs"},
    "action": {"elements": [
      {"matrix": [[1,0],[0,1]], "permutation": [1,2,3,4]},
      {"matrix": [[-1,0],[0,1]], "permutation": [2,1,4,3]}]},
    "configuration": {"representatives": {"1": [1, 2], "3": [3, 4]}}
  })";
  const auto doc = parse_document(text);
  CHECK(doc.framework.config().point(1).isApprox(Vector{{-1.0, 2.0}}));
  CHECK(doc.framework.config().point(3).isApprox(Vector{{-3.0, 4.0}}));
  const auto report = json::parse(analyze_report(doc, {}));
  CHECK(report["counts"]["c"] == 4);
}

TEST_CASE("schema and validation failures are distinguished") {
  CHECK(parse_failure("{") == ErrorKind::Schema);
  CHECK(parse_failure("[]") == ErrorKind::Schema);
  CHECK(parse_failure(R"({"dimension": 2})") == ErrorKind::Schema);
  const json good = json::parse(serialize_document(doc_of("k22-c2")));

  json bad_coord = good;
  bad_coord["configuration"]["full"][0][0] = "one";
  CHECK(parse_failure(bad_coord.dump()) == ErrorKind::Schema);

  json short_config = good;
  short_config["configuration"]["full"].erase(0);
  CHECK(parse_failure(short_config.dump()) == ErrorKind::Schema);

  json loop = good;
  loop["edges"].push_back({2, 2});
  CHECK(parse_failure(loop.dump()) == ErrorKind::Schema);

  json broken_perm = good;
  broken_perm["action"]["generators"][0] = {1, 1, 2, 3};
  CHECK(parse_failure(broken_perm.dump()) == ErrorKind::Validation);

  json moved = good;
  moved["configuration"]["full"][0][0] = 0.25;
  try {
    parse_document(moved.dump());
    FAIL("expected a validation failure");
  } catch (const ValidationError& e) {
    bool equivariance = false;
    for (const auto& v : e.violations()) equivariance |= v.kind == Violation::Kind::Equivariance;
    CHECK(equivariance);
  }

  json bad_tensegrity = good;
  bad_tensegrity["tensegrity"] = {{"cables", {{1, 3}}}};
  CHECK(parse_failure(bad_tensegrity.dump()) == ErrorKind::Validation);
}

TEST_CASE("tolerance override applies to the parsed framework") {
  const auto text = serialize_document(doc_of("k22-c2"));
  const auto doc = parse_document(text, Tolerance{1e-6, 1e-10});
  CHECK(doc.framework.tolerance().rel == doctest::Approx(1e-6));
}

TEST_CASE("svg shows joints, bars, mirror and velocity arrows") {
  const auto fw = doc_of("k22-cs-a").framework;
  const auto motion = flex_motion(fw);
  REQUIRE(motion.has_value());
  const auto svg = draw_svg(fw, motion);
  CHECK(count(svg, "class=\"joint\"") == 4);
  CHECK(count(svg, "class=\"bar\"") == 4);
  CHECK(count(svg, "class=\"mirror\"") == 1);
  CHECK(count(svg, "class=\"velocity\"") == 4);
  CHECK(count(svg, "class=\"center\"") == 0);
  CHECK(svg == draw_svg(fw, motion));

  const auto rotated = doc_of("k22-c2").framework;
  CHECK(count(draw_svg(rotated), "class=\"center\"") == 1);
  CHECK(count(draw_svg(rotated), "class=\"velocity\"") == 0);
}

TEST_CASE("drawing a spatial framework is unsupported") {
  try {
    draw_svg(doc_of("octahedron-c2").framework);
    FAIL("expected Unsupported");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}
