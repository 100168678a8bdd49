#include "doctest.h"

#include <fstream>
#include <random>

#include "hilali/corpus.hpp"
#include "hilali/errors.hpp"

#include "support/fixtures.hpp"

using namespace hilali;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("hilali-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

Json readJson(const fs::path& p) {
  std::ifstream in(p);
  return Json::parse(in);
}

void writeJson(const fs::path& p, const Json& doc) { std::ofstream(p) << doc.dump(2); }

Json minimalManifest() {
  return Json{{"format", kManifestFormat},
              {"model", "models/n1r1.model"},
              {"expectations",
               Json::array({Json{{"id", "a"},
                                 {"check", "tor"},
                                 {"expected", {{"total", 4}}},
                                 {"provenance", "immediate"},
                                 {"anchor", "tor-cohomology-agreement"},
                                 {"claim", "total Tor"}}})}};
}

}  // namespace

TEST_CASE("expected values match as a subset") {
  Json actual = Json::parse(R"({"a": 1, "b": {"c": [1, 2], "d": true}})");
  CHECK(diffExpected(Json::parse(R"({"a": 1})"), actual).empty());
  CHECK(diffExpected(Json::parse(R"({"b": {"d": true}})"), actual).empty());
  auto diff = diffExpected(Json::parse(R"({"b": {"c": [1, 3]}})"), actual);
  REQUIRE(diff.size() == 1);
  CHECK(diff[0].find("b.c") != std::string::npos);
  CHECK(diffExpected(Json::parse(R"({"z": 0})"), actual).size() == 1);
  CHECK(diffExpected(Json::parse(R"({"a": 1, "z": 0, "b": {"d": false}})"), actual).size() == 2);
}

TEST_CASE("manifest schema") {
  CHECK_NOTHROW(validateManifest(minimalManifest()));
  Json m = minimalManifest();
  m["format"] = "other";
  CHECK_THROWS_AS(validateManifest(m), InputError);
  m = minimalManifest();
  m.erase("expectations");
  CHECK_THROWS_AS(validateManifest(m), InputError);
  m = minimalManifest();
  m["expectations"][0]["provenance"] = "folklore";
  CHECK_THROWS_AS(validateManifest(m), InputError);
  m = minimalManifest();
  m["expectations"][0]["check"] = "nonsense";
  CHECK_THROWS_AS(validateManifest(m), InputError);
  m = minimalManifest();
  m["expectations"][0].erase("anchor");
  CHECK_THROWS_AS(validateManifest(m), InputError);
}

TEST_CASE("a corrupted expectation turns exactly one entry red") {
  TempDir tmp;
  fs::create_directories(tmp.path / "models");
  fs::copy_file(fixtures::corpusDir() / "models" / "n1r1.model", tmp.path / "models" / "n1r1.model");
  Json manifest = readJson(fixtures::corpusDir() / "n1r1.json");
  std::string anchor;
  for (auto& e : manifest["expectations"])
    if (e["id"] == "n1r1-tor") {
      e["expected"]["dims"]["1"] = 3;
      anchor = e["anchor"].get<std::string>();
    }
  REQUIRE_FALSE(anchor.empty());
  writeJson(tmp.path / "n1r1.json", manifest);

  CorpusSummary s = corpusRun(tmp.path, RunOptions{}, 2);
  CHECK(s.manifests == 1);
  CHECK(s.failures() == 1);
  for (const auto& r : s.results) {
    if (r.passed) continue;
    CHECK(r.id == "n1r1-tor");
    CHECK(r.anchor == anchor);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].find("dims.1") != std::string::npos);
  }
  CHECK(renderText(s).find("FAIL") != std::string::npos);
}

TEST_CASE("corpus directory edge cases") {
  TempDir tmp;
  CorpusSummary s = corpusRun(tmp.path, RunOptions{});
  CHECK(s.results.empty());
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("0 expectations") != std::string::npos);
  CHECK_THROWS_AS(corpusRun(tmp.path / "missing", RunOptions{}), InputError);

  Json broken = minimalManifest();
  broken["model"] = "models/absent.model";
  writeJson(tmp.path / "broken.json", broken);
  CHECK_THROWS_AS(corpusRun(tmp.path, RunOptions{}), InputError);
}

TEST_CASE("explain") {
  std::string text = explain("branch-inequality", fixtures::corpusDir());
  CHECK(text.find("corpus-level") != std::string::npos);
  CHECK(text.find("quadrics-branch") != std::string::npos);
  CHECK_THROWS_AS(explain("no-such-anchor", fixtures::corpusDir()), InputError);
  for (const auto& a : anchors()) CHECK_NOTHROW(explain(a.id, fixtures::corpusDir()));
}

TEST_CASE("reports are reproducible") {
  Model m = fixtures::corpusModel("n1r1");
  RunOptions o;
  o.seed = 3;
  for (const char* check : {"tor", "deform", "reduce", "hilali"}) {
    CAPTURE(check);
    Json a = makeReport(check, m, o, runCheck(check, m, Json::object(), o));
    Json b = makeReport(check, m, o, runCheck(check, m, Json::object(), o));
    CHECK(a.dump() == b.dump());
    CHECK(a["exit"] == 0);
    CHECK_FALSE(a.contains("wallTime"));
  }
  CheckResult bad = runCheck("hilali", fixtures::corpusModel("linear"), Json::object(), o);
  CHECK(bad.outcome == Outcome::InputFailure);
  CHECK(bad.data["error"] == "input");
}
