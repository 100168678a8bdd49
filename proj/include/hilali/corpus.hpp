#pragma once

// Golden-value manifests over model files, and the claim index behind
// `explain`.
//
// Manifest documents, format tag "hilali-manifest/1":
//   { "format": "hilali-manifest/1",
//     "model": "models/n1r1.model",           // relative to the manifest
//     "expectations": [
//       { "id": "n1r1-tor", "check": "tor", "args": {...},
//         "expected": {"dims": {"0": 2, "1": 2}},
//         "provenance": "published" | "immediate" | "computed",
//         "anchor": "tor-end-bounds", "claim": "..." } ] }
//
// `expected` is matched against the check's result as a subset: every key
// it names must be present with an equal value. `args` may override seed,
// samples, maxDegree and assumeElliptic.

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hilali/report.hpp"

namespace hilali {

inline constexpr const char* kManifestFormat = "hilali-manifest/1";

struct ExpectationOutcome {
  std::string manifest;
  std::string id;
  std::string check;
  std::string anchor;
  std::string provenance;
  bool passed = false;
  std::vector<std::string> mismatches;
};

struct CorpusSummary {
  std::size_t manifests = 0;
  std::vector<ExpectationOutcome> results;
  std::set<std::string> anchors;
  std::vector<std::string> warnings;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Subset match; returns one line per differing path.
std::vector<std::string> diffExpected(const Json& expected, const Json& actual,
                                      const std::string& path = "");

/// Throws InputError on schema violations.
void validateManifest(const Json& manifest);

/// Runs every *.json manifest in `directory` (not recursive), `jobs`
/// manifests at a time. Results are in file-name order whatever the
/// interleaving. Throws InputError for a missing directory, an unreadable
/// model or a malformed manifest.
CorpusSummary corpusRun(const std::filesystem::path& directory, const RunOptions& defaults, int jobs = 1);

Json toJson(const CorpusSummary& summary);
std::string renderText(const CorpusSummary& summary);

struct Anchor {
  std::string id;
  std::string claim;
  std::string operation;
  std::string command;
};

const std::vector<Anchor>& anchors();

/// Claim, operation, command and the corpus expectations tagged with the
/// anchor. Unknown anchors raise InputError listing the known ones.
std::string explain(std::string_view anchor, const std::filesystem::path& corpusDirectory);

}  // namespace hilali
