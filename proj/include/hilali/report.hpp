#pragma once

// Named checks over a model, shared by the command line and the corpus
// runner. Every check produces a JSON document; rendering is separate.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hilali/model.hpp"

namespace hilali {

/// Insertion-ordered, so reports keep the field order they are built in.
using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kReportFormat = "hilali-report/1";

struct RunOptions {
  std::uint64_t seed = 1;
  int samples = 5;
  std::optional<int> maxDegree;
  bool assumeElliptic = false;
};

/// Values double as process exit codes.
enum class Outcome { Ok = 0, Violated = 1, InputFailure = 2, Indeterminate = 3 };

struct CheckResult {
  Json data;
  Outcome outcome = Outcome::Ok;
  /// One line for standard error when the outcome is not Ok.
  std::string diagnostic;
};

/// validate, classify, apply, cohomology, elliptic, hilali, tor, regseq,
/// crosscheck, deform, reduce, cocycle.
const std::vector<std::string>& checkNames();
bool isCheck(std::string_view name);

/// Never throws for engine errors: they are folded into the result as
/// {"error": "input" | "indeterminate" | "contradiction", "message": ...}.
/// `args` may carry "expression" (apply, cocycle) and "generators" (regseq).
CheckResult runCheck(std::string_view check, const Model& model, const Json& args,
                     const RunOptions& options);

/// Wraps a result with command, model name, seed and engine version. Wall
/// time is deliberately absent so reports are reproducible byte for byte.
Json makeReport(std::string_view command, const Model& model, const RunOptions& options,
                const CheckResult& result);

/// Indented key/value rendering; arrays of flat records become tables.
std::string renderText(const Json& doc);

}  // namespace hilali
