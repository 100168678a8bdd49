#include "hilali/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "hilali/errors.hpp"

namespace hilali {

using json = Json;
namespace fs = std::filesystem;

namespace {

const std::set<std::string> kProvenance{"published", "immediate", "computed"};

bool knownAnchor(const std::string& id) {
  const auto& all = anchors();
  return std::any_of(all.begin(), all.end(), [&](const Anchor& a) { return a.id == id; });
}

json readJson(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

RunOptions optionsFor(const json& args, RunOptions o) {
  if (args.contains("seed")) o.seed = args["seed"].get<std::uint64_t>();
  if (args.contains("samples")) o.samples = args["samples"].get<int>();
  if (args.contains("maxDegree")) o.maxDegree = args["maxDegree"].get<int>();
  if (args.contains("assumeElliptic")) o.assumeElliptic = args["assumeElliptic"].get<bool>();
  return o;
}

std::vector<ExpectationOutcome> runManifest(const fs::path& file, const RunOptions& defaults) {
  json manifest = readJson(file);
  try {
    validateManifest(manifest);
  } catch (const InputError& e) {
    throw InputError(file.filename().string() + ": " + e.what());
  }
  Model model = loadModel(file.parent_path() / manifest["model"].get<std::string>());
  std::vector<ExpectationOutcome> out;
  for (const auto& ex : manifest["expectations"]) {
    json args = ex.value("args", json::object());
    CheckResult r = runCheck(ex["check"].get<std::string>(), model, args, optionsFor(args, defaults));
    ExpectationOutcome o;
    o.manifest = file.filename().string();
    o.id = ex["id"];
    o.check = ex["check"];
    o.anchor = ex["anchor"];
    o.provenance = ex["provenance"];
    o.mismatches = diffExpected(ex["expected"], r.data);
    o.passed = o.mismatches.empty();
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

std::size_t CorpusSummary::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const ExpectationOutcome& r) { return !r.passed; }));
}

std::vector<std::string> diffExpected(const json& expected, const json& actual, const std::string& path) {
  std::vector<std::string> out;
  const std::string where = path.empty() ? "result" : path;
  if (expected.is_object()) {
    if (!actual.is_object()) return {where + ": expected an object, got " + actual.dump()};
    for (const auto& [k, v] : expected.items()) {
      std::string sub = path.empty() ? k : path + "." + k;
      if (!actual.contains(k)) {
        out.push_back(sub + ": missing" + (actual.contains("error") ? " (" + actual["error"].dump() + ": " + actual.value("message", "") + ")" : ""));
        continue;
      }
      auto more = diffExpected(v, actual[k], sub);
      out.insert(out.end(), more.begin(), more.end());
    }
    return out;
  }
  if (expected != actual) out.push_back(where + ": expected " + expected.dump() + ", got " + actual.dump());
  return out;
}

void validateManifest(const json& m) {
  if (!m.is_object()) throw InputError("manifest is not an object");
  if (m.value("format", "") != kManifestFormat)
    throw InputError(std::string("manifest format must be \"") + kManifestFormat + "\"");
  if (!m.contains("model") || !m["model"].is_string()) throw InputError("manifest needs a string 'model'");
  if (!m.contains("expectations") || !m["expectations"].is_array())
    throw InputError("manifest needs an 'expectations' array");
  std::set<std::string> ids;
  for (const auto& ex : m["expectations"]) {
    for (const char* key : {"id", "check", "provenance", "anchor"})
      if (!ex.contains(key) || !ex[key].is_string())
        throw InputError(std::string("expectation needs a string '") + key + "'");
    std::string id = ex["id"];
    if (!ids.insert(id).second) throw InputError("duplicate expectation id '" + id + "'");
    if (!isCheck(ex["check"].get<std::string>()))
      throw InputError(id + ": unknown check '" + ex["check"].get<std::string>() + "'");
    if (!kProvenance.count(ex["provenance"].get<std::string>()))
      throw InputError(id + ": provenance must be published, immediate or computed");
    if (!knownAnchor(ex["anchor"].get<std::string>()))
      throw InputError(id + ": unknown anchor '" + ex["anchor"].get<std::string>() + "'");
    if (!ex.contains("expected") || !ex["expected"].is_object()) throw InputError(id + ": 'expected' must be an object");
    if (ex.contains("args") && !ex["args"].is_object()) throw InputError(id + ": 'args' must be an object");
  }
}

CorpusSummary corpusRun(const fs::path& directory, const RunOptions& defaults, int jobs) {
  if (!fs::is_directory(directory)) throw InputError("corpus directory " + directory.string() + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::vector<ExpectationOutcome>> perFile(files.size());
  std::vector<std::string> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        perFile[i] = runManifest(files[i], defaults);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(files.size(), 1));
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& e : errors)
    if (!e.empty()) throw InputError(e);

  CorpusSummary s;
  s.manifests = files.size();
  for (auto& chunk : perFile)
    for (auto& r : chunk) {
      s.anchors.insert(r.anchor);
      s.results.push_back(std::move(r));
    }
  if (s.results.empty()) s.warnings.push_back("0 expectations in " + directory.string());
  return s;
}

json toJson(const CorpusSummary& s) {
  json results = json::array();
  for (const auto& r : s.results) {
    json row = {{"manifest", r.manifest}, {"id", r.id},       {"check", r.check},
                {"anchor", r.anchor},     {"provenance", r.provenance}, {"passed", r.passed}};
    if (!r.passed) row["mismatches"] = r.mismatches;
    results.push_back(row);
  }
  return {{"format", "hilali-corpus/1"},
          {"engine", kEngineVersion},
          {"manifests", s.manifests},
          {"expectations", s.results.size()},
          {"failures", s.failures()},
          {"anchors", s.anchors},
          {"warnings", s.warnings},
          {"results", results}};
}

std::string renderText(const CorpusSummary& s) {
  std::ostringstream os;
  for (const auto& r : s.results) {
    os << (r.passed ? "ok   " : "FAIL ") << r.id << "  [" << r.check << ", " << r.anchor << ", " << r.provenance << "]\n";
    for (const auto& m : r.mismatches) os << "       " << m << '\n';
  }
  os << s.results.size() << " expectations in " << s.manifests << " manifests, " << s.failures() << " failed\n";
  os << "anchors:";
  for (const auto& a : s.anchors) os << ' ' << a;
  os << '\n';
  return os.str();
}

const std::vector<Anchor>& anchors() {
  static const std::vector<Anchor> all{
      {"hilali-inequality", "dim V <= dim H(ΛV, d) for an elliptic minimal model", "hilaliVerdict",
       "hilali hilali MODEL"},
      {"example-coboundaries",
       "in exact-powers, 2 x1^10 = d(x1^4 y1 + x1 y2 - x2 y3) and 2 x2^4 = d(x2^2 y1 + x2 y2 - x1^5 y3)",
       "Model::apply", "hilali apply MODEL EXPR"},
      {"example-not-regular",
       "no pair of the exact-powers relations is a regular sequence and the two-generator sub-models are not "
       "elliptic",
       "isRegularSequence, certifyElliptic", "hilali regseq MODEL --generators y1,y2"},
      {"augmentation-tor", "Tor^k_S(Q, Q) has dimension binom(r, k)", "torTable", "hilali tor MODEL"},
      {"tor-cohomology-agreement",
       "for a pure elliptic model dim H equals the total dimension of Tor_S(M, Q), with lower degree matching "
       "homological degree",
       "torViaModelCrossCheck", "hilali crosscheck MODEL"},
      {"tor-end-bounds", "Tor_0 and Tor_r of M over S both have dimension at least n + 1", "torBoundsCheck",
       "hilali tor MODEL"},
      {"length-bound", "when r = 0 the quotient M has length at least 2n", "torBoundsCheck", "hilali tor MODEL"},
      {"duality-pairing", "M has a one-dimensional socle and the multiplication pairing into it is perfect",
       "dualityPairing", "hilali tor MODEL"},
      {"tor-semicontinuity",
       "the family R/(P_i + t x_i) is flat and dim Tor^k of a generic fiber is at most that of the special fiber",
       "flatnessCheck, torSemicontinuityCheck", "hilali deform MODEL"},
      {"cohomology-semicontinuity", "dim H(ΛW, d + ξδ) <= dim H(ΛW, d) for generic ξ", "perturbAndReduce",
       "hilali reduce MODEL"},
      {"reduction-chain",
       "cancelling an even generator doubles dim H on the tensor side and collapses to the quotient model; after "
       "n steps dim H = 2^(n+r)",
       "perturbAndReduce", "hilali reduce MODEL"},
      {"power-bound", "a hyperelliptic elliptic model has dim H >= 2^r", "perturbAndReduce", "hilali reduce MODEL"},
      {"euler-signs", "chi >= 0, chi_pi <= 0, and chi_pi < 0 exactly when chi = 0", "eulerCharacteristics",
       "hilali cohomology MODEL"},
      {"branch-inequality",
       "either 1 + n + binom(n+1, 2) - (n + r) >= n + r/2 or 2^r >= 2n + r, otherwise dim H is computed in full; "
       "corpus-level arithmetic inside the hilali command, not a separate operation",
       "branch logic of hilaliVerdict", "hilali hilali MODEL"},
      {"quadric-classes",
       "in quadrics-n3r3, x3 y2 y3 + x1 y3 y5 - x2 y2 y5 and x3 y1 y2 - x2 y1 y4 + x1 y2 y4 are cocycles, one of "
       "them non-exact, and dim H >= 10 >= 9 = dim V",
       "isCocycle, isCoboundary", "hilali cocycle MODEL EXPR"},
      {"square-zero", "d o d = 0 on every generator", "checkDifferential", "hilali validate MODEL"},
      {"classification", "minimal, pure and hyperelliptic flags with n and r", "classify", "hilali classify MODEL"},
      {"ellipticity", "a hyperelliptic model is elliptic when its pure-part relations cut out a finite quotient",
       "certifyElliptic", "hilali hilali MODEL"},
  };
  return all;
}

std::string explain(std::string_view anchor, const fs::path& corpusDirectory) {
  const auto& all = anchors();
  auto it = std::find_if(all.begin(), all.end(), [&](const Anchor& a) { return a.id == anchor; });
  if (it == all.end()) {
    std::string known;
    for (const auto& a : all) known += (known.empty() ? "" : ", ") + a.id;
    throw InputError("unknown anchor '" + std::string(anchor) + "'; known anchors: " + known);
  }
  std::ostringstream os;
  os << "anchor:    " << it->id << '\n'
     << "claim:     " << it->claim << '\n'
     << "operation: " << it->operation << '\n'
     << "command:   " << it->command << '\n';
  std::vector<std::string> covering;
  if (fs::is_directory(corpusDirectory)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpusDirectory))
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      json m = readJson(f);
      for (const auto& ex : m.value("expectations", json::array()))
        if (ex.value("anchor", "") == anchor)
          covering.push_back(ex.value("id", "?") + " (" + f.filename().string() + ", " + ex.value("check", "?") + ")");
    }
  }
  os << "corpus entries: " << covering.size() << '\n';
  for (const auto& c : covering) os << "  " << c << '\n';
  return os.str();
}

}  // namespace hilali
