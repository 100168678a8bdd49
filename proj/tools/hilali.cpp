#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hilali/corpus.hpp"
#include "hilali/errors.hpp"
#include "hilali/report.hpp"

#ifndef HILALI_DEFAULT_CORPUS
#define HILALI_DEFAULT_CORPUS "corpus"
#endif

namespace {

using hilali::Json;

struct Settings {
  hilali::RunOptions run;
  int maxDegree = -1;
  int jobs = 1;
  std::string format = "text";
  std::string modelPath;
  std::string expression;
  std::vector<std::string> generators;
  std::string corpusDir = HILALI_DEFAULT_CORPUS;
  std::string anchor;
};

void emit(const Json& doc, const std::string& text, const std::string& format) {
  if (format == "machine") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

int runModelCommand(const std::string& command, const Settings& s) {
  hilali::Model model;
  try {
    model = hilali::loadModel(s.modelPath);
  } catch (const hilali::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  Json args = Json::object();
  if (!s.expression.empty()) args["expression"] = s.expression;
  if (!s.generators.empty()) args["generators"] = s.generators;

  hilali::CheckResult result = hilali::runCheck(command, model, args, s.run);
  Json report = hilali::makeReport(command, model, s.run, result);
  emit(report, hilali::renderText(report), s.format);
  if (!result.diagnostic.empty()) std::cerr << command << ": " << result.diagnostic << '\n';
  return static_cast<int>(result.outcome);
}

int runCorpus(const Settings& s) {
  hilali::CorpusSummary summary;
  try {
    summary = hilali::corpusRun(s.corpusDir, s.run, s.jobs);
  } catch (const hilali::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  emit(hilali::toJson(summary), hilali::renderText(summary), s.format);
  for (const auto& w : summary.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& r : summary.results)
    if (!r.passed) std::cerr << "mismatch: " << r.id << " (" << r.anchor << ")\n";
  return summary.passed() ? 0 : 1;
}

int runExplain(const Settings& s) {
  try {
    std::cout << hilali::explain(s.anchor, s.corpusDir);
    return 0;
  } catch (const hilali::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sullivan model engine: cohomology, Tor and deformations over the rationals"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--max-degree", s.maxDegree, "Compute cohomology through at least this degree");
  app.add_option("--seed", s.run.seed, "Seed for every randomized search")->capture_default_str();
  app.add_option("--samples", s.run.samples, "Number of generic parameters to sample")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", s.jobs, "Concurrent corpus manifests")->check(CLI::PositiveNumber);
  app.add_flag("--assume-elliptic", s.run.assumeElliptic, "Skip the ellipticity certificate");
  app.add_option("--format", s.format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  struct Spec {
    const char* name;
    const char* help;
  };
  const std::vector<Spec> modelCommands{
      {"validate", "Check degrees and d^2 = 0 on every generator"},
      {"classify", "Minimal, pure and hyperelliptic flags"},
      {"apply", "Apply d to an expression"},
      {"cohomology", "Betti numbers through the formal dimension"},
      {"elliptic", "Ellipticity certificate of a hyperelliptic model"},
      {"hilali", "dim V <= dim H verdict with the branch that bounds it"},
      {"tor", "Tor of the Halperin quotient over the parameter ring"},
      {"regseq", "Whether the pure-part relations form a regular sequence"},
      {"crosscheck", "Compare cohomology with Tor for a pure model"},
      {"deform", "Flatness and Tor semicontinuity of the linear family"},
      {"reduce", "Cancel even generators one at a time by perturbation"},
      {"cocycle", "Test an expression for being a cocycle and a coboundary"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& spec : modelCommands) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    sub->add_option("model", s.modelPath, "Model file")->required()->check(CLI::ExistingFile);
    if (std::string(spec.name) == "apply" || std::string(spec.name) == "cocycle")
      sub->add_option("expression", s.expression, "Expression over the model's generators")->required();
    if (std::string(spec.name) == "regseq")
      sub->add_option("--generators", s.generators, "Odd generators whose differentials form the sequence")
          ->delimiter(',');
    subs.push_back(sub);
  }
  CLI::App* corpus = app.add_subcommand("corpus", "Run every manifest in a corpus directory");
  corpus->add_option("directory", s.corpusDir, "Corpus directory")->capture_default_str();
  CLI::App* explainCmd = app.add_subcommand("explain", "Show a claim, its command and the corpus entries covering it");
  explainCmd->add_option("anchor", s.anchor, "Claim anchor")->required();
  explainCmd->add_option("--corpus", s.corpusDir, "Corpus directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (s.maxDegree >= 0) s.run.maxDegree = s.maxDegree;

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  if (corpus->parsed()) {
    code = runCorpus(s);
  } else if (explainCmd->parsed()) {
    code = runExplain(s);
  } else {
    for (CLI::App* sub : subs)
      if (sub->parsed()) code = runModelCommand(sub->get_name(), s);
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall time: " << seconds << " s\n";
  return code;
}
