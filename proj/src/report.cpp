#include "hilali/report.hpp"

#include <algorithm>
#include <sstream>

#include "hilali/cohomology.hpp"
#include "hilali/deformation.hpp"
#include "hilali/errors.hpp"
#include "hilali/koszul_tor.hpp"

namespace hilali {

using json = Json;

namespace {

template <class Map>
json intMap(const Map& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

json torJson(const TorTable& t) { return json{{"r", t.r}, {"dims", intMap(t.dims)}, {"total", t.total}}; }

const char* statusName(EllipticStatus s) {
  switch (s) {
    case EllipticStatus::Elliptic: return "elliptic";
    case EllipticStatus::NotElliptic: return "not-elliptic";
    case EllipticStatus::NotCertified: return "not-certified";
  }
  return "?";
}

void requireValid(const Model& model) {
  ValidationReport v = checkDifferential(model);
  if (!v.passed()) throw InputError("d fails on generator " + v.firstFailure());
}

std::string argString(const json& args, const char* key) {
  if (!args.contains(key) || !args[key].is_string())
    throw InputError(std::string("missing string argument '") + key + "'");
  return args[key].get<std::string>();
}

/// The pure model the Koszul machinery runs on.
Model pureFor(const Model& model) {
  requireValid(model);
  Classification c = classify(model);
  if (c.isPure) return model;
  if (c.isHyperelliptic) return purePart(model);
  throw InputError("model '" + model.name() + "' is not hyperelliptic");
}

CheckResult validateCheck(const Model& model) {
  ValidationReport v = checkDifferential(model);
  json gens = json::array();
  for (const auto& g : v.entries)
    gens.push_back({{"name", g.generator}, {"degreeOk", g.degreeOk}, {"squareZero", g.squareZero}});
  CheckResult out;
  out.data = {{"passed", v.passed()}, {"minimal", v.passed() && checkMinimal(model)}, {"generators", gens}};
  if (!v.passed()) {
    std::string failing = v.firstFailure();
    out.data["firstFailure"] = failing;
    out.outcome = Outcome::InputFailure;
    for (const auto& g : v.entries)
      if (g.generator == failing) out.diagnostic = "generator " + failing + ": " + g.detail;
  }
  return out;
}

CheckResult classifyCheck(const Model& model) {
  requireValid(model);
  Classification c = classify(model);
  CheckResult out;
  out.data = {{"dimV", model.dimV()}, {"minimal", c.isMinimal}, {"pure", c.isPure},
              {"hyperelliptic", c.isHyperelliptic}, {"n", c.n}, {"r", c.r}};
  return out;
}

CheckResult applyCheck(const Model& model, const json& args) {
  Element e = parseExpression(argString(args, "expression"), model.universe());
  CheckResult out;
  out.data = {{"expression", toString(e)}, {"result", toString(model.apply(e))}};
  return out;
}

CheckResult cohomologyCheck(const Model& model, const RunOptions& options) {
  requireValid(model);
  BettiTable t = completeBetti(model, options.maxDegree);
  json rows = json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"degree", row.degree}, {"chain", row.chainDim}, {"rankOut", row.rankOut}, {"betti", row.betti}});
  CheckResult out;
  out.data = {{"formalDimension", t.formalDimension}, {"computedThrough", t.maxDegreeComputed},
              {"complete", t.complete}, {"totalDim", t.totalDim}, {"betti", intMap(t.dims)}, {"rows", rows}};
  if (t.complete) {
    EulerCharacteristics e = eulerCharacteristics(model, t);
    out.data["chi"] = e.chi;
    out.data["chiPi"] = e.chiPi;
  }
  return out;
}

CheckResult ellipticCheck(const Model& model) {
  requireValid(model);
  EllipticityCertificate cert = certifyElliptic(model);
  CheckResult out;
  out.data = {{"status", statusName(cert.status)}, {"elliptic", cert.elliptic},
              {"formalDimensionBound", cert.formalDimensionBound}, {"evidence", cert.evidence}};
  return out;
}

CheckResult hilaliCheck(const Model& model, const RunOptions& options) {
  HilaliVerdict v = hilaliVerdict(model, {options.assumeElliptic, options.maxDegree});
  CheckResult out;
  out.data = {{"dimV", v.dimV},
              {"dimH", v.dimH},
              {"holds", v.holds},
              {"n", v.n},
              {"r", v.r},
              {"certificate", statusName(v.certificate.status)},
              {"betti", intMap(v.table.dims)},
              {"chi", v.euler.chi},
              {"chiPi", v.euler.chiPi},
              {"signsOk", v.signsOk()},
              {"branch", toString(v.branch)},
              {"branchBound", v.branchBound},
              {"branchConsistent", v.branchConsistent}};
  if (v.quadraticClasses) out.data["quadraticClasses"] = *v.quadraticClasses;
  if (!v.holds || !v.signsOk() || !v.branchConsistent) {
    out.outcome = Outcome::Violated;
    out.diagnostic = "verdict fails for '" + model.name() + "'";
  }
  return out;
}

CheckResult torCheck(const Model& model, const RunOptions& options) {
  Model pure = pureFor(model);
  HalperinBasis h = halperinBasis(pure, {options.seed, 64, {}});
  int n = static_cast<int>(pure.evenGenerators().size());
  TorTable t = torTable(h.module, h.structure);
  TorBoundsReport b = torBoundsCheck(h.module, h.structure, n);
  PairingReport p = dualityPairing(h.module, options.seed);
  CheckResult out;
  out.data = torJson(t);
  out.data["n"] = n;
  out.data["length"] = h.module.length();
  out.data["strategy"] = h.strategy;
  out.data["attempts"] = h.attempts;
  out.data["bounds"] = {{"first", b.firstOk}, {"last", b.lastOk}, {"length", b.lengthOk}};
  out.data["pairing"] = {{"socleDimension", p.socleDimension}, {"perfect", p.perfect}};
  if (!b.passed() || !p.perfect) {
    out.outcome = Outcome::Violated;
    out.diagnostic = !b.passed() ? "Tor end bounds fail" : "duality pairing is not perfect: " + p.detail;
  }
  return out;
}

CheckResult regseqCheck(const Model& model, const json& args) {
  Model pure = pureFor(model);
  Universe ring = evenRing(pure);
  std::vector<std::size_t> chosen;
  if (args.contains("generators")) {
    for (const auto& name : args["generators"]) {
      auto i = pure.generators().find(name.get<std::string>());
      if (!i || !pure.generators().isOdd(*i)) throw InputError("'" + name.get<std::string>() + "' is not an odd generator");
      chosen.push_back(*i);
    }
  } else {
    chosen = pure.oddGenerators();
  }
  std::vector<Element> relations;
  json shown = json::array();
  for (std::size_t i : chosen) {
    relations.push_back(toRing(pure.differentialOf(i), ring));
    shown.push_back(toString(relations.back()));
  }
  if (relations.size() != ring->size())
    throw InputError(std::to_string(relations.size()) + " relations in " + std::to_string(ring->size()) + " variables");
  QuotientResult q = quotientBasis(ring, relations);
  if (q.status == QuotientStatus::ProbeExhausted) throw IndeterminateError(q.diagnostic);
  CheckResult out;
  out.data = {{"relations", shown}, {"regular", q.finite()}, {"evidence", q.diagnostic}};
  if (q.finite()) out.data["length"] = q.module->length();
  return out;
}

CheckResult crosscheckCheck(const Model& model, const RunOptions& options) {
  requireValid(model);
  CrossCheckReport c = torViaModelCrossCheck(model, {options.seed, 64, {}});
  CheckResult out;
  out.data = {{"dimH", c.dimH}, {"tor", torJson(c.tor)}, {"lowerGraded", intMap(c.lowerGraded)},
              {"totalsAgree", c.totalsAgree}, {"gradingAgree", c.gradingAgree}, {"strategy", c.strategy}};
  if (!c.passed()) {
    out.outcome = Outcome::Violated;
    out.diagnostic = "cohomology and Tor disagree";
  }
  return out;
}

CheckResult deformCheck(const Model& model, const RunOptions& options) {
  Model pure = pureFor(model);
  HalperinBasis h = halperinBasis(pure, {options.seed, 64, {}});
  std::size_t n = pure.evenGenerators().size();
  std::vector<Element> base(h.zImages.begin(), h.zImages.begin() + static_cast<std::ptrdiff_t>(n));
  ModuleFamily family = ModuleFamily::linearPerturbation(h.module.ring(), base);
  FlatnessReport f = flatnessCheck(family, std::max(options.samples, 2), options.seed);
  SemicontinuityReport s = torSemicontinuityCheck(family, h.structure, options.samples, options.seed);

  json lengths = json::array();
  for (const auto& [xi, len] : f.lengths) {
    json row = {{"xi", toString(xi)}};
    row["length"] = len ? json(*len) : json("infinite");
    lengths.push_back(row);
  }
  json fibers = json::array();
  for (const auto& fb : s.fibers)
    fibers.push_back({{"xi", toString(fb.xi)}, {"dims", intMap(fb.tor.dims)}, {"reduced", fb.reduced},
                      {"dominated", fb.dominated}, {"originBound", fb.originBound},
                      {"pointCount", fb.pointCount}, {"binomial", fb.binomial}});
  CheckResult out;
  out.data = {{"seed", options.seed},
              {"flatness", {{"flat", f.flat}, {"commonLength", f.commonLength}, {"lengths", lengths}}},
              {"semicontinuity",
               {{"special", intMap(s.special.dims)},
                {"fibers", fibers},
                {"violations", s.violations},
                {"patternMismatches", s.patternMismatches},
                {"binomialFibers", s.binomialFibers},
                {"passed", s.passed()}}}};
  if (f.indeterminate || s.indeterminate) {
    out.outcome = Outcome::Indeterminate;
    out.diagnostic = "a fiber could not be certified finite";
  } else if (!f.flat || !s.passed()) {
    out.outcome = Outcome::Violated;
    out.diagnostic = !f.flat ? "family is not flat" : "Tor semicontinuity fails";
  }
  return out;
}

CheckResult reduceCheck(const Model& model, const RunOptions& options) {
  requireValid(model);
  ReductionReport rep = perturbAndReduce(model, options.samples, options.seed);
  json steps = json::array();
  for (const auto& st : rep.steps) {
    json xis = json::array();
    for (const auto& xi : st.xis) xis.push_back(toString(xi));
    steps.push_back({{"generator", st.generator},
                     {"degree", st.generatorDegree},
                     {"dimCurrent", st.dimCurrent},
                     {"dimTensor", st.dimTensor},
                     {"dimQuotient", st.dimQuotient},
                     {"xis", xis},
                     {"dimPerturbed", st.dimPerturbed},
                     {"squareZero", st.squareZero},
                     {"doubling", st.doubling},
                     {"collapse", st.collapse},
                     {"semicontinuity", st.semicontinuity},
                     {"anticommutes", st.anticommutes},
                     {"strictlyCommutes", st.strictlyCommutes}});
  }
  CheckResult out;
  out.data = {{"seed", rep.seed},       {"n", rep.n},
              {"r", rep.r},             {"dimH", rep.dimH},
              {"steps", steps},         {"terminalDim", rep.terminalDim},
              {"terminalZeroDifferential", rep.terminalZeroDifferential},
              {"terminalOk", rep.terminalOk},
              {"chainOk", rep.chainOk}, {"powerBound", rep.powerBound},
              {"passed", rep.passed()}};
  if (!rep.passed()) {
    out.outcome = Outcome::Violated;
    out.diagnostic = "reduction chain fails for '" + model.name() + "'";
  }
  return out;
}

CheckResult cocycleCheck(const Model& model, const json& args) {
  requireValid(model);
  Element e = parseExpression(argString(args, "expression"), model.universe());
  bool cocycle = isCocycle(model, e);
  CheckResult out;
  out.data = {{"expression", toString(e)}, {"cocycle", cocycle}};
  if (auto deg = e.homogeneousDegree()) out.data["degree"] = *deg;
  out.data["coboundary"] = cocycle && isCoboundary(model, e);
  return out;
}

CheckResult failure(const char* kind, Outcome outcome, const std::string& message) {
  CheckResult out;
  out.data = {{"error", kind}, {"message", message}};
  out.outcome = outcome;
  out.diagnostic = message;
  return out;
}

}  // namespace

const std::vector<std::string>& checkNames() {
  static const std::vector<std::string> names{"validate", "classify", "apply",      "cohomology", "elliptic", "hilali",
                                              "tor",      "regseq",   "crosscheck", "deform",     "reduce",   "cocycle"};
  return names;
}

bool isCheck(std::string_view name) {
  const auto& names = checkNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult runCheck(std::string_view check, const Model& model, const json& args, const RunOptions& options) {
  try {
    if (check == "validate") return validateCheck(model);
    if (check == "classify") return classifyCheck(model);
    if (check == "apply") return applyCheck(model, args);
    if (check == "cohomology") return cohomologyCheck(model, options);
    if (check == "elliptic") return ellipticCheck(model);
    if (check == "hilali") return hilaliCheck(model, options);
    if (check == "tor") return torCheck(model, options);
    if (check == "regseq") return regseqCheck(model, args);
    if (check == "crosscheck") return crosscheckCheck(model, options);
    if (check == "deform") return deformCheck(model, options);
    if (check == "reduce") return reduceCheck(model, options);
    if (check == "cocycle") return cocycleCheck(model, args);
    return failure("input", Outcome::InputFailure, "unknown check '" + std::string(check) + "'");
  } catch (const InputError& e) {
    return failure("input", Outcome::InputFailure, e.what());
  } catch (const IndeterminateError& e) {
    return failure("indeterminate", Outcome::Indeterminate, e.what());
  } catch (const ContradictionError& e) {
    return failure("contradiction", Outcome::Violated, e.what());
  } catch (const json::exception& e) {
    return failure("input", Outcome::InputFailure, e.what());
  }
}

json makeReport(std::string_view command, const Model& model, const RunOptions& options, const CheckResult& result) {
  json doc = {{"format", kReportFormat},
              {"engine", kEngineVersion},
              {"command", command},
              {"model", model.name()},
              {"seed", options.seed},
              {"samples", options.samples},
              {"exit", static_cast<int>(result.outcome)},
              {"result", result.data}};
  if (options.maxDegree) doc["maxDegree"] = *options.maxDegree;
  if (options.assumeElliptic) doc["assumeElliptic"] = true;
  return doc;
}

namespace {

std::string scalarText(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool numericKey(const std::string& k) {
  return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) { return c >= '0' && c <= '9'; });
}

/// Scalars, arrays of scalars and integer-keyed maps of scalars fit on one
/// line.
bool flat(const json& v) {
  if (v.is_primitive()) return true;
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
  for (const auto& [k, x] : v.items())
    if (!numericKey(k) || !x.is_primitive()) return false;
  return true;
}

std::string inlineText(const json& v) {
  if (v.is_primitive()) return scalarText(v);
  std::string s;
  if (v.is_array()) {
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalarText(x);
    return "[" + s + "]";
  }
  for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : " ") + k + "=" + scalarText(x);
  return "{" + s + "}";
}

bool isTable(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  return std::all_of(v.begin(), v.end(), [&](const json& row) {
    if (!row.is_object() || row.size() != v.front().size()) return false;
    for (const auto& [k, x] : row.items())
      if (!v.front().contains(k) || !(x.is_primitive() || flat(x))) return false;
    return true;
  });
}

void renderTable(std::ostringstream& os, const json& rows, const std::string& pad) {
  std::vector<std::string> keys;
  for (const auto& [k, x] : rows.front().items()) keys.push_back(k);
  std::vector<std::size_t> width(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    width[i] = keys[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], inlineText(row[keys[i]]).size());
  }
  auto line = [&](auto cell) {
    os << pad;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::string c = cell(i);
      os << (i ? "  " : "") << std::string(width[i] - c.size(), ' ') << c;
    }
    os << '\n';
  };
  line([&](std::size_t i) { return keys[i]; });
  for (const auto& row : rows) line([&](std::size_t i) { return inlineText(row[keys[i]]); });
}

void renderInto(std::ostringstream& os, const json& doc, const std::string& pad) {
  for (const auto& [key, v] : doc.items()) {
    if (flat(v)) {
      os << pad << key << ": " << inlineText(v) << '\n';
    } else if (isTable(v)) {
      os << pad << key << ":\n";
      renderTable(os, v, pad + "  ");
    } else if (v.is_object()) {
      os << pad << key << ":\n";
      renderInto(os, v, pad + "  ");
    } else {
      os << pad << key << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (flat(v[i])) {
          os << pad << "  - " << inlineText(v[i]) << '\n';
        } else {
          os << pad << "  [" << i << "]\n";
          renderInto(os, v[i], pad + "    ");
        }
      }
    }
  }
}

}  // namespace

std::string renderText(const json& doc) {
  std::ostringstream os;
  if (doc.is_object()) {
    renderInto(os, doc, "");
  } else {
    os << inlineText(doc) << '\n';
  }
  return os.str();
}

}  // namespace hilali
