#include "problem_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lagcd::cli {

using nlohmann::json;

Complex parseComplex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("expected a number or [re, im], got " + j.dump());
}

json complexToJson(Complex z) { return json::array({z.real(), z.imag()}); }

namespace {

std::vector<Complex> parseVector(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& e : arr) out.push_back(parseComplex(e));
  return out;
}

double parseNonNegative(const json& j, const char* key) {
  if (!j.is_number()) throw ParseError(std::string("'") + key + "' must be a number");
  const double v = j.get<double>();
  if (!(v >= 0.0)) throw ParseError(std::string("'") + key + "' must be >= 0");
  return v;
}

void writeNumber(std::ostream& out, double v) {
  if (!std::isfinite(v)) {
    out << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out << buf;
}

void writeValue(std::ostream& out, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string closePad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',' << nl;
        first = false;
        out << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        writeValue(out, it.value(), indent, depth + 1);
      }
      out << nl << closePad << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      out << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out << (flat ? ", " : ",");
        if (!flat) out << nl << pad;
        first = false;
        writeValue(out, e, indent, depth + 1);
      }
      if (!flat) out << nl << closePad;
      out << ']';
      return;
    }
    case json::value_t::number_float:
      writeNumber(out, j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

}  // namespace

ClusterStrategy parseStrategy(const std::string& s) {
  if (s == "dnc") return ClusterStrategy::DivideAndConquer;
  if (s == "heuristic") return ClusterStrategy::SymmetryHeuristic;
  throw ParseError("unknown strategy '" + s + "' (expected dnc or heuristic)");
}

Rho parseRho(const std::string& s) {
  if (s == "sum") return Rho::Sum;
  if (s == "max") return Rho::Max;
  throw ParseError("unknown rho '" + s + "' (expected sum or max)");
}

std::string toString(ClusterStrategy s) {
  return s == ClusterStrategy::DivideAndConquer ? "dnc" : "heuristic";
}

std::string toString(Rho r) { return r == Rho::Sum ? "sum" : "max"; }

ProblemFile parseProblem(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  ProblemFile f;
  f.px = parseVector(j, "px");
  f.py = parseVector(j, "py");
  f.qx = parseVector(j, "qx");
  f.qy = parseVector(j, "qy");
  if (f.px.size() != f.py.size()) throw ParseError("px and py differ in length");
  if (f.qx.size() != f.qy.size()) throw ParseError("qx and qy differ in length");
  if (f.px.size() < 2 || f.qx.size() < 2) throw ParseError("each polynomial needs at least two samples");
  if (!j.contains("sigma")) throw ParseError("missing field 'sigma'");
  f.sigma = parseNonNegative(j.at("sigma"), "sigma");
  if (j.contains("strategy")) f.strategy = parseStrategy(j.at("strategy").get<std::string>());
  if (j.contains("maxMultiplicity")) {
    const int m = j.at("maxMultiplicity").get<int>();
    if (m < 1) throw ParseError("'maxMultiplicity' must be >= 1");
    f.maxMultiplicity = m;
  }
  if (j.contains("rho")) f.rho = parseRho(j.at("rho").get<std::string>());
  if (j.contains("sigmaOverrides")) {
    const json& o = j.at("sigmaOverrides");
    if (!o.is_object()) throw ParseError("'sigmaOverrides' must be an object");
    if (o.contains("cluster")) f.sigmaCluster = parseNonNegative(o.at("cluster"), "sigmaOverrides.cluster");
    if (o.contains("edge")) f.sigmaEdge = parseNonNegative(o.at("edge"), "sigmaOverrides.edge");
    if (o.contains("cert")) f.sigmaCert = parseNonNegative(o.at("cert"), "sigmaOverrides.cert");
  }
  return f;
}

ProblemFile readProblemFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return parseProblem(json::parse(in));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what());
  }
}

RootList parsePoints(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON points: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("points file must be a JSON array");
  std::vector<Root> roots;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer()) {
      throw ParseError("each point must be [root, multiplicity], got " + e.dump());
    }
    const int mult = e[1].get<int>();
    if (mult < 1) throw ParseError("multiplicity must be >= 1, got " + e.dump());
    roots.push_back({parseComplex(e[0]), mult});
  }
  return RootList(std::move(roots));
}

void writeJson(std::ostream& out, const json& j, int indent) {
  writeValue(out, j, indent, 0);
  out << '\n';
}

json rootListToJson(const RootList& roots) {
  json arr = json::array();
  for (const auto& r : roots) arr.push_back({{"root", complexToJson(r.value)}, {"multiplicity", r.multiplicity}});
  return arr;
}

namespace {

json complexArray(std::span<const Complex> zs) {
  json arr = json::array();
  for (const auto& z : zs) arr.push_back(complexToJson(z));
  return arr;
}

json sampledPoly(const RootList& roots, const LagrangePoly& samples) {
  return {{"degree", roots.totalMultiplicity()},
          {"roots", rootListToJson(roots)},
          {"nodes", complexArray(samples.nodes())},
          {"values", complexArray(samples.values())}};
}

json sideJson(const SideReport& side) {
  return {{"roots", complexArray(side.rootfind.roots)},
          {"residuals", side.rootfind.residuals},
          {"discarded", side.rootfind.discardedCount},
          {"notes", side.rootfind.notes},
          {"clusters", rootListToJson(side.clustered)}};
}

}  // namespace

json agcdResultToJson(const AgcdResult& r, ClusterStrategy strategy, Matcher matcher, int maxMultiplicity) {
  json edges = json::array();
  for (const auto& e : r.matching.edges) {
    edges.push_back({{"left", complexToJson(r.graph.left[e.left].value)},
                     {"right", complexToJson(r.graph.right[e.right].value)},
                     {"weight", e.weight},
                     {"distance", e.distance}});
  }
  json out;
  out["sigma"] = {{"cluster", r.sigmaCluster}, {"edge", r.sigmaEdge}, {"cert", r.sigmaCert}};
  out["strategy"] = toString(strategy);
  out["matcher"] = matcher == Matcher::Greedy ? "greedy" : "exact";
  out["rho"] = toString(r.rho);
  out["maxMultiplicity"] = maxMultiplicity;
  out["gcd"] = sampledPoly(r.gcd, r.gcdSamples);
  out["pTilde"] = sampledPoly(r.pTilde, r.pTildeSamples);
  out["qTilde"] = sampledPoly(r.qTilde, r.qTildeSamples);
  out["pCofactor"] = {{"degree", r.pCofactor.totalMultiplicity()}, {"roots", rootListToJson(r.pCofactor)}};
  out["qCofactor"] = {{"degree", r.qCofactor.totalMultiplicity()}, {"roots", rootListToJson(r.qCofactor)}};
  out["matching"] = {{"totalWeight", r.matching.totalWeight}, {"edges", edges}};
  out["distP"] = r.distP;
  out["distQ"] = r.distQ;
  out["certificateP"] = r.certifiedP;
  out["certificateQ"] = r.certifiedQ;
  out["P"] = sideJson(r.p);
  out["Q"] = sideJson(r.q);
  out["warnings"] = r.warnings;
  return out;
}

std::string formatComplexCsv(Complex z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace lagcd::cli
