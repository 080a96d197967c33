#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lagcd/agcd.hpp"

namespace lagcd::cli {

/// Malformed input file; maps to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The JSON problem layout: P and Q given by nodes/values.
struct ProblemFile {
  std::vector<Complex> px, py, qx, qy;
  double sigma = 0.0;
  std::optional<ClusterStrategy> strategy;
  std::optional<int> maxMultiplicity;
  std::optional<Rho> rho;
  std::optional<double> sigmaCluster;
  std::optional<double> sigmaEdge;
  std::optional<double> sigmaCert;
};

/// A number or a two-element [re, im] array.
Complex parseComplex(const nlohmann::json& j);
nlohmann::json complexToJson(Complex z);

ProblemFile parseProblem(const nlohmann::json& j);
ProblemFile readProblemFile(const std::string& path);

/// Points file: a JSON array of [root, multiplicity] pairs, root a number or
/// [re, im]. An empty file reads as an empty list.
RootList parsePoints(const std::string& text);

ClusterStrategy parseStrategy(const std::string& s);
Rho parseRho(const std::string& s);
std::string toString(ClusterStrategy s);
std::string toString(Rho r);

/// JSON with every floating-point number printed as %.17g.
void writeJson(std::ostream& out, const nlohmann::json& j, int indent = 2);

nlohmann::json rootListToJson(const RootList& roots);
nlohmann::json agcdResultToJson(const AgcdResult& r, ClusterStrategy strategy, Matcher matcher,
                                int maxMultiplicity);

/// `re` when the imaginary part is zero, `re+imi` / `re-imi` otherwise.
std::string formatComplexCsv(Complex z);

}  // namespace lagcd::cli
