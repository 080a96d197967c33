#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lagcd/error.hpp"
#include "problem_io.hpp"

namespace lagcd::cli {
namespace {

using nlohmann::json;

struct AgcdFlags {
  std::optional<double> sigma;
  std::optional<std::string> strategy;
  std::optional<int> maxMult;
  std::optional<std::string> rho;
  std::string matcher = "greedy";
  bool fixpoint = false;
  std::optional<double> fuzz;
  std::optional<double> sigmaCluster;
  std::optional<double> sigmaEdge;
  std::optional<double> sigmaCert;
  std::string graphCsv;
};

// Writes to `path` when given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write '" + path + "'");
    }
    stream_ = path.empty() ? &out : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string readAll(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmdRoots(const std::string& input, const std::string& side, const std::string& output, std::ostream& out) {
  const ProblemFile f = readProblemFile(input);
  const bool isP = side == "P" || side == "p";
  const LagrangePoly poly(isP ? f.px : f.qx, isP ? f.py : f.qy);
  const RootfindReport report = findRoots(poly);
  json arr = json::array();
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    arr.push_back({{"root", complexToJson(report.roots[i])}, {"residual", report.residuals[i]}});
  }
  Sink sink(output, out);
  writeJson(sink.stream(), arr);
  return kOk;
}

int cmdAgcd(const std::string& input, const AgcdFlags& flags, const std::string& output, std::ostream& out) {
  const ProblemFile f = readProblemFile(input);
  const LagrangePoly p(f.px, f.py);
  const LagrangePoly q(f.qx, f.qy);

  AgcdOptions opts;
  const double sigma = flags.sigma.value_or(f.sigma);
  opts.cluster.sigma = flags.sigmaCluster.value_or(f.sigmaCluster.value_or(sigma));
  opts.cluster.strategy = flags.strategy ? parseStrategy(*flags.strategy)
                                         : f.strategy.value_or(ClusterStrategy::DivideAndConquer);
  opts.cluster.maxMultiplicity = flags.maxMult.value_or(f.maxMultiplicity.value_or(3));
  opts.cluster.fuzzFactor = flags.fuzz.value_or(1.0);
  opts.cluster.fixpoint = flags.fixpoint;
  opts.sigmaEdge = flags.sigmaEdge.value_or(f.sigmaEdge.value_or(sigma));
  opts.sigmaCert = flags.sigmaCert.value_or(f.sigmaCert.value_or(sigma));
  opts.rho = flags.rho ? parseRho(*flags.rho) : f.rho.value_or(Rho::Sum);
  if (flags.matcher == "greedy") {
    opts.matcher = Matcher::Greedy;
  } else if (flags.matcher == "exact") {
    opts.matcher = Matcher::Exact;
  } else {
    throw ParseError("unknown matcher '" + flags.matcher + "' (expected greedy or exact)");
  }
  try {
    opts.cluster.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }

  const AgcdResult result = approximateGcd(p, q, opts);
  Sink sink(output, out);
  writeJson(sink.stream(), agcdResultToJson(result, opts.cluster.strategy, opts.matcher, opts.cluster.maxMultiplicity));

  if (!flags.graphCsv.empty()) {
    std::ofstream csv(flags.graphCsv);
    if (!csv) throw ParseError("cannot write '" + flags.graphCsv + "'");
    csv << "left_root,right_root,weight,distance\n";
    char buf[40];
    for (const auto& e : result.graph.edges) {
      std::snprintf(buf, sizeof buf, "%.17g", e.distance);
      csv << formatComplexCsv(result.graph.left[e.left].value) << ','
          << formatComplexCsv(result.graph.right[e.right].value) << ',' << e.weight << ',' << buf << '\n';
    }
  }
  return kOk;
}

int cmdCluster(const std::string& input, double sigma, const std::string& strategy, int maxMult, bool fixpoint,
               double fuzz, const std::string& output, std::ostream& out) {
  const RootList points = parsePoints(readAll(input));
  ClusterParams params;
  params.sigma = sigma;
  params.strategy = parseStrategy(strategy);
  params.maxMultiplicity = maxMult;
  params.fixpoint = fixpoint;
  params.fuzzFactor = fuzz;
  try {
    params.validate();
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  const std::vector<Cluster> clusters = clusterDetailed(points, params);

  Sink sink(output, out);
  std::ostream& os = sink.stream();
  os << "re,im,multiplicity,cluster_id,was_merged\n";
  char buf[96];
  for (std::size_t id = 0; id < clusters.size(); ++id) {
    const Cluster& c = clusters[id];
    const bool merged = c.members.size() > 1;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", c.center.real(), c.center.imag());
    os << buf << ',' << c.multiplicity << ',' << id << ',' << (merged ? 1 : 0) << '\n';
  }
  return kOk;
}

std::uint64_t seedFromEnvironment(std::uint64_t fallback) {
  if (const char* s = std::getenv("LAGCD_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(std::string("LAGCD_SEED is not an unsigned integer: ") + s);
    }
  }
  return fallback;
}

int cmdPoints(int count, std::optional<std::uint64_t> seed, const std::string& output, std::ostream& out) {
  if (count < 0) throw ParseError("--count must be >= 0");
  std::mt19937_64 rng(seed.value_or(seedFromEnvironment(20)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  json arr = json::array();
  for (int i = 0; i < count; ++i) {
    const double x = unit(rng);
    const double y = unit(rng);
    arr.push_back(json::array({json::array({x, y}), 1}));
  }
  Sink sink(output, out);
  writeJson(sink.stream(), arr, 0);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate GCD of polynomials sampled in a Lagrange basis", "lagcd"};
  app.require_subcommand(1);

  std::string output;

  std::string rootsInput;
  std::string side = "P";
  auto* roots = app.add_subcommand("roots", "Roots and residuals of one side of a problem file");
  roots->add_option("input", rootsInput, "problem file (JSON)")->required();
  roots->add_option("--side", side, "P or Q")->check(CLI::IsMember({"P", "Q", "p", "q"}));
  roots->add_option("-o,--output", output, "write to file instead of stdout");

  std::string agcdInput;
  AgcdFlags flags;
  auto* agcd = app.add_subcommand("agcd", "Approximate GCD of the P/Q pair in a problem file");
  agcd->add_option("input", agcdInput, "problem file (JSON)")->required();
  agcd->add_option("--sigma", flags.sigma, "shared tolerance (overrides the file)");
  agcd->add_option("--strategy", flags.strategy, "dnc or heuristic");
  agcd->add_option("--max-mult", flags.maxMult, "heuristic maximum multiplicity");
  agcd->add_option("--rho", flags.rho, "sum or max");
  agcd->add_option("--matcher", flags.matcher, "greedy or exact");
  agcd->add_flag("--fixpoint", flags.fixpoint, "repeat DnC clustering until stable");
  agcd->add_option("--fuzz", flags.fuzz, "heuristic radius factor");
  agcd->add_option("--sigma-cluster", flags.sigmaCluster, "clustering tolerance");
  agcd->add_option("--sigma-edge", flags.sigmaEdge, "matching edge threshold");
  agcd->add_option("--sigma-cert", flags.sigmaCert, "distance certificate bound");
  agcd->add_option("--graph-csv", flags.graphCsv, "dump the bipartite graph as CSV");
  agcd->add_option("-o,--output", output, "write to file instead of stdout");

  std::string clusterInput;
  double clusterSigma = 0.0;
  std::string clusterStrategy = "dnc";
  int clusterMaxMult = 3;
  bool clusterFixpoint = false;
  double clusterFuzz = 1.0;
  auto* cluster = app.add_subcommand("cluster", "Cluster a points file and emit plot-ready CSV");
  cluster->add_option("input", clusterInput, "points file (JSON)")->required();
  cluster->add_option("--sigma", clusterSigma, "tolerance")->required();
  cluster->add_option("--strategy", clusterStrategy, "dnc or heuristic");
  cluster->add_option("--max-mult", clusterMaxMult, "heuristic maximum multiplicity");
  cluster->add_flag("--fixpoint", clusterFixpoint, "repeat DnC clustering until stable");
  cluster->add_option("--fuzz", clusterFuzz, "heuristic radius factor");
  cluster->add_option("-o,--output", output, "write to file instead of stdout");

  int pointCount = 20;
  std::optional<std::uint64_t> pointSeed;
  auto* points = app.add_subcommand("points", "Pseudorandom points in the unit square (seed: LAGCD_SEED)");
  points->add_option("--count", pointCount, "number of points");
  points->add_option("--seed", pointSeed, "overrides LAGCD_SEED");
  points->add_option("-o,--output", output, "write to file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*roots) return cmdRoots(rootsInput, side, output, out);
    if (*agcd) return cmdAgcd(agcdInput, flags, output, out);
    if (*cluster) {
      return cmdCluster(clusterInput, clusterSigma, clusterStrategy, clusterMaxMult, clusterFixpoint, clusterFuzz,
                        output, out);
    }
    if (*points) return cmdPoints(pointCount, pointSeed, output, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::EigensolveFailure:
      case ErrorCode::DegenerateInput:
        return kNumericError;
      default:
        return kInputError;
    }
  }
  return kInputError;
}

}  // namespace lagcd::cli
