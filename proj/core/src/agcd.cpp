#include "lagcd/agcd.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>

#include "lagcd/error.hpp"

namespace lagcd {
namespace {

std::vector<int> matchedWeights(const RootList& clustered, const Matching& m, MatchSide side) {
  std::vector<int> w(clustered.size(), 0);
  for (const auto& e : m.edges) {
    const std::size_t idx = side == MatchSide::Left ? e.left : e.right;
    if (idx >= clustered.size()) throw Error(ErrorCode::InvalidArgument, "matching does not fit the root list");
    w[idx] += e.weight;
  }
  return w;
}

SideReport analyzeSide(const LagrangePoly& poly, const AgcdOptions& opts) {
  SideReport side;
  side.rootfind = findRoots(poly, opts.rootfind);
  side.clusters = clusterDetailed(RootList::simple(side.rootfind.roots), opts.cluster);
  side.clustered = toRootList(side.clusters);
  return side;
}

void requireNonZero(const LagrangePoly& p, const char* name) {
  if (p.maxAbsValue() <= std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::ZeroPolynomial, std::string(name) + " has only zero samples");
  }
}

}  // namespace

RootList assembleGcd(const Matching& m, const MatchGraph& g) {
  std::vector<Root> roots;
  roots.reserve(m.edges.size());
  for (const auto& e : m.edges) {
    const Root& a = g.left[e.left];
    const Root& b = g.right[e.right];
    const double da = a.multiplicity;
    const double db = b.multiplicity;
    roots.push_back({(da * a.value + db * b.value) / (da + db), e.weight});
  }
  return RootList(std::move(roots));
}

RootList cofactor(const RootList& clustered, const Matching& m, MatchSide side) {
  const std::vector<int> w = matchedWeights(clustered, m, side);
  std::vector<Root> out;
  for (std::size_t i = 0; i < clustered.size(); ++i) {
    const int rest = clustered[i].multiplicity - w[i];
    if (rest < 0) throw Error(ErrorCode::InvalidArgument, "matched weight exceeds root multiplicity");
    if (rest > 0) out.push_back({clustered[i].value, rest});
  }
  return RootList(std::move(out));
}

RootList reconstruct(const RootList& clustered, const Matching& m, const RootList& gcd, MatchSide side) {
  std::vector<Root> roots = cofactor(clustered, m, side).entries();
  roots.insert(roots.end(), gcd.begin(), gcd.end());
  return RootList(std::move(roots));
}

std::vector<Complex> defaultGcdNodes(const RootList& gcd, double lo, double hi) {
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  const std::size_t want = static_cast<std::size_t>(gcd.totalMultiplicity()) + 1;
  const double minGap = 1e-6 * (hi - lo);
  std::vector<Complex> nodes;
  auto tryAdd = [&](Complex z) {
    if (nodes.size() >= want) return;
    for (const auto& x : nodes) {
      if (std::abs(x - z) <= minGap) return;
    }
    nodes.push_back(z);
  };
  for (const auto& r : gcd) tryAdd(r.value);
  tryAdd(0.0);
  for (std::size_t count = want; nodes.size() < want; count *= 2) {
    for (std::size_t j = 0; j < count; ++j) {
      const double t = std::cos((2.0 * static_cast<double>(j) + 1.0) * std::numbers::pi /
                                (2.0 * static_cast<double>(count)));
      tryAdd(0.5 * (lo + hi) + 0.5 * (hi - lo) * t);
    }
  }
  return nodes;
}

AgcdResult approximateGcd(const LagrangePoly& p, const LagrangePoly& q, const AgcdOptions& opts) {
  requireNonZero(p, "P");
  requireNonZero(q, "Q");
  opts.cluster.validate();
  const double sigmaEdge = opts.edgeSigma();
  const double sigmaCert = opts.certSigma();
  if (!(sigmaEdge >= 0.0) || !(sigmaCert >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "sigma overrides must be >= 0");
  }

  // The two sides share nothing until matching.
  auto qFuture = std::async(std::launch::async, [&] { return analyzeSide(q, opts); });
  SideReport pSide = analyzeSide(p, opts);
  SideReport qSide = qFuture.get();

  MatchGraph graph = buildGraph(pSide.clustered, qSide.clustered, sigmaEdge);
  Matching matching = opts.matcher == Matcher::Exact ? exactMWM(graph) : greedyMWM(graph);
  RootList gcd = assembleGcd(matching, graph);

  RootList pTilde = reconstruct(pSide.clustered, matching, gcd, MatchSide::Left);
  RootList qTilde = reconstruct(qSide.clustered, matching, gcd, MatchSide::Right);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto* poly : {&p, &q}) {
    for (const auto& x : poly->nodes()) {
      lo = std::min(lo, x.real());
      hi = std::max(hi, x.real());
    }
  }
  const std::vector<Complex> gNodes = opts.gcdNodes ? *opts.gcdNodes : defaultGcdNodes(gcd, lo, hi);
  LagrangePoly gcdSamples = fromRoots(gcd, gNodes);
  LagrangePoly pSamples = fromRoots(pTilde, p.nodes(), p.leadingCoefficient());
  LagrangePoly qSamples = fromRoots(qTilde, q.nodes(), q.leadingCoefficient());

  AgcdResult result{
      .gcd = std::move(gcd),
      .gcdSamples = std::move(gcdSamples),
      .pTilde = std::move(pTilde),
      .pTildeSamples = std::move(pSamples),
      .qTilde = std::move(qTilde),
      .qTildeSamples = std::move(qSamples),
      .pCofactor = cofactor(pSide.clustered, matching, MatchSide::Left),
      .qCofactor = cofactor(qSide.clustered, matching, MatchSide::Right),
      .graph = std::move(graph),
      .matching = std::move(matching),
      .sigmaCluster = opts.cluster.sigma,
      .sigmaEdge = sigmaEdge,
      .sigmaCert = sigmaCert,
      .rho = opts.rho,
      .p = std::move(pSide),
      .q = std::move(qSide),
      .warnings = {},
  };

  const RootList rawP = RootList::simple(result.p.rootfind.roots);
  const RootList rawQ = RootList::simple(result.q.rootfind.roots);
  if (!rawP.empty()) {
    const auto cert = certifyDistance(rawP, result.pTilde, sigmaCert, opts.rho);
    result.distP = cert.distance;
    result.certifiedP = cert.withinSigma;
  } else {
    result.certifiedP = true;
  }
  if (!rawQ.empty()) {
    const auto cert = certifyDistance(rawQ, result.qTilde, sigmaCert, opts.rho);
    result.distQ = cert.distance;
    result.certifiedQ = cert.withinSigma;
  } else {
    result.certifiedQ = true;
  }

  if (!result.certifiedP || !result.certifiedQ) {
    std::ostringstream w;
    w.precision(17);
    w << "distance certificate failed: d(P, P~) = " << result.distP << ", d(Q, Q~) = " << result.distQ
      << ", sigma = " << sigmaCert;
    result.warnings.push_back(w.str());
  }
  if (result.matching.edges.empty()) {
    result.warnings.push_back("empty matching: P and Q are coprime at this sigma");
  }
  for (const auto* side : {&result.p, &result.q}) {
    const char* name = side == &result.p ? "P" : "Q";
    for (const auto& note : side->rootfind.notes) result.warnings.push_back(std::string(name) + ": " + note);
  }
  return result;
}

}  // namespace lagcd
