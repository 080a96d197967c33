#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "lagcd/cluster.hpp"

namespace lagcd {
namespace {

struct Candidate {
  std::vector<std::size_t> points;  // sorted indices into the expanded point list
  Complex centroid;
  double angularDeviation = 0.0;
  double maxRadius = 0.0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.angularDeviation != b.angularDeviation) return a.angularDeviation < b.angularDeviation;
  if (a.maxRadius != b.maxRadius) return a.maxRadius < b.maxRadius;
  return a.points < b.points;
}

class HeuristicClusterer {
 public:
  HeuristicClusterer(const RootList& roots, const ClusterParams& params, const HeuristicTolerances& tol)
      : params_(params), tol_(tol) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (int c = 0; c < roots[i].multiplicity; ++c) {
        points_.push_back(roots[i].value);
        owner_.push_back(i);
      }
    }
    active_.assign(points_.size(), 1);
  }

  std::vector<Cluster> run() {
    std::vector<Cluster> clusters;
    for (int m = params_.maxMultiplicity; m >= 2; --m) {
      const double radius = params_.fuzzFactor * std::pow(params_.sigma, 1.0 / m);
      bool accepted = true;
      while (accepted) {
        accepted = false;
        std::vector<Candidate> admissible;
        for (auto& set : candidateSets(static_cast<std::size_t>(m))) {
          Candidate c;
          c.points = std::move(set);
          if (admit(c, radius)) admissible.push_back(std::move(c));
        }
        std::sort(admissible.begin(), admissible.end(), better);
        for (const auto& c : admissible) {
          const bool free = std::all_of(c.points.begin(), c.points.end(),
                                        [&](std::size_t i) { return active_[i] != 0; });
          if (!free) continue;
          for (std::size_t i : c.points) active_[i] = 0;
          clusters.push_back(makeCluster(c.centroid, c.points));
          accepted = true;
        }
      }
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (active_[i]) clusters.push_back(makeCluster(points_[i], {i}));
    }
    return coalesce(std::move(clusters));
  }

 private:
  std::vector<std::size_t> activeIndices() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (active_[i]) idx.push_back(i);
    }
    return idx;
  }

  std::vector<std::vector<std::size_t>> candidateSets(std::size_t m) const {
    const std::vector<std::size_t> idx = activeIndices();
    std::vector<std::vector<std::size_t>> sets;
    if (idx.size() < m) return sets;
    if (idx.size() <= tol_.fullEnumerationLimit) {
      std::vector<std::size_t> pick(m);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<std::size_t> s(m);
        for (std::size_t t = 0; t < m; ++t) s[t] = idx[pick[t]];
        sets.push_back(std::move(s));
        std::size_t t = m;
        while (t > 0 && pick[t - 1] == idx.size() - m + t - 1) --t;
        if (t == 0) break;
        ++pick[t - 1];
        for (std::size_t u = t; u < m; ++u) pick[u] = pick[u - 1] + 1;
      }
      return sets;
    }
    // Each active point with its m-1 nearest active neighbours.
    std::set<std::vector<std::size_t>> unique;
    std::vector<std::pair<double, std::size_t>> byDistance;
    for (std::size_t i : idx) {
      byDistance.clear();
      for (std::size_t j : idx) {
        if (j != i) byDistance.emplace_back(std::abs(points_[i] - points_[j]), j);
      }
      std::partial_sort(byDistance.begin(), byDistance.begin() + static_cast<std::ptrdiff_t>(m - 1),
                        byDistance.end());
      std::vector<std::size_t> s{i};
      for (std::size_t t = 0; t + 1 < m; ++t) s.push_back(byDistance[t].second);
      std::sort(s.begin(), s.end());
      unique.insert(std::move(s));
    }
    return {unique.begin(), unique.end()};
  }

  bool admit(Candidate& c, double radius) const {
    const std::size_t m = c.points.size();
    Complex sum = 0.0;
    for (std::size_t i : c.points) sum += points_[i];
    c.centroid = sum / static_cast<double>(m);

    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    std::vector<double> angles;
    angles.reserve(m);
    for (std::size_t i : c.points) {
      const Complex d = points_[i] - c.centroid;
      const double r = std::abs(d);
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      angles.push_back(std::arg(d));
    }
    c.maxRadius = rmax;
    if (rmax == 0.0) {
      c.angularDeviation = 0.0;  // coincident points
      return true;
    }
    if (rmax > radius) return false;
    if (rmin == 0.0 || rmax > tol_.radiusBand * rmin) return false;

    std::sort(angles.begin(), angles.end());
    const double ideal = 2.0 * std::numbers::pi / static_cast<double>(m);
    double worst = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
      const double gap = t + 1 < m ? angles[t + 1] - angles[t]
                                   : angles[0] + 2.0 * std::numbers::pi - angles[t];
      worst = std::max(worst, std::abs(gap - ideal));
    }
    c.angularDeviation = worst;
    return worst <= tol_.angularTolerance;
  }

  Cluster makeCluster(Complex center, const std::vector<std::size_t>& pts) const {
    Cluster c;
    c.center = center;
    c.multiplicity = static_cast<int>(pts.size());
    for (std::size_t i : pts) c.members.push_back(owner_[i]);
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    return c;
  }

  // Clusters with identical centers (copies of one multiple input root that
  // exceeded maxMultiplicity, or untouched copies) are folded together.
  static std::vector<Cluster> coalesce(std::vector<Cluster> clusters) {
    std::stable_sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
      return lessByRealThenImag(a.center, b.center);
    });
    std::vector<Cluster> out;
    for (auto& c : clusters) {
      if (!out.empty() && out.back().center == c.center) {
        out.back().multiplicity += c.multiplicity;
        auto& mem = out.back().members;
        mem.insert(mem.end(), c.members.begin(), c.members.end());
        std::sort(mem.begin(), mem.end());
        mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
      } else {
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  const ClusterParams& params_;
  const HeuristicTolerances& tol_;
  std::vector<Complex> points_;
  std::vector<std::size_t> owner_;
  std::vector<char> active_;
};

}  // namespace

std::vector<Cluster> clusterHeuristicDetailed(const RootList& roots, const ClusterParams& params,
                                              const HeuristicTolerances& tol) {
  params.validate();
  return HeuristicClusterer(roots, params, tol).run();
}

RootList clusterRootsHeuristic(const RootList& roots, const ClusterParams& params,
                               const HeuristicTolerances& tol) {
  return toRootList(clusterHeuristicDetailed(roots, params, tol));
}

}  // namespace lagcd
