#include <algorithm>
#include <cmath>
#include <tuple>

#include "lagcd/cluster.hpp"
#include "lagcd/error.hpp"

namespace lagcd {
namespace {

struct Point {
  Complex z;
  int mult;
  std::vector<std::size_t> members;
};

bool lessByImag(const Point& a, const Point& b) {
  if (a.z.imag() != b.z.imag()) return a.z.imag() < b.z.imag();
  return a.z.real() < b.z.real();
}

class DncClusterer {
 public:
  DncClusterer(const std::vector<Point>& sorted, double sigma, DncStats& stats)
      : q_(sorted), sigma_(sigma), stats_(stats) {}

  // Clusters q_[lo..hi]; the result is ordered by imaginary part.
  std::vector<Point> run(std::size_t lo, std::size_t hi) {
    if (lo == hi) return {q_[lo]};
    const std::size_t mid = (lo + hi) / 2;
    std::vector<Point> left = run(lo, mid);
    std::vector<Point> right = run(mid + 1, hi);
    const double midline = q_[mid].z.real();

    // Merge by imaginary part, remembering which side each point came from.
    std::vector<Point> merged;
    std::vector<char> fromLeft;
    merged.reserve(left.size() + right.size());
    fromLeft.reserve(left.size() + right.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < left.size() || j < right.size()) {
      bool takeLeft;
      if (i == left.size()) {
        takeLeft = false;
      } else if (j == right.size()) {
        takeLeft = true;
      } else {
        ++stats_.comparisons;
        takeLeft = !lessByImag(right[j], left[i]);
      }
      if (takeLeft) {
        merged.push_back(std::move(left[i++]));
        fromLeft.push_back(1);
      } else {
        merged.push_back(std::move(right[j++]));
        fromLeft.push_back(0);
      }
    }

    std::vector<std::size_t> strip;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (std::abs(merged[k].z.real() - midline) <= sigma_) strip.push_back(k);
    }

    using Candidate = std::tuple<double, std::size_t, std::size_t>;
    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < strip.size(); ++a) {
      const Point& u = merged[strip[a]];
      for (std::size_t b = a + 1; b < strip.size(); ++b) {
        const Point& v = merged[strip[b]];
        if (v.z.imag() - u.z.imag() > sigma_) break;
        ++stats_.comparisons;
        if (fromLeft[strip[a]] == fromLeft[strip[b]]) continue;
        const double d = std::abs(u.z - v.z);
        if (d <= sigma_) candidates.emplace_back(d, strip[a], strip[b]);
      }
    }
    if (candidates.empty()) return merged;

    std::sort(candidates.begin(), candidates.end());
    std::vector<char> used(merged.size(), 0);
    std::vector<Point> combined;
    for (const auto& [d, a, b] : candidates) {
      if (used[a] || used[b]) continue;
      used[a] = used[b] = 1;
      const Point& u = merged[a];
      const Point& v = merged[b];
      Point w;
      w.mult = u.mult + v.mult;
      w.z = (static_cast<double>(u.mult) * u.z + static_cast<double>(v.mult) * v.z) /
            static_cast<double>(w.mult);
      w.members = u.members;
      w.members.insert(w.members.end(), v.members.begin(), v.members.end());
      combined.push_back(std::move(w));
      ++stats_.merges;
    }
    std::sort(combined.begin(), combined.end(), lessByImag);

    std::vector<Point> out;
    out.reserve(merged.size() - combined.size());
    std::size_t c = 0;
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (used[k]) continue;
      while (c < combined.size() && lessByImag(combined[c], merged[k])) out.push_back(std::move(combined[c++]));
      out.push_back(std::move(merged[k]));
    }
    while (c < combined.size()) out.push_back(std::move(combined[c++]));
    return out;
  }

 private:
  const std::vector<Point>& q_;
  double sigma_;
  DncStats& stats_;
};

std::vector<Cluster> finish(std::vector<Point> points) {
  std::vector<Cluster> out;
  out.reserve(points.size());
  for (auto& p : points) {
    std::sort(p.members.begin(), p.members.end());
    out.push_back({p.z, p.mult, std::move(p.members)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    return lessByRealThenImag(a.center, b.center);
  });
  return out;
}

}  // namespace

void ClusterParams::validate() const {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be >= 0");
  if (maxMultiplicity < 1) throw Error(ErrorCode::InvalidArgument, "maxMultiplicity must be >= 1");
  if (!(fuzzFactor > 0.0)) throw Error(ErrorCode::InvalidArgument, "fuzzFactor must be > 0");
}

std::vector<Cluster> clusterDnCDetailed(const RootList& q, double sigma, DncStats* stats) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be >= 0");
  if (q.empty()) return {};
  std::vector<Point> sorted;
  sorted.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) sorted.push_back({q[i].value, q[i].multiplicity, {i}});
  DncStats local;
  DncClusterer clusterer(sorted, sigma, stats ? *stats : local);
  return finish(clusterer.run(0, sorted.size() - 1));
}

RootList clusterRootsDnC(const RootList& q, double sigma, DncStats* stats) {
  return toRootList(clusterDnCDetailed(q, sigma, stats));
}

std::vector<Cluster> clusterDnCFixpointDetailed(const RootList& q, double sigma) {
  std::vector<Cluster> current = clusterDnCDetailed(q, sigma);
  while (true) {
    const RootList asList = toRootList(current);
    std::vector<Cluster> next = clusterDnCDetailed(asList, sigma);
    if (next.size() == current.size()) return current;
    // Map members of the next round back to the original input indices.
    for (auto& c : next) {
      std::vector<std::size_t> original;
      for (std::size_t idx : c.members) {
        original.insert(original.end(), current[idx].members.begin(), current[idx].members.end());
      }
      std::sort(original.begin(), original.end());
      c.members = std::move(original);
    }
    current = std::move(next);
  }
}

RootList toRootList(const std::vector<Cluster>& clusters) {
  std::vector<Root> entries;
  entries.reserve(clusters.size());
  for (const auto& c : clusters) entries.push_back({c.center, c.multiplicity});
  return RootList(std::move(entries));
}

std::vector<Cluster> clusterDetailed(const RootList& roots, const ClusterParams& params) {
  params.validate();
  if (params.strategy == ClusterStrategy::SymmetryHeuristic) {
    return clusterHeuristicDetailed(roots, params);
  }
  return params.fixpoint ? clusterDnCFixpointDetailed(roots, params.sigma)
                         : clusterDnCDetailed(roots, params.sigma);
}

RootList clusterRoots(const RootList& roots, const ClusterParams& params) {
  return toRootList(clusterDetailed(roots, params));
}

}  // namespace lagcd
