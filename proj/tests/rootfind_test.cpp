#include "lagcd/rootfind.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "lagcd/cluster.hpp"
#include "lagcd/error.hpp"
#include "support/test_support.hpp"

namespace lagcd {
namespace {

using testing::toComplex;

// Greedy nearest pairing of two equally sized root sets; returns the largest
// paired distance.
double pairedDistance(std::vector<Complex> got, const std::vector<Complex>& want) {
  double worst = 0.0;
  for (const auto& w : want) {
    auto best = got.begin();
    for (auto it = got.begin(); it != got.end(); ++it) {
      if (std::abs(*it - w) < std::abs(*best - w)) best = it;
    }
    worst = std::max(worst, std::abs(*best - w));
    got.erase(best);
  }
  return worst;
}

TEST(Pencil, Shape) {
  const LagrangePoly p(toComplex({0.0, 1.0, 2.0}), toComplex({1.0, 0.0, 1.0}));
  const auto pencil = buildPencil(p);
  EXPECT_EQ(pencil.c0.rows(), 4);
  EXPECT_EQ(pencil.c0.cols(), 4);
  EXPECT_EQ(pencil.c1(0, 0), Complex(0.0));
  EXPECT_EQ(pencil.c1(3, 3), Complex(1.0));
  EXPECT_EQ(pencil.c0(0, 2), Complex(0.0));
  EXPECT_EQ(pencil.c0(0, 1), Complex(-1.0));
  EXPECT_EQ(pencil.c0(2, 0), p.weights()[1]);
  EXPECT_EQ(pencil.c0(3, 3), Complex(2.0));
  EXPECT_EQ(pencil.sourceDegree, 2);
}

TEST(Pencil, DeterminantMatchesPolynomial) {
  auto gen = testing::rng(21);
  const auto nodes = testing::randomSeparatedNodes(gen, 6, -2.0, 2.0, 0.1);
  const auto values = testing::randomComplex(gen, 6, -1.0, 1.0);
  const LagrangePoly p(nodes, values);
  const auto pencil = buildPencil(p);
  for (const Complex z : {Complex(0.3, 0.2), Complex(-1.7, 0.0), Complex(2.5, -1.0)}) {
    const Eigen::MatrixXcd m = z * pencil.c1 - pencil.c0;
    const Complex det = m.determinant();
    const Complex expected = testing::newtonEvaluate(nodes, values, z);
    EXPECT_LE(std::abs(det - expected), 1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST(FindRoots, Quadratic) {
  // x^2 - 1 sampled at 0, 2, 3.
  const LagrangePoly p(toComplex({0.0, 2.0, 3.0}), toComplex({-1.0, 3.0, 8.0}));
  const auto report = findRoots(p);
  ASSERT_EQ(report.roots.size(), 2u);
  EXPECT_NEAR(std::abs(report.roots[0] - Complex(-1.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(report.roots[1] - Complex(1.0)), 0.0, 1e-13);
  EXPECT_EQ(report.discardedCount, 2);
  EXPECT_EQ(report.pencilDimension(), 4);
  EXPECT_EQ(report.actualDegree, 2);
  EXPECT_FALSE(report.usedFallback);
  EXPECT_TRUE(report.notes.empty());
}

TEST(FindRoots, ComplexConjugatePair) {
  // x^2 + 1.
  const LagrangePoly p(toComplex({-1.0, 0.0, 1.0}), toComplex({2.0, 1.0, 2.0}));
  const auto report = findRoots(p);
  ASSERT_EQ(report.roots.size(), 2u);
  EXPECT_NEAR(std::abs(report.roots[0] - Complex(0.0, -1.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(report.roots[1] - Complex(0.0, 1.0)), 0.0, 1e-13);
}

TEST(FindRoots, SortedOutputAndResiduals) {
  const auto p = LagrangePoly::fromReal(testing::kPx, testing::kPy);
  const auto report = findRoots(p);
  ASSERT_EQ(report.roots.size(), report.residuals.size());
  for (std::size_t i = 1; i < report.roots.size(); ++i) {
    EXPECT_FALSE(lessByRealThenImag(report.roots[i], report.roots[i - 1]));
  }
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    EXPECT_NEAR(report.residuals[i], std::abs(evaluate(p, report.roots[i])), 1e-300);
  }
}

TEST(FindRoots, WorkedExampleMatchesHighPrecisionRoots) {
  const auto p = LagrangePoly::fromReal(testing::kPx, testing::kPy);
  const auto rp = findRoots(p);
  ASSERT_EQ(rp.roots.size(), 7u);
  EXPECT_EQ(rp.discardedCount, 2);
  EXPECT_LE(pairedDistance(rp.roots, toComplex(testing::kExactRootsP)), 1e-8);

  const auto q = LagrangePoly::fromReal(testing::kQx, testing::kQy);
  const auto rq = findRoots(q);
  ASSERT_EQ(rq.roots.size(), 6u);
  EXPECT_LE(pairedDistance(rq.roots, toComplex(testing::kExactRootsQ)), 1e-8);
}

TEST(FindRoots, DegreeDeficientSampleDropsFarRoots) {
  // Six nodes sampling a cubic: the top three coefficients vanish.
  const RootList roots = RootList::simple(toComplex({-1.0, 0.5, 2.0}));
  const auto p = fromRoots(roots, toComplex({-3.0, -2.0, -0.5, 1.0, 2.5, 3.0}));
  const auto report = findRoots(p);
  ASSERT_EQ(report.roots.size(), 3u);
  EXPECT_LE(pairedDistance(report.roots, roots.expanded()), 1e-8);
  EXPECT_EQ(report.actualDegree, 3);
  EXPECT_EQ(report.discardedCount, 4);
}

TEST(FindRoots, SlightlyDeficientLeadingCoefficientUsesFallback) {
  const RootList roots = RootList::simple(toComplex({-1.0, 1.0}));
  const auto p = fromRoots(roots, toComplex({-2.0, 0.0, 3.0, 4.0}));
  const auto report = findRoots(p);
  EXPECT_TRUE(report.usedFallback);
  ASSERT_EQ(report.roots.size(), 2u);
  EXPECT_LE(pairedDistance(report.roots, roots.expanded()), 1e-8);
}

TEST(FindRoots, Errors) {
  const LagrangePoly zero(toComplex({0.0, 1.0, 2.0}), toComplex({0.0, 0.0, 0.0}));
  try {
    findRoots(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
  const LagrangePoly constant(toComplex({0.0}), toComplex({1.0}));
  try {
    findRoots(constant);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(FindRoots, NonzeroConstantHasNoRoots) {
  const LagrangePoly p(toComplex({0.0, 1.0, 2.0}), toComplex({4.0, 4.0, 4.0}));
  const auto report = findRoots(p);
  EXPECT_TRUE(report.roots.empty());
  EXPECT_EQ(report.actualDegree, 0);
}

TEST(FindRoots, RandomSimpleRootsAgainstProductForm) {
  auto gen = testing::rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t degree = 3 + static_cast<std::size_t>(trial % 12);
    std::vector<Complex> zs;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    while (zs.size() < degree) {
      const Complex z(u(gen), u(gen));
      bool ok = true;
      for (const auto& r : zs) ok = ok && std::abs(r - z) > 0.15;
      if (ok) zs.push_back(z);
    }
    const RootList roots = RootList::simple(zs);
    const auto p = fromRoots(roots, testing::chebyshevNodes(degree + 1, -1.5, 1.5), Complex(2.0, 1.0));
    const auto report = findRoots(p);
    ASSERT_EQ(report.roots.size(), degree);
    EXPECT_LE(pairedDistance(report.roots, zs), 1e-5) << "degree " << degree;
    for (double r : report.residuals) EXPECT_LE(r, 1e-10 * p.maxAbsValue());
  }
}

TEST(FindRoots, MultipleRootSpreadsAsExpected) {
  // (x - 1)^3 splits into a small ring of radius about eps^(1/3).
  const RootList roots({{1.0, 3}});
  const auto p = fromRoots(roots, testing::chebyshevNodes(4, 0.0, 2.0));
  const auto report = findRoots(p);
  ASSERT_EQ(report.roots.size(), 3u);
  for (const auto& r : report.roots) EXPECT_LE(std::abs(r - 1.0), 1e-4);
  const auto clusters = clusterRootsDnC(RootList::simple(report.roots), 1e-3);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].multiplicity, 3);
}

TEST(FindRoots, ErrorEstimatesBoundActualErrors) {
  auto gen = testing::rng(25);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t degree = 4 + static_cast<std::size_t>(trial % 9);
    const auto zs = testing::randomComplex(gen, degree, -1.0, 1.0);
    const RootList roots = RootList::simple(zs);
    const auto p = fromRoots(roots, testing::chebyshevNodes(degree + 1, -1.2, 1.2));
    const auto report = findRoots(p);
    ASSERT_EQ(report.errorEstimates.size(), report.roots.size());
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
      double actual = 1e300;
      for (const auto& z : zs) actual = std::min(actual, std::abs(z - report.roots[i]));
      EXPECT_LE(actual, 100.0 * report.errorEstimates[i] + 1e-14) << "trial " << trial;
    }
  }
}

TEST(FindRoots, DoubleRootProducesConditioningNote) {
  const RootList clean = RootList::simple(toComplex({-2.0, 1.0, 3.0}));
  const auto simple = findRoots(fromRoots(clean, testing::chebyshevNodes(4, -3.0, 4.0)));
  EXPECT_TRUE(simple.notes.empty());
  for (double e : simple.errorEstimates) EXPECT_LE(e, 1e-12);

  const RootList doubled({{Complex(-2.0), 1}, {Complex(1.0), 2}, {Complex(3.0), 1}, {Complex(5.0), 1},
                          {Complex(-4.0), 1}, {Complex(0.0), 1}, {Complex(2.0), 1}});
  const auto report = findRoots(fromRoots(doubled, testing::chebyshevNodes(9, -5.0, 6.0)));
  ASSERT_FALSE(report.notes.empty());
  EXPECT_NE(report.notes[0].find("ill-conditioned"), std::string::npos);
}

TEST(Balancing, IsPowerOfTwoDiagonalSimilarity) {
  auto gen = testing::rng(23);
  const int n = 6;
  Eigen::MatrixXcd a(n, n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(u(gen), u(gen)) * std::pow(10.0, (i - j) * 1.5);
  }
  const Eigen::MatrixXcd b = balanced(a);
  // b = D^-1 a D: b(i,j) / a(i,j) = d_j / d_i, a power of two.
  std::vector<double> d(n);
  for (int j = 0; j < n; ++j) d[j] = std::abs(b(0, j) / a(0, j)) * 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double ratio = std::abs(b(i, j) / a(i, j));
      int e = 0;
      EXPECT_EQ(std::frexp(ratio, &e), 0.5) << i << "," << j;
      EXPECT_NEAR(ratio, d[j] / d[i], 1e-12 * ratio);
    }
  }
  // Balanced row and column norms end up within a factor of a few.
  for (int i = 0; i < n; ++i) {
    const double r = b.row(i).cwiseAbs().sum() - std::abs(b(i, i));
    const double c = b.col(i).cwiseAbs().sum() - std::abs(b(i, i));
    EXPECT_LE(std::max(r, c) / std::min(r, c), 8.0);
  }
}

TEST(Balancing, PreservesEigenvaluesOfModeratelyScaledMatrix) {
  auto gen = testing::rng(24);
  Eigen::MatrixXcd a(6, 6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) a(i, j) = Complex(u(gen), u(gen)) * std::pow(2.0, i - j);
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ea(a), eb(balanced(a));
  std::vector<Complex> va(ea.eigenvalues().data(), ea.eigenvalues().data() + 6);
  std::vector<Complex> vb(eb.eigenvalues().data(), eb.eigenvalues().data() + 6);
  EXPECT_LE(pairedDistance(vb, va), 1e-10);
}

}  // namespace
}  // namespace lagcd
