#include <gtest/gtest.h>

#include <random>

#include "grasspack/bounds.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"
#include "grasspack/optimize.hpp"
#include "oracles.hpp"

using namespace grasspack;

namespace {

std::vector<Mat> mats_of(const FusionFrame& f) {
  std::vector<Mat> out;
  for (const auto& b : f.bases()) out.push_back(b.mat());
  return out;
}

// Central differences on every real coordinate (and imaginary, for complex).
std::vector<Mat> finite_difference_gradient(std::vector<Mat> x, const PackConfig& config,
                                            bool complex, double h) {
  std::vector<Mat> g;
  for (auto& m : x) g.push_back(Mat::Zero(m.rows(), m.cols()));
  for (std::size_t b = 0; b < x.size(); ++b) {
    for (Index i = 0; i < x[b].rows(); ++i) {
      for (Index j = 0; j < x[b].cols(); ++j) {
        for (Scalar dir : {Scalar(1.0, 0.0), Scalar(0.0, 1.0)}) {
          if (dir.imag() != 0.0 && !complex) continue;
          const Scalar keep = x[b](i, j);
          x[b](i, j) = keep + h * dir;
          const double up = objective::smoothed(x, config);
          x[b](i, j) = keep - h * dir;
          const double down = objective::smoothed(x, config);
          x[b](i, j) = keep;
          g[b](i, j) += dir * ((up - down) / (2.0 * h));
        }
      }
    }
  }
  return g;
}

double relative_error(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    num += (a[k] - b[k]).squaredNorm();
    den += b[k].squaredNorm();
  }
  return std::sqrt(num / den);
}

PackConfig fast_config(Criterion criterion = Criterion::ChordalOverlap) {
  PackConfig cfg;
  cfg.criterion = criterion;
  cfg.iterations = 300;
  cfg.restarts = 3;
  return cfg;
}

}  // namespace

TEST(Optimize, ConfigValidation) {
  PackConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.step = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidInput);
  cfg = PackConfig{};
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), InvalidInput);
  cfg = PackConfig{};
  cfg.smoothing = -1.0;
  EXPECT_THROW(cfg.validate(), InvalidInput);
  cfg = PackConfig{};
  cfg.iterations = 0;
  EXPECT_THROW(pack(Field::Real, 2, 1, 3, cfg), InvalidInput);
}

TEST(Optimize, RejectsBadDimensions) {
  EXPECT_THROW(pack(Field::Real, 2, 3, 3, fast_config()), InvalidInput);
  EXPECT_THROW(pack(Field::Real, 2, 1, 1, fast_config()), InvalidInput);
}

TEST(Optimize, NonFiniteStepIsReported) {
  PackConfig cfg = fast_config();
  cfg.step = 1e308;  // first trial step overflows
  EXPECT_THROW(pack(Field::Real, 3, 1, 5, cfg), NumericalFailure);
}

TEST(Optimize, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(79);
  for (Criterion criterion : {Criterion::ChordalOverlap, Criterion::SpectralOverlap}) {
    for (Field field : {Field::Real, Field::Complex}) {
      PackConfig cfg;
      cfg.criterion = criterion;
      for (int t = 0; t < 5; ++t) {
        const auto x = mats_of(random_frame(field, 4, 2, 3, rng()));
        const auto analytic = objective::gradient(x, cfg);
        const auto numeric = finite_difference_gradient(x, cfg, field == Field::Complex, 1e-6);
        EXPECT_LT(relative_error(numeric, analytic), 1e-5);
      }
    }
  }
}

TEST(Optimize, SmoothedObjectiveBracketsTrueMax) {
  PackConfig cfg;
  const auto f = random_frame(Field::Real, 4, 2, 5, 3);
  const double smooth = objective::smoothed(mats_of(f), cfg);
  const double exact = criterion_value(f, Criterion::ChordalOverlap);
  EXPECT_GE(smooth, exact);
  EXPECT_LE(smooth, exact + std::log(10.0) / cfg.smoothing + 1e-15);
}

TEST(Optimize, PackFindsSimplexEtf) {
  const auto result = pack(Field::Real, 2, 1, 3, PackConfig{});
  EXPECT_LE(result.achieved, welch_bound(3, 2) + 1e-4);
  EXPECT_GE(result.gap, -1e-8);
  EXPECT_NEAR(result.bound, 0.25, 0.0);
}

TEST(Optimize, PackFindsOrthogonalPlanes) {
  const auto result = pack(Field::Real, 4, 2, 2, fast_config());
  EXPECT_LT(result.achieved, 1e-6);
}

TEST(Optimize, PackReachesSimplexBoundForThreePlanesInR4) {
  const auto result = pack(Field::Real, 4, 2, 3, PackConfig{});
  EXPECT_LE(result.achieved, simplex_bound_gram(3, 4, 2) + 1e-3);
}

TEST(Optimize, SpectralCriterionRespectsEitffBound) {
  const auto result = pack(Field::Complex, 4, 2, 3, fast_config(Criterion::SpectralOverlap));
  EXPECT_NEAR(result.bound, eitff_bound(3, 4, 2), 0.0);
  EXPECT_GE(result.gap, -1e-8);
  EXPECT_LE(result.achieved, eitff_bound(3, 4, 2) + 1e-2);
}

TEST(Optimize, EveryIterateIsValidAndAboveBound) {
  for (Criterion criterion : {Criterion::ChordalOverlap, Criterion::SpectralOverlap}) {
    PackConfig cfg = fast_config(criterion);
    cfg.iterations = 100;
    const double bound = criterion == Criterion::ChordalOverlap ? simplex_bound_gram(4, 5, 2)
                                                                : eitff_bound(4, 5, 2);
    int calls = 0;
    pack(Field::Complex, 5, 2, 4, cfg, [&](int, int, const FusionFrame& f, double achieved) {
      ++calls;
      for (const auto& b : f.bases()) EXPECT_LT(linalg::orthonormality_deviation(b.mat()), 1e-10);
      EXPECT_GE(achieved, bound - 1e-10);
      EXPECT_NEAR(achieved, criterion_value(f, criterion), 1e-15);
    });
    EXPECT_GT(calls, 0);
  }
}

TEST(Optimize, PackIsDeterministic) {
  const auto a = pack(Field::Complex, 4, 2, 4, fast_config());
  const auto b = pack(Field::Complex, 4, 2, 4, fast_config());
  EXPECT_EQ(a.achieved, b.achieved);
  EXPECT_EQ(a.restart_index, b.restart_index);
  EXPECT_EQ(a.iterations_used, b.iterations_used);
  for (Index j = 0; j < a.frame.n(); ++j) EXPECT_EQ(a.frame.basis(j).mat(), b.frame.basis(j).mat());

  // Parallel and sequential execution pick the same restart.
  const auto c = pack(Field::Complex, 4, 2, 4, fast_config(), [](int, int, const FusionFrame&, double) {});
  EXPECT_EQ(a.achieved, c.achieved);
  EXPECT_EQ(a.restart_index, c.restart_index);
}

TEST(Optimize, ResultCarriesCertificateOfReturnedFrame) {
  const auto r = pack(Field::Real, 2, 1, 3, fast_config());
  const auto cert = certify(r.frame, r.certificate.tolerance);
  EXPECT_EQ(cert.beta, r.certificate.beta);
  EXPECT_EQ(cert.tight_residual, r.certificate.tight_residual);
  EXPECT_NEAR(r.gap, r.achieved - r.bound, 0.0);
}

TEST(Optimize, PolishKeepsBoundAttainingFrame) {
  const auto f = tensor_eitff(regular_simplex(3), 2);
  const double start = criterion_value(f, Criterion::ChordalOverlap);
  const auto r = polish(f, fast_config());
  EXPECT_NEAR(r.achieved, start, 1e-9);
  EXPECT_TRUE(r.certificate.is_eitff);
}

TEST(Optimize, PolishImprovesRandomFrame) {
  const auto f = random_frame(Field::Real, 4, 2, 3, 5);
  const double start = criterion_value(f, Criterion::ChordalOverlap);
  const auto r = polish(f, fast_config());
  EXPECT_LT(r.achieved, start);
  EXPECT_GE(r.gap, -1e-8);
}

TEST(Optimize, PolishOfOrthogonalFrameStaysAtZero) {
  Mat a = Mat::Zero(4, 2), b = Mat::Zero(4, 2);
  a(0, 0) = a(1, 1) = 1.0;
  b(2, 0) = b(3, 1) = 1.0;
  const FusionFrame f(Field::Real,
                      {SubspaceBasis::from_orthonormal(a), SubspaceBasis::from_orthonormal(b)});
  EXPECT_EQ(polish(f, fast_config()).achieved, 0.0);
}

TEST(Optimize, PolishNeverWorsens) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (Criterion criterion : {Criterion::ChordalOverlap, Criterion::SpectralOverlap}) {
      const auto f = random_frame(Field::Complex, 5, 2, 6, seed);
      PackConfig cfg = fast_config(criterion);
      cfg.iterations = 50;
      EXPECT_LE(polish(f, cfg).achieved, criterion_value(f, criterion) + cfg.tolerance);
    }
  }
}
