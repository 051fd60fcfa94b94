#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "grasspack/bounds.hpp"
#include "grasspack/certify.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"

using namespace grasspack;

namespace {

// |<phi_j, phi_k>|^2 for harmonic vectors from the character sum
// |sum_{k in D} exp(2 pi i (k_j - k_i) k / N)|^2 / |D|^2.
double harmonic_overlap_oracle(long big_n, const std::vector<long>& set, long i, long j) {
  std::complex<double> acc{0.0, 0.0};
  for (long k : set) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j - i) * k) /
                         static_cast<double>(big_n);
    acc += std::polar(1.0, angle);
  }
  const double size = static_cast<double>(set.size());
  return std::norm(acc) / (size * size);
}

}  // namespace

TEST(Construct, DifferenceSetValidation) {
  EXPECT_THROW(DifferenceSet(7, {1, 1, 2}), InvalidInput);
  EXPECT_THROW(DifferenceSet(7, {1, 7}), InvalidInput);
  EXPECT_THROW(DifferenceSet(7, {-1}), InvalidInput);
  EXPECT_THROW(DifferenceSet(0, {}), InvalidInput);
  EXPECT_EQ(DifferenceSet(7, {4, 1, 2}).elements(), (std::vector<long>{1, 2, 4}));
}

TEST(Construct, RegularSimplexExamples) {
  const auto s2 = regular_simplex(2);
  ASSERT_EQ(s2.d(), 1);
  EXPECT_NEAR(s2.basis(0).mat()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(s2.basis(1).mat()(0, 0).real(), -1.0, 1e-15);

  for (long n : {3L, 4L}) {
    const auto s = regular_simplex(n);
    EXPECT_EQ(s.d(), n - 1);
    EXPECT_EQ(s.n(), n);
    const Mat g = fusion_gram(s);
    for (Index j = 0; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        EXPECT_NEAR(g(j, k).real(), -1.0 / static_cast<double>(n - 1), 1e-12);
      }
    }
  }
  EXPECT_THROW(regular_simplex(1), InvalidInput);
}

TEST(Construct, RegularSimplexProperties) {
  for (long n = 2; n <= 9; ++n) {
    const auto s = regular_simplex(n);
    EXPECT_EQ(s.field(), Field::Real);
    EXPECT_LT(s.synthesis().rowwise().sum().norm(), 1e-12);  // sum of vectors is 0
    EXPECT_TRUE(is_regular_simplex(s, 1e-12));
    EXPECT_TRUE(is_etf(s));
    EXPECT_NEAR(max_signed_inner_product(s), rankin_simplex_bound(n).max_inner_product, 1e-12);
  }
}

TEST(Construct, OrthoplexExamples) {
  const auto o1 = orthoplex(1);
  ASSERT_EQ(o1.n(), 2);
  EXPECT_EQ(o1.basis(0).mat()(0, 0), Scalar(1.0));
  EXPECT_EQ(o1.basis(1).mat()(0, 0), Scalar(-1.0));

  const auto o3 = orthoplex(3);
  EXPECT_EQ(o3.n(), 6);
  EXPECT_EQ(max_signed_inner_product(o3), 0.0);

  const auto o2 = orthoplex(2);
  EXPECT_EQ(o2.n(), 4);
  EXPECT_DOUBLE_EQ(coherence(o2), 1.0);
  EXPECT_EQ(max_signed_inner_product(o2), 0.0);
  EXPECT_THROW(orthoplex(0), InvalidInput);
}

TEST(Construct, OrthoplexMeetsRankinSecondBound) {
  for (long d = 2; d <= 6; ++d) {
    const auto bound = rankin_orthoplex_bound(2 * d, d);
    ASSERT_TRUE(bound.has_value());
    EXPECT_EQ(max_signed_inner_product(orthoplex(d)), *bound);
  }
  // d = 1: two vectors are the simplex regime, and {1, -1} is the simplex.
  EXPECT_FALSE(rankin_orthoplex_bound(2, 1).has_value());
  EXPECT_EQ(max_signed_inner_product(orthoplex(1)), rankin_simplex_bound(2).max_inner_product);
}

TEST(Construct, HarmonicEtfMatchesCharacterSumOracle) {
  const std::vector<long> set{1, 2, 4};
  const auto f = harmonic_etf(DifferenceSet(7, set));
  EXPECT_EQ(f.field(), Field::Complex);
  EXPECT_EQ(f.d(), 3);
  EXPECT_EQ(f.n(), 7);
  double worst = 0.0;
  for (long i = 0; i < 7; ++i) {
    for (long j = i + 1; j < 7; ++j) {
      const double got =
          std::norm(f.basis(i).mat().col(0).dot(f.basis(j).mat().col(0)));
      const double want = harmonic_overlap_oracle(7, set, i, j);
      EXPECT_NEAR(got, want, 1e-14);
      worst = std::max(worst, want);
    }
  }
  EXPECT_NEAR(worst, 2.0 / 9.0, 1e-14);
  EXPECT_NEAR(coherence(f) * coherence(f), welch_bound(7, 3), 1e-12);
  EXPECT_TRUE(is_etf(f));
}

TEST(Construct, HarmonicEdgeCases) {
  const auto one = harmonic_etf(DifferenceSet(5, {0}));
  EXPECT_EQ(one.d(), 1);
  EXPECT_NEAR(coherence(one), 1.0, 1e-15);

  // Full set: geometric sums vanish, so distinct rows are orthogonal.
  const std::vector<long> full{0, 1, 2, 3, 4};
  for (long i = 0; i < 5; ++i) {
    for (long j = i + 1; j < 5; ++j) EXPECT_NEAR(harmonic_overlap_oracle(5, full, i, j), 0.0, 1e-28);
  }
  EXPECT_THROW(harmonic_etf(DifferenceSet(5, full)), InvalidInput);
  EXPECT_THROW(harmonic_etf(DifferenceSet(5, {})), InvalidInput);
}

TEST(Construct, HarmonicFramesAreTightForAnyIndexSet) {
  for (const auto& set : std::vector<std::vector<long>>{{1, 2, 4}, {0, 1}, {0, 2, 3, 7}, {5}}) {
    const auto f = harmonic_etf(DifferenceSet(11, set));
    for (const auto& b : f.bases()) EXPECT_NEAR(b.mat().norm(), 1.0, 1e-12);
    const auto t = is_unit_norm_tight_frame(f);
    EXPECT_TRUE(t.flag);
    EXPECT_NEAR(t.alpha, 11.0 / static_cast<double>(set.size()), 1e-15);
  }
  // {0, 1, 3} is not a difference set mod 11, so equiangularity fails.
  EXPECT_FALSE(is_equiangular(harmonic_etf(DifferenceSet(11, {0, 1, 3}))).flag);
}

TEST(Construct, TensorEitffExamples) {
  const auto s = regular_simplex(3);
  const auto same = tensor_eitff(s, 1);
  for (Index j = 0; j < s.n(); ++j) EXPECT_EQ(same.basis(j).mat(), s.basis(j).mat());

  const auto planes = tensor_eitff(s, 2);
  EXPECT_EQ(planes.d(), 4);
  EXPECT_EQ(planes.c(), 2);
  auto cert = certify(planes);
  EXPECT_TRUE(cert.is_eitff);
  EXPECT_NEAR(cert.sigma_sq, 0.25, 1e-12);

  const auto etf = harmonic_etf(DifferenceSet(7, {1, 2, 4}));
  const auto big = tensor_eitff(etf, 2);
  EXPECT_EQ(big.d(), 6);
  EXPECT_EQ(big.field(), Field::Complex);
  cert = certify(big);
  EXPECT_TRUE(cert.is_eitff);
  EXPECT_NEAR(cert.sigma_sq, 2.0 / 9.0, 1e-12);
  EXPECT_NEAR(cert.sigma_sq, coherence(etf) * coherence(etf), 1e-12);

  EXPECT_THROW(tensor_eitff(planes, 2), InvalidInput);
}

TEST(Construct, TensorFrameOperatorIsScaledIdentity) {
  for (long n = 3; n <= 6; ++n) {
    for (long c = 1; c <= 3; ++c) {
      const auto f = tensor_eitff(regular_simplex(n), c);
      const double alpha = static_cast<double>(n * c) / static_cast<double>(f.d());
      EXPECT_LT((fusion_frame_operator(f) - alpha * linalg::identity(f.d())).cwiseAbs().maxCoeff(),
                1e-10);
    }
  }
}

TEST(Construct, RandomFrameIsDeterministicAndOrthonormal) {
  const auto a = random_frame(Field::Real, 2, 1, 3, 7);
  const auto b = random_frame(Field::Real, 2, 1, 3, 7);
  for (Index j = 0; j < a.n(); ++j) EXPECT_EQ(a.basis(j).mat(), b.basis(j).mat());

  const auto c = random_frame(Field::Complex, 6, 3, 5, 8);
  for (const auto& basis : c.bases()) EXPECT_LT(linalg::orthonormality_deviation(basis.mat()), 1e-12);
  EXPECT_GT(linalg::max_imag(c.basis(0).mat()), 0.0);
  EXPECT_EQ(linalg::max_imag(a.basis(0).mat()), 0.0);

  const auto cert = certify(random_frame(Field::Real, 4, 2, 3, 1));
  EXPECT_FALSE(cert.is_tight || cert.is_equichordal || cert.is_equiisoclinic);

  EXPECT_THROW(random_frame(Field::Real, 2, 3, 3, 1), InvalidInput);
}

TEST(Construct, OrthoplexNeverBeatsOrthoplexBound) {
  for (long d = 1; d <= 2; ++d) {
    const auto f = orthoplex(d);
    const auto bound = orthoplex_bound(f.n(), d, 1, Field::Real);
    ASSERT_TRUE(bound.has_value());
    EXPECT_GE(coherence(f) * coherence(f), bound->gram);
    EXPECT_LE(min_chordal_packing(f), bound->chordal);
  }
}
