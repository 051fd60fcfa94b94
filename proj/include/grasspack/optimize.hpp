#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "grasspack/certify.hpp"
#include "grasspack/metrics.hpp"

namespace grasspack {

enum class Criterion {
  ChordalOverlap,   // max ||Phi_j* Phi_k||_F^2
  SpectralOverlap,  // max ||Phi_j* Phi_k||_2^2
};

const char* criterion_name(Criterion criterion);

struct PackConfig {
  Criterion criterion = Criterion::ChordalOverlap;
  int iterations = 2000;
  int restarts = 10;
  double step = 0.05;
  double smoothing = 200.0;  // soft-max sharpness
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  int spectral_power = 4;  // p in (Tr[(A* A)^p])^{1/p}

  /// Throws InvalidInput unless every count and scale is strictly positive
  /// and finite.
  void validate() const;
};

struct PackResult {
  FusionFrame frame;
  double achieved = 0.0;  // true (unsmoothed) criterion value on `frame`
  double bound = 0.0;     // simplex_bound_gram or eitff_bound
  double gap = 0.0;       // achieved - bound
  Certificate certificate;
  int iterations_used = 0;
  int restart_index = 0;
};

/// Called after every accepted step with the current iterate. When an
/// observer is supplied restarts run sequentially on the calling thread.
using IterateObserver =
    std::function<void(int restart, int iteration, const FusionFrame& frame, double achieved)>;

/// Runs `config.restarts` seeded descents from random frames and returns the
/// best by achieved value (lowest restart index on ties).
PackResult pack(Field field, long d, long c, long n, const PackConfig& config,
                const IterateObserver& observer = {});

/// One descent starting from `f`. The returned achieved value never exceeds
/// the starting one.
PackResult polish(const FusionFrame& f, const PackConfig& config,
                  const IterateObserver& observer = {});

/// Unsmoothed criterion value max_{j<k} of the pairwise overlap.
double criterion_value(const FusionFrame& f, Criterion criterion);

namespace objective {

/// Soft-max over pairs j < k of the pairwise overlap (Frobenius) or its
/// power-trace surrogate (spectral). Inputs are raw d x c matrices and need
/// not be orthonormal.
double smoothed(std::span<const Mat> bases, const PackConfig& config);

/// Euclidean gradient of `smoothed` with respect to each basis, in the
/// convention G = dF/dRe(X) + i dF/dIm(X), so dF = Re Tr(G* dX).
std::vector<Mat> gradient(std::span<const Mat> bases, const PackConfig& config);

}  // namespace objective
}  // namespace grasspack
