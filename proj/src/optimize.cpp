#include "grasspack/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <string>

#include "grasspack/bounds.hpp"
#include "grasspack/construct.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

constexpr int kMaxHalvings = 20;

struct PairValue {
  double value = 0.0;
  Mat grad_j;  // d/dPhi_j
  Mat grad_k;  // d/dPhi_k
};

// Frobenius overlap ||A||_F^2 or spectral surrogate (Tr B^p)^{1/p}, B = A* A,
// for A = Phi_j* Phi_k.
PairValue pair_value(const Mat& phi_j, const Mat& phi_k, const PackConfig& config,
                     bool want_gradient) {
  PairValue out;
  const Mat a = phi_j.adjoint() * phi_k;
  if (config.criterion == Criterion::ChordalOverlap) {
    out.value = a.squaredNorm();
    if (want_gradient) {
      out.grad_j = 2.0 * phi_k * a.adjoint();
      out.grad_k = 2.0 * phi_j * a;
    }
    return out;
  }
  const int p = config.spectral_power;
  const Mat b = a.adjoint() * a;
  Mat b_pm1 = Mat::Identity(b.rows(), b.cols());
  for (int i = 1; i < p; ++i) b_pm1 = b_pm1 * b;
  const double trace = std::max(0.0, (b_pm1 * b).trace().real());
  out.value = std::pow(trace, 1.0 / p);
  if (want_gradient) {
    if (trace <= 0.0) {
      out.grad_j = Mat::Zero(phi_j.rows(), phi_j.cols());
      out.grad_k = Mat::Zero(phi_k.rows(), phi_k.cols());
    } else {
      const double scale = 2.0 * std::pow(trace, 1.0 / p - 1.0);
      out.grad_j = scale * (phi_k * b_pm1 * a.adjoint());
      out.grad_k = scale * (phi_j * a * b_pm1);
    }
  }
  return out;
}

struct SoftMax {
  double value = 0.0;
  std::vector<double> weights;  // d value / d pair value
};

SoftMax soft_max(const std::vector<double>& values, double sharpness) {
  SoftMax out;
  const double top = *std::max_element(values.begin(), values.end());
  double z = 0.0;
  out.weights.resize(values.size());
  for (std::size_t m = 0; m < values.size(); ++m) {
    out.weights[m] = std::exp(sharpness * (values[m] - top));
    z += out.weights[m];
  }
  for (double& w : out.weights) w /= z;
  out.value = top + std::log(z) / sharpness;
  return out;
}

double criterion_of(std::span<const Mat> bases, Criterion criterion) {
  double best = 0.0;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    for (std::size_t k = j + 1; k < bases.size(); ++k) {
      const Mat a = bases[j].adjoint() * bases[k];
      double v = 0.0;
      if (criterion == Criterion::ChordalOverlap) {
        v = a.squaredNorm();
      } else {
        const double s = linalg::spectral_norm(a);
        v = s * s;
      }
      best = std::max(best, v);
    }
  }
  return best;
}

FusionFrame to_frame(Field field, const std::vector<Mat>& mats) {
  std::vector<SubspaceBasis> bases;
  bases.reserve(mats.size());
  for (const auto& m : mats) bases.push_back(SubspaceBasis::from_orthonormal(m));
  return FusionFrame(field, std::move(bases));
}

struct DescentOutcome {
  std::vector<Mat> best;
  double achieved = 0.0;
  int iterations_used = 0;
};

Mat retract(const Mat& x, Field field) {
  Mat q = linalg::orthonormalize(x);
  if (field == Field::Real) q = q.real().cast<Scalar>();
  return q;
}

DescentOutcome descend(std::vector<Mat> x, Field field, const PackConfig& config, int restart,
                       const IterateObserver& observer) {
  double value = objective::smoothed(x, config);
  if (!std::isfinite(value)) throw NumericalFailure("pack: non-finite objective at start");

  DescentOutcome out;
  out.best = x;
  out.achieved = criterion_of(x, config.criterion);

  std::vector<Mat> trial(x.size());
  for (int it = 1; it <= config.iterations; ++it) {
    auto grad = objective::gradient(x, config);
    // Drop the component along each subspace; it only rescales the basis.
    for (std::size_t j = 0; j < x.size(); ++j) grad[j] -= x[j] * (x[j].adjoint() * grad[j]);

    double eta = config.step;
    bool accepted = false;
    for (int h = 0; h <= kMaxHalvings; ++h, eta *= 0.5) {
      for (std::size_t j = 0; j < x.size(); ++j) trial[j] = retract(x[j] - eta * grad[j], field);
      const double next = objective::smoothed(trial, config);
      if (!std::isfinite(next)) {
        throw NumericalFailure("pack: non-finite objective (step size too large?)");
      }
      if (next < value) {
        value = next;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    std::swap(x, trial);
    out.iterations_used = it;

    const double achieved = criterion_of(x, config.criterion);
    if (achieved < out.achieved) {
      out.achieved = achieved;
      out.best = x;
    }
    if (observer) observer(restart, it, to_frame(field, x), achieved);
  }
  return out;
}

std::uint64_t restart_seed(std::uint64_t seed, int restart) {
  // splitmix64 finalizer over (seed, restart).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(restart) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Mat> raw_bases(const FusionFrame& f) {
  std::vector<Mat> out;
  out.reserve(f.bases().size());
  for (const auto& b : f.bases()) out.push_back(b.mat());
  return out;
}

double bound_for(Criterion criterion, long n, long d, long c) {
  return criterion == Criterion::ChordalOverlap ? simplex_bound_gram(n, d, c)
                                                : eitff_bound(n, d, c);
}

PackResult finish(Field field, DescentOutcome outcome, const PackConfig& config, int restart) {
  FusionFrame frame = to_frame(field, outcome.best);
  const long n = static_cast<long>(frame.n());
  const long d = static_cast<long>(frame.d());
  const long c = static_cast<long>(frame.c());
  const double bound = bound_for(config.criterion, n, d, c);
  Certificate cert = certify(frame, config.tolerance);
  return PackResult{std::move(frame), outcome.achieved,        bound,  outcome.achieved - bound,
                    std::move(cert),  outcome.iterations_used, restart};
}

}  // namespace

const char* criterion_name(Criterion criterion) {
  return criterion == Criterion::ChordalOverlap ? "chordal" : "spectral";
}

void PackConfig::validate() const {
  if (iterations < 1) throw InvalidInput("iterations must be positive");
  if (restarts < 1) throw InvalidInput("restarts must be positive");
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidInput("step must be positive");
  if (!(smoothing > 0.0) || !std::isfinite(smoothing)) {
    throw InvalidInput("smoothing must be positive");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw InvalidInput("tolerance must be positive");
  }
  if (spectral_power < 1) throw InvalidInput("spectral_power must be positive");
}

double criterion_value(const FusionFrame& f, Criterion criterion) {
  if (f.n() < 2) throw InvalidInput("criterion_value: need n >= 2 subspaces");
  return criterion_of(raw_bases(f), criterion);
}

PackResult pack(Field field, long d, long c, long n, const PackConfig& config,
                const IterateObserver& observer) {
  config.validate();
  if (d < 1 || c < 1 || c > d) throw InvalidInput("pack: need 1 <= c <= d");
  if (n < 2) throw InvalidInput("pack: n must be at least 2");

  auto run = [&](int restart) {
    const FusionFrame start = random_frame(field, d, c, n, restart_seed(config.seed, restart));
    return descend(raw_bases(start), field, config, restart, observer);
  };

  std::vector<DescentOutcome> outcomes;
  outcomes.reserve(static_cast<std::size_t>(config.restarts));
  if (observer) {
    for (int r = 0; r < config.restarts; ++r) outcomes.push_back(run(r));
  } else {
    std::vector<std::future<DescentOutcome>> jobs;
    for (int r = 0; r < config.restarts; ++r) jobs.push_back(std::async(std::launch::async, run, r));
    for (auto& job : jobs) outcomes.push_back(job.get());
  }

  int best = 0;
  for (int r = 1; r < config.restarts; ++r) {
    if (outcomes[static_cast<std::size_t>(r)].achieved <
        outcomes[static_cast<std::size_t>(best)].achieved) {
      best = r;
    }
  }
  return finish(field, std::move(outcomes[static_cast<std::size_t>(best)]), config, best);
}

PackResult polish(const FusionFrame& f, const PackConfig& config, const IterateObserver& observer) {
  config.validate();
  if (f.n() < 2) throw InvalidInput("polish: need n >= 2 subspaces");
  return finish(f.field(), descend(raw_bases(f), f.field(), config, 0, observer), config, 0);
}

namespace objective {

double smoothed(std::span<const Mat> bases, const PackConfig& config) {
  std::vector<double> values;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    for (std::size_t k = j + 1; k < bases.size(); ++k) {
      values.push_back(pair_value(bases[j], bases[k], config, false).value);
    }
  }
  if (values.empty()) throw InvalidInput("objective: need at least two bases");
  return soft_max(values, config.smoothing).value;
}

std::vector<Mat> gradient(std::span<const Mat> bases, const PackConfig& config) {
  std::vector<PairValue> pairs;
  std::vector<double> values;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    for (std::size_t k = j + 1; k < bases.size(); ++k) {
      pairs.push_back(pair_value(bases[j], bases[k], config, true));
      values.push_back(pairs.back().value);
    }
  }
  if (values.empty()) throw InvalidInput("objective: need at least two bases");
  const auto sm = soft_max(values, config.smoothing);

  std::vector<Mat> grad;
  grad.reserve(bases.size());
  for (const auto& b : bases) grad.push_back(Mat::Zero(b.rows(), b.cols()));
  std::size_t m = 0;
  for (std::size_t j = 0; j < bases.size(); ++j) {
    for (std::size_t k = j + 1; k < bases.size(); ++k, ++m) {
      grad[j] += sm.weights[m] * pairs[m].grad_j;
      grad[k] += sm.weights[m] * pairs[m].grad_k;
    }
  }
  return grad;
}

}  // namespace objective
}  // namespace grasspack
