#include "grasspack/construct.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "grasspack/errors.hpp"

namespace grasspack {

DifferenceSet::DifferenceSet(long modulus, std::vector<long> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
  if (modulus_ < 1) throw InvalidInput("difference set: modulus must be positive");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw InvalidInput("difference set: repeated element");
  }
  for (long k : elements_) {
    if (k < 0 || k >= modulus_) {
      throw InvalidInput("difference set: element " + std::to_string(k) + " outside [0, " +
                         std::to_string(modulus_) + ")");
    }
  }
}

FusionFrame regular_simplex(long n) {
  if (n < 2) throw InvalidInput("regular_simplex: n must be at least 2");
  // Centered standard basis e_i - 1/n spans the complement of the all-ones
  // vector; the first n-1 of them are independent.
  Mat centered = Mat::Identity(n, n);
  centered.array() -= 1.0 / static_cast<double>(n);
  const Mat q = linalg::orthonormalize(centered.leftCols(n - 1));
  const double scale = 1.0 / std::sqrt(1.0 - 1.0 / static_cast<double>(n));
  std::vector<SubspaceBasis> bases;
  bases.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    Mat v = scale * q.row(i).adjoint();
    v /= v.norm();
    bases.push_back(SubspaceBasis::from_orthonormal(std::move(v)));
  }
  return FusionFrame(Field::Real, std::move(bases));
}

FusionFrame orthoplex(long d) {
  if (d < 1) throw InvalidInput("orthoplex: d must be positive");
  std::vector<SubspaceBasis> bases;
  bases.reserve(static_cast<std::size_t>(2 * d));
  for (long j = 0; j < d; ++j) {
    for (double sign : {1.0, -1.0}) {
      Mat v = Mat::Zero(d, 1);
      v(j, 0) = sign;
      bases.push_back(SubspaceBasis::from_orthonormal(std::move(v)));
    }
  }
  return FusionFrame(Field::Real, std::move(bases));
}

FusionFrame harmonic_etf(const DifferenceSet& ds) {
  const auto& elems = ds.elements();
  const long big_n = ds.modulus();
  const long d = static_cast<long>(elems.size());
  if (d < 1) throw InvalidInput("harmonic_etf: empty index set");
  if (d >= big_n) throw InvalidInput("harmonic_etf: index set is all of Z_N");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<SubspaceBasis> bases;
  bases.reserve(static_cast<std::size_t>(big_n));
  for (long j = 0; j < big_n; ++j) {
    Mat v(d, 1);
    for (long r = 0; r < d; ++r) {
      // Reduce j*k mod N first so the phase argument stays small.
      const long m = (j * elems[static_cast<std::size_t>(r)]) % big_n;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) /
                           static_cast<double>(big_n);
      v(r, 0) = scale * Scalar(std::cos(angle), std::sin(angle));
    }
    bases.push_back(SubspaceBasis::from_orthonormal(std::move(v)));
  }
  return FusionFrame(Field::Complex, std::move(bases));
}

FusionFrame tensor_eitff(const FusionFrame& etf, long c) {
  if (etf.c() != 1) throw InvalidInput("tensor_eitff: input must be a unit-vector frame (c = 1)");
  if (c < 1) throw InvalidInput("tensor_eitff: c must be positive");
  const Mat id = linalg::identity(c);
  std::vector<SubspaceBasis> bases;
  bases.reserve(etf.bases().size());
  for (const auto& b : etf.bases()) {
    bases.push_back(SubspaceBasis::from_orthonormal(linalg::kron(b.mat(), id)));
  }
  return FusionFrame(etf.field(), std::move(bases));
}

FusionFrame random_frame(Field field, long d, long c, long n, std::uint64_t seed) {
  if (d < 1 || c < 1 || c > d) throw InvalidInput("random_frame: need 1 <= c <= d");
  if (n < 1) throw InvalidInput("random_frame: n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<SubspaceBasis> bases;
  bases.reserve(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    Mat g(d, c);
    for (Index col = 0; col < c; ++col) {
      for (Index row = 0; row < d; ++row) {
        const double re = gauss(rng);
        const double im = field == Field::Complex ? gauss(rng) : 0.0;
        g(row, col) = Scalar(re, im);
      }
    }
    bases.push_back(SubspaceBasis::from_span(g));
  }
  return FusionFrame(field, std::move(bases));
}

FusionFrame frame_union(const FusionFrame& a, const FusionFrame& b) {
  if (a.field() != b.field()) throw InvalidInput("frame_union: field mismatch");
  std::vector<SubspaceBasis> bases = a.bases();
  bases.insert(bases.end(), b.bases().begin(), b.bases().end());
  return FusionFrame(a.field(), std::move(bases));
}

}  // namespace grasspack
