#pragma once

#include <cstdint>
#include <vector>

#include "grasspack/metrics.hpp"

namespace grasspack {

/// An index set D in Z_N. Only distinctness and range are validated; whether
/// D is a genuine difference set is the caller's concern.
class DifferenceSet {
 public:
  /// Sorts `elements` and throws InvalidInput on duplicates, residues out of
  /// [0, modulus), or modulus < 1.
  DifferenceSet(long modulus, std::vector<long> elements);

  long modulus() const { return modulus_; }
  const std::vector<long>& elements() const { return elements_; }

 private:
  long modulus_;
  std::vector<long> elements_;
};

/// n unit vectors in R^{n-1} with pairwise inner products -1/(n-1).
FusionFrame regular_simplex(long n);

/// {+e_1, -e_1, ..., +e_d, -e_d} in R^d.
FusionFrame orthoplex(long d);

/// Rows of the N-point character table restricted to D and scaled by
/// 1/sqrt|D|: vector j has entry exp(2 pi i j k / N) / sqrt|D| at the
/// coordinate of k in D. Requires 1 <= |D| < N.
FusionFrame harmonic_etf(const DifferenceSet& ds);

/// Subspaces spanned by phi_j (x) I_c for a unit-vector frame {phi_j} in F^e;
/// the result lives in F^{ce}.
FusionFrame tensor_eitff(const FusionFrame& etf, long c);

/// Each basis orthonormalizes a d x c matrix of independent standard
/// Gaussians (real and imaginary parts for Complex) drawn from
/// std::mt19937_64 seeded with `seed`.
FusionFrame random_frame(Field field, long d, long c, long n, std::uint64_t seed);

/// Concatenation of two frames with the same (field, d, c).
FusionFrame frame_union(const FusionFrame& a, const FusionFrame& b);

}  // namespace grasspack
