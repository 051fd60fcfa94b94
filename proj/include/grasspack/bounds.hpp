#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasspack/linalg.hpp"

namespace grasspack {

// Closed-form packing bounds. Every function takes integer parameters and
// returns doubles; bounds that only hold in a restricted regime return
// std::nullopt outside it rather than a sentinel.

/// (n - d) / (d (n - 1)): lower bound on squared coherence of n unit
/// vectors in F^d. Requires n >= d and n >= 2.
double welch_bound(long n, long d);

/// Rankin's first bound on n unit vectors.
struct RankinSimplex {
  double max_inner_product;    // -1 / (n - 1)
  double max_min_distance_sq;  // 2 (1 + 1 / (n - 1))
};
RankinSimplex rankin_simplex_bound(long n);

/// Rankin's second bound: 0 when n >= d + 2.
std::optional<double> rankin_orthoplex_bound(long n, long d);

/// c (d - c) / d * n / (n - 1): upper bound on the squared chordal packing
/// radius of n c-dimensional subspaces of F^d.
double simplex_bound_chordal(long n, long d, long c);

/// c (n c - d) / (d (n - 1)): lower bound on max ||Phi_j* Phi_k||_F^2.
/// Negative (and vacuous) when n c < d.
double simplex_bound_gram(long n, long d, long c);

/// (n c - d) / (d (n - 1)): lower bound on max ||Phi_j* Phi_k||_2^2.
double eitff_bound(long n, long d, long c);

/// Maximum number of equiangular lines: d (d + 1) / 2 over R, d^2 over C.
long gerzon_limit(long d, Field field);

/// Dimension of the real space of traceless self-adjoint d x d matrices.
long traceless_space_dim(long d, Field field);

struct OrthoplexBound {
  double chordal;  // c (d - c) / d, upper bound on the squared packing radius
  double gram;     // c^2 / d, lower bound on max <P_j, P_k>_F
};

/// Applies only when n > gerzon_limit(d, field).
std::optional<OrthoplexBound> orthoplex_bound(long n, long d, long c, Field field);

struct BoundReport {
  long n = 0;
  long d = 0;
  long c = 0;
  Field field = Field::Real;
  std::optional<double> welch;
  double simplex_chordal = 0.0;
  double simplex_gram = 0.0;
  double eitff_spectral = 0.0;
  std::optional<double> orthoplex_chordal;
  std::optional<double> orthoplex_gram;
  long gerzon = 0;
  long traceless_dim = 0;
  std::vector<std::string> notes;
};

BoundReport bound_report(long n, long d, long c, Field field);

}  // namespace grasspack
