#pragma once

#include <optional>

#include "grasspack/metrics.hpp"

namespace grasspack {

struct TightCheck {
  bool flag = false;
  double residual = 0.0;  // ||sum P_j - alpha I||_F / (alpha sqrt(d))
  double alpha = 0.0;     // nc / d
};

struct EquichordalCheck {
  bool flag = false;
  double beta = 0.0;       // mean pairwise ||Phi_j* Phi_k||_F^2
  double deviation = 0.0;  // max pairwise |overlap - beta|
};

struct EquiisoclinicCheck {
  bool flag = false;
  double sigma_sq = 0.0;   // mean pairwise ||Phi_j* Phi_k||_F^2 / c
  double deviation = 0.0;  // max pairwise ||A* A - sigma^2 I||_F
};

struct EquiangularCheck {
  bool flag = false;
  double beta = 0.0;  // mean pairwise |<phi_j, phi_k>|^2
  double deviation = 0.0;
};

/// Structure verdicts with the residuals that produced them. Flags are never
/// "almost" true: each one is a strict comparison of a residual against the
/// scale-relative tolerance.
struct Certificate {
  double tolerance = kDefaultTolerance;
  bool is_tight = false;
  double tight_residual = 0.0;
  double alpha = 0.0;
  bool is_equichordal = false;
  double beta = 0.0;
  double equichordal_deviation = 0.0;
  bool is_equiisoclinic = false;
  double sigma_sq = 0.0;
  double equiisoclinic_deviation = 0.0;
  bool is_ectff = false;
  bool is_eitff = false;
  double simplex_gap = 0.0;               // max ||A||_F^2 - simplex_bound_gram
  double eitff_gap = 0.0;                 // max ||A||_2^2 - eitff_bound
  std::optional<double> orthoplex_gap;    // max ||A||_F^2 - c^2/d, when applicable
};

TightCheck is_tight_fusion_frame(const FusionFrame& f, double tol = kDefaultTolerance);
EquichordalCheck is_equichordal(const FusionFrame& f, double tol = kDefaultTolerance);
EquiisoclinicCheck is_equiisoclinic(const FusionFrame& f, double tol = kDefaultTolerance);
Certificate certify(const FusionFrame& f, double tol = kDefaultTolerance);

// Unit-vector (c = 1) predicates. All throw InvalidInput when c != 1.
TightCheck is_unit_norm_tight_frame(const FusionFrame& vectors, double tol = kDefaultTolerance);
EquiangularCheck is_equiangular(const FusionFrame& vectors, double tol = kDefaultTolerance);
bool is_etf(const FusionFrame& vectors, double tol = kDefaultTolerance);
bool is_regular_simplex(const FusionFrame& vectors, double tol = kDefaultTolerance);

}  // namespace grasspack
