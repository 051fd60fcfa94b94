#include "grasspack/certify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grasspack/bounds.hpp"
#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

void require_pairs(const FusionFrame& f, const char* op) {
  if (f.n() < 2) throw InvalidInput(std::string(op) + ": need n >= 2 subspaces");
}

void require_lines(const FusionFrame& f, const char* op) {
  if (f.c() != 1) {
    throw InvalidInput(std::string(op) + ": requires c = 1, got c = " + std::to_string(f.c()));
  }
}

// Pairwise ||Phi_j* Phi_k||_F^2 in fixed (j < k) order.
std::vector<double> pair_overlaps(const FusionFrame& f) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(f.n() * (f.n() - 1) / 2));
  for (Index j = 0; j < f.n(); ++j) {
    for (Index k = j + 1; k < f.n(); ++k) {
      out.push_back(linalg::frobenius_norm_sq(cross_gramian(f.basis(j), f.basis(k))));
    }
  }
  return out;
}

double mean(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

}  // namespace

TightCheck is_tight_fusion_frame(const FusionFrame& f, double tol) {
  TightCheck out;
  const double d = static_cast<double>(f.d());
  out.alpha = static_cast<double>(f.n() * f.c()) / d;
  Mat s = fusion_frame_operator(f);
  s.diagonal().array() -= out.alpha;
  out.residual = std::sqrt(linalg::frobenius_norm_sq(s)) / (out.alpha * std::sqrt(d));
  out.flag = out.residual <= tol;
  return out;
}

EquichordalCheck is_equichordal(const FusionFrame& f, double tol) {
  require_pairs(f, "is_equichordal");
  const auto overlaps = pair_overlaps(f);
  EquichordalCheck out;
  out.beta = mean(overlaps);
  for (double x : overlaps) out.deviation = std::max(out.deviation, std::abs(x - out.beta));
  out.flag = out.deviation <= tol * std::max(1.0, out.beta);
  return out;
}

EquiisoclinicCheck is_equiisoclinic(const FusionFrame& f, double tol) {
  require_pairs(f, "is_equiisoclinic");
  const double c = static_cast<double>(f.c());
  EquiisoclinicCheck out;
  out.sigma_sq = mean(pair_overlaps(f)) / c;
  const Mat target = out.sigma_sq * Mat::Identity(f.c(), f.c());
  for (Index j = 0; j < f.n(); ++j) {
    for (Index k = j + 1; k < f.n(); ++k) {
      const Mat a = cross_gramian(f.basis(j), f.basis(k));
      const double dev = std::sqrt(linalg::frobenius_norm_sq(a.adjoint() * a - target));
      out.deviation = std::max(out.deviation, dev);
    }
  }
  // Projection form P_k P_j P_k = sigma^2 P_k on the first pair.
  const Mat p0 = projection(f.basis(0));
  const Mat p1 = projection(f.basis(1));
  const double proj_dev = std::sqrt(linalg::frobenius_norm_sq(p1 * p0 * p1 - out.sigma_sq * p1));
  out.deviation = std::max(out.deviation, proj_dev);
  out.flag = out.deviation <= tol * std::max(1.0, out.sigma_sq * std::sqrt(c));
  return out;
}

Certificate certify(const FusionFrame& f, double tol) {
  require_pairs(f, "certify");
  const long n = static_cast<long>(f.n());
  const long d = static_cast<long>(f.d());
  const long c = static_cast<long>(f.c());

  Certificate cert;
  cert.tolerance = tol;
  const auto tight = is_tight_fusion_frame(f, tol);
  const auto chordal = is_equichordal(f, tol);
  const auto isoclinic = is_equiisoclinic(f, tol);
  cert.is_tight = tight.flag;
  cert.tight_residual = tight.residual;
  cert.alpha = tight.alpha;
  cert.is_equichordal = chordal.flag;
  cert.beta = chordal.beta;
  cert.equichordal_deviation = chordal.deviation;
  cert.is_equiisoclinic = isoclinic.flag;
  cert.sigma_sq = isoclinic.sigma_sq;
  cert.equiisoclinic_deviation = isoclinic.deviation;
  cert.is_ectff = cert.is_tight && cert.is_equichordal;
  cert.is_eitff = cert.is_tight && cert.is_equiisoclinic;

  const double max_f = max_chordal_overlap(f);
  cert.simplex_gap = max_f - simplex_bound_gram(n, d, c);
  cert.eitff_gap = max_spectral_overlap(f) - eitff_bound(n, d, c);
  if (auto ortho = orthoplex_bound(n, d, c, f.field())) cert.orthoplex_gap = max_f - ortho->gram;

  // Equality conditions of the simplex bound and its spectral refinement.
  if (cert.is_ectff && std::abs(cert.beta - simplex_bound_gram(n, d, c)) > tol) {
    throw NumericalFailure("certify: ECTFF with beta off the simplex bound");
  }
  if (cert.is_eitff && std::abs(cert.sigma_sq - eitff_bound(n, d, c)) > tol) {
    throw NumericalFailure("certify: EITFF with sigma^2 off the spectral bound");
  }
  return cert;
}

TightCheck is_unit_norm_tight_frame(const FusionFrame& vectors, double tol) {
  require_lines(vectors, "is_unit_norm_tight_frame");
  return is_tight_fusion_frame(vectors, tol);
}

EquiangularCheck is_equiangular(const FusionFrame& vectors, double tol) {
  require_lines(vectors, "is_equiangular");
  const auto check = is_equichordal(vectors, tol);
  return {check.flag, check.beta, check.deviation};
}

bool is_etf(const FusionFrame& vectors, double tol) {
  require_lines(vectors, "is_etf");
  if (vectors.n() < 2) return false;
  return is_equiangular(vectors, tol).flag && is_unit_norm_tight_frame(vectors, tol).flag;
}

bool is_regular_simplex(const FusionFrame& vectors, double tol) {
  require_lines(vectors, "is_regular_simplex");
  require_pairs(vectors, "is_regular_simplex");
  const double target = -1.0 / static_cast<double>(vectors.n() - 1);
  for (Index j = 0; j < vectors.n(); ++j) {
    for (Index k = j + 1; k < vectors.n(); ++k) {
      const Scalar g = vectors.basis(j).mat().col(0).dot(vectors.basis(k).mat().col(0));
      if (std::abs(g.real() - target) > tol || std::abs(g.imag()) > tol) return false;
    }
  }
  return true;
}

}  // namespace grasspack
