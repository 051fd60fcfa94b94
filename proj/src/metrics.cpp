#include "grasspack/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "grasspack/errors.hpp"

namespace grasspack {

namespace {

void require_compatible(const SubspaceBasis& b1, const SubspaceBasis& b2, const char* op) {
  if (b1.ambient_dim() != b2.ambient_dim() || b1.dim() != b2.dim()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (" +
                       std::to_string(b1.ambient_dim()) + "x" + std::to_string(b1.dim()) +
                       " vs " + std::to_string(b2.ambient_dim()) + "x" +
                       std::to_string(b2.dim()) + ")");
  }
}

void require_pairs(const FusionFrame& f, const char* op) {
  if (f.n() < 2) throw InvalidInput(std::string(op) + ": need n >= 2 subspaces");
}

void require_lines(const FusionFrame& f, const char* op) {
  if (f.c() != 1) {
    throw InvalidInput(std::string(op) + ": requires c = 1, got c = " + std::to_string(f.c()));
  }
}

template <typename PairFn>
double max_over_pairs(const FusionFrame& f, PairFn fn) {
  double best = -std::numeric_limits<double>::infinity();
  for (Index j = 0; j < f.n(); ++j) {
    for (Index k = j + 1; k < f.n(); ++k) best = std::max(best, fn(f.basis(j), f.basis(k)));
  }
  return best;
}

}  // namespace

SubspaceBasis SubspaceBasis::from_orthonormal(Mat mat, double tol) {
  if (mat.rows() < 1 || mat.cols() < 1) throw InvalidInput("subspace basis: empty matrix");
  if (mat.cols() > mat.rows()) {
    throw InvalidInput("subspace basis: c = " + std::to_string(mat.cols()) + " exceeds d = " +
                       std::to_string(mat.rows()));
  }
  if (!mat.allFinite()) throw InvalidInput("subspace basis: non-finite entry");
  const double dev = linalg::orthonormality_deviation(mat);
  if (dev > tol) {
    throw InvalidInput("subspace basis: columns not orthonormal (deviation " +
                       std::to_string(dev) + ")");
  }
  return SubspaceBasis(std::move(mat));
}

SubspaceBasis SubspaceBasis::from_span(const Mat& mat, double rank_tol) {
  if (mat.rows() < 1 || mat.cols() < 1) throw InvalidInput("subspace basis: empty matrix");
  return SubspaceBasis(linalg::orthonormalize(mat, rank_tol));
}

FusionFrame::FusionFrame(Field field, std::vector<SubspaceBasis> bases)
    : field_(field), bases_(std::move(bases)) {
  if (bases_.empty()) throw InvalidInput("fusion frame: no subspaces");
  d_ = bases_.front().ambient_dim();
  c_ = bases_.front().dim();
  for (std::size_t j = 0; j < bases_.size(); ++j) {
    const auto& b = bases_[j];
    if (b.ambient_dim() != d_ || b.dim() != c_) {
      throw InvalidInput("fusion frame: basis " + std::to_string(j + 1) + " is " +
                         std::to_string(b.ambient_dim()) + "x" + std::to_string(b.dim()) +
                         ", expected " + std::to_string(d_) + "x" + std::to_string(c_));
    }
  }
  if (field_ == Field::Real) {
    for (std::size_t j = 0; j < bases_.size(); ++j) {
      if (linalg::max_imag(bases_[j].mat()) > kDefaultTolerance) {
        throw InvalidInput("fusion frame: basis " + std::to_string(j + 1) +
                           " has imaginary entries in a real frame");
      }
      bases_[j] = SubspaceBasis(bases_[j].mat().real().cast<Scalar>());
    }
  }
}

Mat FusionFrame::synthesis() const {
  Mat out(d_, n() * c_);
  for (Index j = 0; j < n(); ++j) out.middleCols(j * c_, c_) = basis(j).mat();
  return out;
}

Mat projection(const SubspaceBasis& b) { return b.mat() * b.mat().adjoint(); }

Mat cross_gramian(const SubspaceBasis& b1, const SubspaceBasis& b2) {
  require_compatible(b1, b2, "cross_gramian");
  return b1.mat().adjoint() * b2.mat();
}

Mat fusion_gram(const FusionFrame& f) {
  const Mat phi = f.synthesis();
  Mat g = phi.adjoint() * phi;
  // Diagonal blocks are I_c by construction; pin them exactly.
  for (Index j = 0; j < f.n(); ++j) {
    g.block(j * f.c(), j * f.c(), f.c(), f.c()) = Mat::Identity(f.c(), f.c());
  }
  return g;
}

Mat fusion_frame_operator(const FusionFrame& f) {
  Mat s = Mat::Zero(f.d(), f.d());
  for (const auto& b : f.bases()) s += projection(b);
  return s;
}

PrincipalAngles principal_angles(const SubspaceBasis& b1, const SubspaceBasis& b2) {
  const Mat a = cross_gramian(b1, b2);
  const auto cosines = linalg::singular_values(a);  // nonincreasing
  // Singular values of (I - P_1) Phi_2 are the sines, nondecreasing once
  // reversed. arccos loses half the digits near 0, so small angles come
  // from the sines instead.
  auto sines = linalg::singular_values(b2.mat() - b1.mat() * a);
  std::reverse(sines.begin(), sines.end());
  PrincipalAngles out;
  out.thetas.reserve(cosines.size());
  for (std::size_t k = 0; k < cosines.size(); ++k) {
    const double cs = std::clamp(cosines[k], 0.0, 1.0);
    const double theta = cs * cs > 0.5 ? std::asin(std::clamp(sines[k], 0.0, 1.0)) : std::acos(cs);
    out.thetas.push_back(out.thetas.empty() ? theta : std::max(theta, out.thetas.back()));
  }
  return out;
}

double chordal_distance_sq(const SubspaceBasis& b1, const SubspaceBasis& b2) {
  const double c = static_cast<double>(b1.dim());
  const double overlap = linalg::frobenius_norm_sq(cross_gramian(b1, b2));
  return std::clamp(c - overlap, 0.0, c);
}

double spectral_distance_sq(const SubspaceBasis& b1, const SubspaceBasis& b2) {
  const double s = std::min(1.0, linalg::spectral_norm(cross_gramian(b1, b2)));
  return std::clamp(1.0 - s * s, 0.0, 1.0);
}

double geodesic_distance(const SubspaceBasis& b1, const SubspaceBasis& b2) {
  double acc = 0.0;
  for (double t : principal_angles(b1, b2).thetas) acc += t * t;
  return std::sqrt(acc);
}

double min_chordal_packing(const FusionFrame& f) {
  require_pairs(f, "min_chordal_packing");
  return -max_over_pairs(f, [](const SubspaceBasis& a, const SubspaceBasis& b) {
    return -chordal_distance_sq(a, b);
  });
}

double coherence(const FusionFrame& f) {
  require_lines(f, "coherence");
  require_pairs(f, "coherence");
  return max_over_pairs(f, [](const SubspaceBasis& a, const SubspaceBasis& b) {
    return std::min(1.0, std::abs(a.mat().col(0).dot(b.mat().col(0))));
  });
}

double max_signed_inner_product(const FusionFrame& f) {
  require_lines(f, "max_signed_inner_product");
  require_pairs(f, "max_signed_inner_product");
  return max_over_pairs(f, [](const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.mat().col(0).dot(b.mat().col(0)).real();
  });
}

double max_chordal_overlap(const FusionFrame& f) {
  require_pairs(f, "max_chordal_overlap");
  return max_over_pairs(f, [](const SubspaceBasis& a, const SubspaceBasis& b) {
    return linalg::frobenius_norm_sq(cross_gramian(a, b));
  });
}

double max_spectral_overlap(const FusionFrame& f) {
  require_pairs(f, "max_spectral_overlap");
  return max_over_pairs(f, [](const SubspaceBasis& a, const SubspaceBasis& b) {
    const double s = linalg::spectral_norm(cross_gramian(a, b));
    return s * s;
  });
}

Mat traceless_embed(const SubspaceBasis& b) {
  const double d = static_cast<double>(b.ambient_dim());
  const double c = static_cast<double>(b.dim());
  if (b.dim() >= b.ambient_dim()) {
    throw InvalidInput("traceless_embed: requires c < d (got c = d = " +
                       std::to_string(b.dim()) + ")");
  }
  const double scale = std::sqrt(d / (c * (d - c)));
  Mat q = projection(b);
  q.diagonal().array() -= c / d;
  return scale * q;
}

}  // namespace grasspack
