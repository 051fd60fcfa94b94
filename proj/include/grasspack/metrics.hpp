#pragma once

#include <vector>

#include "grasspack/linalg.hpp"

namespace grasspack {

/// A d x c matrix with orthonormal columns: the synthesis operator of an
/// orthonormal basis for one c-dimensional subspace.
class SubspaceBasis {
 public:
  /// Accepts `mat` as-is after checking mat* mat = I within `tol`
  /// (entrywise). Throws InvalidInput otherwise.
  static SubspaceBasis from_orthonormal(Mat mat, double tol = kDefaultTolerance);

  /// Orthonormalizes the columns of `mat` first.
  static SubspaceBasis from_span(const Mat& mat, double rank_tol = kDefaultTolerance);

  const Mat& mat() const { return mat_; }
  Index ambient_dim() const { return mat_.rows(); }
  Index dim() const { return mat_.cols(); }

 private:
  friend class FusionFrame;
  explicit SubspaceBasis(Mat mat) : mat_(std::move(mat)) {}
  Mat mat_;
};

/// n subspaces of a common dimension c in F^d.
class FusionFrame {
 public:
  /// Throws InvalidInput if the bases are empty or disagree on (d, c), or
  /// if a Real frame has an imaginary part above tolerance. Real frames are
  /// stored with imaginary parts zeroed.
  FusionFrame(Field field, std::vector<SubspaceBasis> bases);

  Field field() const { return field_; }
  Index d() const { return d_; }
  Index c() const { return c_; }
  Index n() const { return static_cast<Index>(bases_.size()); }
  const SubspaceBasis& basis(Index j) const { return bases_[static_cast<std::size_t>(j)]; }
  const std::vector<SubspaceBasis>& bases() const { return bases_; }

  /// The d x nc synthesis operator [Phi_1 ... Phi_n].
  Mat synthesis() const;

 private:
  Field field_;
  Index d_ = 0;
  Index c_ = 0;
  std::vector<SubspaceBasis> bases_;
};

/// Principal angles in radians, nondecreasing, each in [0, pi/2].
struct PrincipalAngles {
  std::vector<double> thetas;
};

/// P = Phi Phi*.
Mat projection(const SubspaceBasis& b);

/// Phi_1* Phi_2 (c x c).
Mat cross_gramian(const SubspaceBasis& b1, const SubspaceBasis& b2);

/// nc x nc block matrix of all cross-Gramians.
Mat fusion_gram(const FusionFrame& f);

/// Sum of the projections onto every subspace.
Mat fusion_frame_operator(const FusionFrame& f);

PrincipalAngles principal_angles(const SubspaceBasis& b1, const SubspaceBasis& b2);

/// Squared chordal distance c - ||Phi_1* Phi_2||_F^2, clamped to [0, c].
double chordal_distance_sq(const SubspaceBasis& b1, const SubspaceBasis& b2);

/// sin^2 of the smallest principal angle, 1 - ||Phi_1* Phi_2||_2^2.
double spectral_distance_sq(const SubspaceBasis& b1, const SubspaceBasis& b2);

/// 2-norm of the principal-angle vector.
double geodesic_distance(const SubspaceBasis& b1, const SubspaceBasis& b2);

/// Squared packing radius: min over pairs of the squared chordal distance.
double min_chordal_packing(const FusionFrame& f);

/// Largest |<phi_j, phi_k>| over pairs; requires c = 1.
double coherence(const FusionFrame& f);

/// Largest Re<phi_j, phi_k> over pairs (the signed quantity in Rankin's
/// bounds); requires c = 1.
double max_signed_inner_product(const FusionFrame& f);

/// Largest ||Phi_j* Phi_k||_F^2 over pairs.
double max_chordal_overlap(const FusionFrame& f);

/// Largest ||Phi_j* Phi_k||_2^2 over pairs.
double max_spectral_overlap(const FusionFrame& f);

/// Normalized traceless part sqrt(d / (c (d - c))) (P - (c/d) I) of the
/// projection; unit Frobenius norm. Requires c < d.
Mat traceless_embed(const SubspaceBasis& b);

}  // namespace grasspack
