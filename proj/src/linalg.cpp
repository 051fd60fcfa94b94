#include "grasspack/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "grasspack/errors.hpp"

namespace grasspack {

const char* field_name(Field field) { return field == Field::Real ? "R" : "C"; }

namespace linalg {

Mat identity(Index n) { return Mat::Identity(n, n); }

Mat adjoint(const Mat& a) { return a.adjoint(); }

Scalar frobenius_inner(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidInput("frobenius_inner: shape mismatch " + std::to_string(a.rows()) + "x" +
                       std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                       std::to_string(b.cols()));
  }
  Scalar acc{0.0, 0.0};
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) acc += std::conj(a(i, j)) * b(i, j);
  }
  return acc;
}

double frobenius_norm_sq(const Mat& a) { return a.squaredNorm(); }

bool all_finite(const Mat& a) { return a.allFinite(); }

std::vector<double> singular_values(const Mat& a) {
  if (!a.allFinite()) throw NumericalFailure("singular_values: non-finite matrix entry");
  if (a.size() == 0) return {};
  Eigen::JacobiSVD<Mat> svd(a);
  const auto& s = svd.singularValues();
  std::vector<double> out(static_cast<std::size_t>(s.size()));
  for (Index k = 0; k < s.size(); ++k) {
    if (!std::isfinite(s(k))) throw NumericalFailure("singular_values: SVD did not converge");
    out[static_cast<std::size_t>(k)] = std::max(0.0, s(k));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectral_norm(const Mat& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

Mat orthonormalize(const Mat& a, double rank_tol) {
  if (a.cols() > a.rows()) {
    throw InvalidInput("orthonormalize: more columns (" + std::to_string(a.cols()) +
                       ") than rows (" + std::to_string(a.rows()) + ")");
  }
  const auto s = singular_values(a);
  if (s.empty() || s.front() == 0.0 || s.back() <= rank_tol * s.front()) {
    throw InvalidInput("orthonormalize: matrix is rank deficient");
  }
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ() * Mat::Identity(a.rows(), a.cols());
  const Mat& r = qr.matrixQR();
  for (Index k = 0; k < a.cols(); ++k) {
    const Scalar rkk = r(k, k);
    const double mag = std::abs(rkk);
    if (mag > 0.0) q.col(k) *= rkk / mag;
  }
  return q;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_imag(const Mat& a) { return a.size() == 0 ? 0.0 : a.imag().cwiseAbs().maxCoeff(); }

double orthonormality_deviation(const Mat& a) {
  if (a.cols() == 0) return 0.0;
  const Mat g = a.adjoint() * a - Mat::Identity(a.cols(), a.cols());
  return g.cwiseAbs().maxCoeff();
}

}  // namespace linalg
}  // namespace grasspack
