#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace grasspack {

/// Ground field of the ambient space. Storage is always complex; the tag
/// only gates constructions and dimension formulas.
enum class Field { Real, Complex };

using Scalar = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Default scale-relative tolerance shared by every predicate.
inline constexpr double kDefaultTolerance = 1e-8;

const char* field_name(Field field);

namespace linalg {

Mat identity(Index n);

/// Conjugate transpose.
Mat adjoint(const Mat& a);

/// Tr(a* b). Throws InvalidInput on shape mismatch.
Scalar frobenius_inner(const Mat& a, const Mat& b);

double frobenius_norm_sq(const Mat& a);

/// Singular values, nonincreasing and clamped to be nonnegative.
/// Length is min(rows, cols). Throws NumericalFailure on non-finite input.
std::vector<double> singular_values(const Mat& a);

/// Largest singular value.
double spectral_norm(const Mat& a);

/// Orthonormal basis for the column span of `a` via Householder QR, with
/// columns rephased so that diag(R) is real and nonnegative. Requires
/// cols <= rows and smallest/largest singular value ratio above `rank_tol`.
Mat orthonormalize(const Mat& a, double rank_tol = kDefaultTolerance);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
Mat kron(const Mat& a, const Mat& b);

/// Largest |Im| over all entries.
double max_imag(const Mat& a);

/// max |(a* a - I)_{ij}|.
double orthonormality_deviation(const Mat& a);

bool all_finite(const Mat& a);

}  // namespace linalg
}  // namespace grasspack
