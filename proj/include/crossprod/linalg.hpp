#pragma once

// Dense complex matrices and the operator predicates used throughout:
// partial isometries, the extension order, polar parts and spans.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "crossprod/errors.hpp"

namespace crossprod {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Absolute threshold for every numerical decision (rank, equality, membership).
struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);

  Tolerance scaled(double factor) const { return Tolerance(eps * factor); }
};

namespace linalg {

ComplexMatrix zeros(std::size_t n);
ComplexMatrix identity(std::size_t n);
/// E_ij in M_n, zero-based indices.
ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

ComplexMatrix adjoint(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double operator_norm(const ComplexMatrix& m);
bool all_finite(const ComplexMatrix& m);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol);

/// ||m m* m - m||_max <= eps. Throws DimensionError for non-square input.
bool is_partial_isometry(const ComplexMatrix& m, Tolerance tol = {});

/// u ⪯ v  iff  u u* = u v*. Both arguments must be partial isometries.
bool extends_order(const ComplexMatrix& u, const ComplexMatrix& v, Tolerance tol = {});

/// The partial isometry v with m = v |m|; singular values below eps count as zero.
ComplexMatrix polar_partial_isometry(const ComplexMatrix& m, Tolerance tol = {});

/// Rank of the family of vectorised matrices (singular values > eps).
std::size_t span_dimension(std::span<const ComplexMatrix> mats, Tolerance tol = {});

/// Projection onto the sum of the column spaces of the given matrices.
ComplexMatrix range_projection(std::span<const ComplexMatrix> mats, Tolerance tol = {});

/// Frobenius-orthonormal basis of the smallest *-subalgebra containing gens.
std::vector<ComplexMatrix> generated_algebra_basis(std::span<const ComplexMatrix> gens,
                                                   Tolerance tol = {});

/// Basis of the centre of the algebra spanned by `algebra`.
std::vector<ComplexMatrix> center_basis(std::span<const ComplexMatrix> algebra,
                                        Tolerance tol = {});

bool is_positive_semidefinite(const ComplexMatrix& m, Tolerance tol = {});

/// Incrementally built Frobenius-orthonormal basis of a subspace of M_{rows x cols}.
class MatrixSpan {
 public:
  MatrixSpan() = default;
  MatrixSpan(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  explicit MatrixSpan(std::span<const ComplexMatrix> mats, Tolerance tol = {});

  /// Adds m if it is not already in the span; returns whether the span grew.
  bool insert(const ComplexMatrix& m, Tolerance tol = {});

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<ComplexMatrix>& basis() const { return basis_; }

  ComplexMatrix project(const ComplexMatrix& m) const;
  double residual(const ComplexMatrix& m) const;
  /// Residual at most eps * max(1, ||m||_F).
  bool contains(const ComplexMatrix& m, Tolerance tol = {}) const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  void check_shape(const ComplexMatrix& m) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool shaped_ = false;
  std::vector<ComplexMatrix> basis_;
};

}  // namespace linalg
}  // namespace crossprod
