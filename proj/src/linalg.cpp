#include "crossprod/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace crossprod {

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e >= 0.0) || !std::isfinite(e)) throw PreconditionError("tolerance must be finite and non-negative");
}

namespace linalg {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw DimensionError(std::string(what) + ": expected a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(what) + ": shape mismatch");
}

ComplexVector vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  // <a, b> = tr(a* b)
  return (a.array().conjugate() * b.array()).sum();
}

}  // namespace

ComplexMatrix zeros(std::size_t n) { return ComplexMatrix::Zero(n, n); }

ComplexMatrix identity(std::size_t n) { return ComplexMatrix::Identity(n, n); }

ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw DimensionError("matrix_unit: index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  return max_abs(a - b);
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol.eps;
}

bool is_partial_isometry(const ComplexMatrix& m, Tolerance tol) {
  require_square(m, "is_partial_isometry");
  if (!m.allFinite()) return false;
  return max_abs(m * m.adjoint() * m - m) <= tol.eps;
}

bool extends_order(const ComplexMatrix& u, const ComplexMatrix& v, Tolerance tol) {
  require_square(u, "extends_order");
  require_same_shape(u, v, "extends_order");
  if (!is_partial_isometry(u, tol) || !is_partial_isometry(v, tol))
    throw PreconditionError("extends_order: arguments must be partial isometries");
  return max_abs(u * u.adjoint() - u * v.adjoint()) <= tol.eps;
}

ComplexMatrix polar_partial_isometry(const ComplexMatrix& m, Tolerance tol) {
  ComplexMatrix v = ComplexMatrix::Zero(m.rows(), m.cols());
  if (m.size() == 0) return v;
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= tol.eps) break;
    v += svd.matrixU().col(k) * svd.matrixV().col(k).adjoint();
  }
  return v;
}

std::size_t span_dimension(std::span<const ComplexMatrix> mats, Tolerance tol) {
  if (mats.empty()) return 0;
  const auto rows = mats[0].rows(), cols = mats[0].cols();
  ComplexMatrix stacked(rows * cols, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mats[k].rows() != rows || mats[k].cols() != cols) throw DimensionError("span_dimension: shape mismatch");
    stacked.col(static_cast<Eigen::Index>(k)) = vectorize(mats[k]);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked);
  const auto& sv = svd.singularValues();
  return static_cast<std::size_t>((sv.array() > tol.eps).count());
}

ComplexMatrix range_projection(std::span<const ComplexMatrix> mats, Tolerance tol) {
  if (mats.empty()) throw DimensionError("range_projection: no matrices");
  const auto rows = mats[0].rows();
  Eigen::Index total = 0;
  for (const auto& m : mats) {
    if (m.rows() != rows) throw DimensionError("range_projection: row mismatch");
    total += m.cols();
  }
  ComplexMatrix joined(rows, total);
  Eigen::Index at = 0;
  for (const auto& m : mats) {
    joined.middleCols(at, m.cols()) = m;
    at += m.cols();
  }
  ComplexMatrix p = ComplexMatrix::Zero(rows, rows);
  if (total == 0) return p;
  Eigen::JacobiSVD<ComplexMatrix> svd(joined, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) <= tol.eps) break;
    p += svd.matrixU().col(k) * svd.matrixU().col(k).adjoint();
  }
  return p;
}

std::vector<ComplexMatrix> generated_algebra_basis(std::span<const ComplexMatrix> gens, Tolerance tol) {
  if (gens.empty()) return {};
  for (const auto& g : gens) require_square(g, "generated_algebra_basis");
  MatrixSpan span(gens[0].rows(), gens[0].cols());
  for (const auto& g : gens) {
    span.insert(g, tol);
    span.insert(g.adjoint(), tol);
  }
  std::size_t done = 0;
  while (done < span.dimension()) {
    const std::size_t frontier = span.dimension();
    // Products with at least one factor from the newest batch.
    for (std::size_t i = 0; i < frontier; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < frontier; ++j) {
        const ComplexMatrix a = span.basis()[i];
        const ComplexMatrix b = span.basis()[j];
        span.insert(a * b, tol);
      }
    }
    done = frontier;
  }
  return span.basis();
}

std::vector<ComplexMatrix> center_basis(std::span<const ComplexMatrix> algebra, Tolerance tol) {
  MatrixSpan span(algebra, tol);
  const auto& b = span.basis();
  const std::size_t d = b.size();
  if (d == 0) return {};
  const auto n = b[0].rows();
  ComplexMatrix system(static_cast<Eigen::Index>(d) * n * n, static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      const ComplexMatrix c = b[k] * b[j] - b[j] * b[k];
      system.block(static_cast<Eigen::Index>(j) * n * n, static_cast<Eigen::Index>(k), n * n, 1) = vectorize(c);
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  std::vector<ComplexMatrix> out;
  for (Eigen::Index col = 0; col < static_cast<Eigen::Index>(d); ++col) {
    const double s = col < sv.size() ? sv(col) : 0.0;
    if (s > tol.eps) continue;
    ComplexMatrix z = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < d; ++k) z += svd.matrixV()(static_cast<Eigen::Index>(k), col) * b[k];
    out.push_back(std::move(z));
  }
  return out;
}

bool is_positive_semidefinite(const ComplexMatrix& m, Tolerance tol) {
  require_square(m, "is_positive_semidefinite");
  if (max_abs(m - m.adjoint()) > tol.eps) return false;
  if (m.size() == 0) return true;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol.eps;
}

MatrixSpan::MatrixSpan(std::span<const ComplexMatrix> mats, Tolerance tol) {
  for (const auto& m : mats) insert(m, tol);
}

void MatrixSpan::check_shape(const ComplexMatrix& m) const {
  if (shaped_ || rows_ != 0 || cols_ != 0) {
    if (static_cast<std::size_t>(m.rows()) != rows_ || static_cast<std::size_t>(m.cols()) != cols_)
      throw DimensionError("MatrixSpan: shape mismatch");
  }
}

ComplexMatrix MatrixSpan::project(const ComplexMatrix& m) const {
  check_shape(m);
  ComplexMatrix p = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& b : basis_) p += frobenius_inner(b, m) * b;
  return p;
}

double MatrixSpan::residual(const ComplexMatrix& m) const {
  check_shape(m);
  ComplexMatrix r = m;
  // Two Gram-Schmidt passes keep the residual honest at the 1e-15 level.
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis_) r -= frobenius_inner(b, r) * b;
  return r.norm();
}

bool MatrixSpan::contains(const ComplexMatrix& m, Tolerance tol) const {
  return residual(m) <= tol.eps * std::max(1.0, m.norm());
}

bool MatrixSpan::insert(const ComplexMatrix& m, Tolerance tol) {
  if (!shaped_ && rows_ == 0 && cols_ == 0) {
    rows_ = static_cast<std::size_t>(m.rows());
    cols_ = static_cast<std::size_t>(m.cols());
  }
  check_shape(m);
  shaped_ = true;
  ComplexMatrix r = m;
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& b : basis_) r -= frobenius_inner(b, r) * b;
  const double nr = r.norm();
  if (nr <= tol.eps * std::max(1.0, m.norm())) return false;
  basis_.push_back(r / nr);
  return true;
}

}  // namespace linalg
}  // namespace crossprod
