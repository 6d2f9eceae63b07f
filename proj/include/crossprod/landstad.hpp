#pragma once

// Recovering a partial action from a graded algebra: multiplier certificates,
// reconstruction of (A, G, alpha) and the round-trip checks.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossprod/algebra.hpp"
#include "crossprod/graded_model.hpp"
#include "crossprod/representation.hpp"

namespace crossprod {

/// Concrete grading on M_N: grading[s] is a basis of B_s.
struct GradedMatrixAlgebra {
  std::size_t dim = 0;
  GroupWindow group = GroupWindow::finite(FiniteGroup::trivial());
  std::vector<std::vector<ComplexMatrix>> grading;

  const std::vector<ComplexMatrix>& B(std::size_t s) const { return grading.at(s); }
  /// Unit of D_s = B_s B_s^*, i.e. the range projection of B_s.
  ComplexMatrix projection(std::size_t s, Tolerance tol = {}) const;
};

GradedMatrixAlgebra graded_from_crossed_product(const CrossedProduct& cp);

class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(std::size_t s, std::size_t t, const std::string& what)
      : std::runtime_error(what), s_(s), t_(t) {}
  std::size_t s() const { return s_; }
  std::size_t t() const { return t_; }

 private:
  std::size_t s_, t_;
};

/// Matrix grading seen through the generic model interface.
class MatrixGradedModel {
 public:
  using Element = ComplexMatrix;
  explicit MatrixGradedModel(const GradedMatrixAlgebra& g, Tolerance tol = {});

  const GroupWindow& group() const { return g_->group; }
  std::vector<Element> basis(std::size_t s) const { return g_->B(s); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element adjoint(const Element& a) const { return a.adjoint(); }
  bool in_degree(const Element& x, std::size_t s) const { return spans_.at(s).contains(x, tol_); }
  bool same(const Element& a, const Element& b) const { return linalg::approx_equal(a, b, tol_); }
  bool is_zero(const Element& a) const { return linalg::max_abs(a) <= tol_.eps; }
  Coordinates coordinates(const Element& x) const;
  Element projection(std::size_t s) const { return projections_.at(s); }
  Element unit() const { return ComplexMatrix::Identity(static_cast<Eigen::Index>(g_->dim), static_cast<Eigen::Index>(g_->dim)); }

 private:
  const GradedMatrixAlgebra* g_;
  Tolerance tol_;
  std::vector<linalg::MatrixSpan> spans_;
  std::vector<ComplexMatrix> projections_;
};

/// L_c of a partial action over a group window, graded by degree. Exact on reduced-word products.
class LcGradedModel {
 public:
  using Element = LcElement;
  explicit LcGradedModel(std::shared_ptr<const PartialActionSystem> sys, Tolerance tol = {});

  const GroupWindow& group() const { return sys_->group; }
  std::vector<Element> basis(std::size_t s) const;
  Element multiply(const Element& a, const Element& b) const { return lc_multiply(a, b, tol_); }
  Element adjoint(const Element& a) const { return lc_adjoint(a); }
  bool in_degree(const Element& x, std::size_t s) const;
  bool same(const Element& a, const Element& b) const { return lc_max_abs_diff(a, b) <= tol_.eps; }
  bool is_zero(const Element& a) const;
  Coordinates coordinates(const Element& x) const;
  Element projection(std::size_t s) const;
  Element unit() const { return projection(sys_->group.identity()); }
  /// m_s = F(p_s, s).
  Element multiplier(std::size_t s) const;
  /// Removes a degree from the grading (used to exercise the generation check).
  void drop_degree(std::size_t s) { dropped_.push_back(s); }

 private:
  std::shared_ptr<const PartialActionSystem> sys_;
  Tolerance tol_;
  std::vector<std::size_t> dropped_;
};

Report validate_grading(const GradedMatrixAlgebra& g, Tolerance tol = {});

/// Empty when m is a certificate for degree s.
std::string certificate_defect(const GradedMatrixAlgebra& g, std::size_t s, const ComplexMatrix& m,
                               Tolerance tol = {});

/// Random polar search: m = polar(x) for a Gaussian x in B_s (x + x^* when s = s^-1).
std::optional<ComplexMatrix> find_certificate(const GradedMatrixAlgebra& g, std::size_t s, int attempts,
                                              std::uint64_t seed, Tolerance tol = {});

struct CertificateFamily {
  std::vector<ComplexMatrix> m;  // indexed by group element
  bool found = false;
  int attempts_used = 0;
  Report report;
  std::vector<std::string> notes;
};

/// Certificates for every degree that also form a partial representation (m_e = p_e, m_{s^-1} = m_s^*).
CertificateFamily find_certificates(const GradedMatrixAlgebra& g, int attempts, std::uint64_t seed,
                                    Tolerance tol = {});

/// alpha_s = Ad m_s on the block decomposition of B_e.
PartialActionSystem reconstruct_action(const GradedMatrixAlgebra& g, const std::vector<ComplexMatrix>& certs,
                                       Tolerance tol = {});

/// psi_s(x) = x m_s^*: psi_st(xy) = psi_s(x psi_t(y)), inner products, range in D_s, bijectivity.
Report module_iso_check(const GradedMatrixAlgebra& g, const std::vector<ComplexMatrix>& certs, Tolerance tol = {});

struct RoundTrip {
  Report report;
  std::optional<PartialActionSystem> reconstructed;
  std::vector<std::size_t> originalDims;
  std::vector<std::size_t> reconstructedDims;
};

/// validate_grading, certificate search, reconstruction, module iso, and a rebuild of the crossed product.
RoundTrip landstad_roundtrip(const GradedMatrixAlgebra& g, int attempts, std::uint64_t seed, Tolerance tol = {});

}  // namespace crossprod
