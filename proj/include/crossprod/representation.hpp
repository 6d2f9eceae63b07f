#pragma once

// Partial and covariant representations, the convolution algebra L_c,
// and the crossed product realised through the regular representation.

#include <cstddef>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "crossprod/algebra.hpp"
#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

namespace crossprod {

/// u_s for every element of the group (window), all on C^N.
struct PartialRep {
  std::vector<ComplexMatrix> ops;
};

/// *-representation of A given by the images of the matrix units.
struct Representation {
  std::size_t dim = 0;
  std::vector<std::vector<ComplexMatrix>> unitImages;  // [block][j*n+k]

  ComplexMatrix operator()(const FdAlgebra& A, const AlgElement& a) const;
};

/// Checks the three defining conditions plus the derived identities u_e = 1,
/// u_s^* = u_{s^-1}, u_s u_t = u_s u_s^* u_st.
Report is_partial_rep(const PartialRep& u, const GroupWindow& G, Tolerance tol = {});

struct CovarianceResult {
  Report report;
  bool rangeproj = false;
  bool covariance = false;
  bool ii = false;   // u_s u_t ⪯ u_st
  bool iii = false;  // pi(p_st) u_s u_t = pi(p_s) u_st
  bool iv = false;   // pi(a) u_s u_t = pi(a) u_st on D_s D_st
  bool covariant() const { return rangeproj && covariance && ii; }
};

CovarianceResult is_covariant(const Representation& pi, const PartialRep& u, const PartialActionSystem& sys,
                              Tolerance tol = {});

// ---------------------------------------------------------------- L_c

struct LcElement {
  std::shared_ptr<const PartialActionSystem> sys;
  std::map<std::size_t, AlgElement> coeffs;  // degree -> coefficient in D_s
};

/// F(a,s); throws PreconditionError unless a lies in D_s.
LcElement lc_term(std::shared_ptr<const PartialActionSystem> sys, const AlgElement& a, std::size_t s,
                  Tolerance tol = {});
LcElement lc_add(const LcElement& x, const LcElement& y);
LcElement lc_scale(const LcElement& x, Complex c);
/// Terms whose degree leaves a group window are dropped.
LcElement lc_multiply(const LcElement& x, const LcElement& y, Tolerance tol = {});
LcElement lc_adjoint(const LcElement& x);
double lc_max_abs_diff(const LcElement& x, const LcElement& y);

// ---------------------------------------------------------------- regular representation

/// Coordinates of the essential subspace: component t carries the blocks of D_{t^-1}.
struct RegularLayout {
  std::size_t dim = 0;
  std::vector<std::map<std::size_t, std::size_t>> offsets;  // [t][block] -> offset
};

RegularLayout regular_layout(const PartialActionSystem& sys);

/// Image of F(a,s): sum over t of alpha_{t^-1}(a p_t) mapping component s^-1 t to component t.
ComplexMatrix regular_image(const PartialActionSystem& sys, const RegularLayout& L, const AlgElement& a,
                            std::size_t s);
ComplexMatrix lc_image(const RegularLayout& L, const LcElement& x);

struct CrossedProduct {
  std::shared_ptr<const PartialActionSystem> sys;
  RegularLayout layout;
  std::vector<std::vector<ComplexMatrix>> termImages;  // [s][k], images of the matrix-unit basis of D_s
  std::vector<std::vector<ComplexMatrix>> grading;     // [s] orthonormal basis of the degree-s subspace
  std::vector<ComplexMatrix> multiplierImages;         // [s] image of F(p_s, s)
  std::vector<ComplexMatrix> algebraBasis;             // finite groups only
  bool closed = false;

  std::size_t dim() const { return layout.dim; }
  std::size_t algebra_dimension() const { return algebraBasis.size(); }
  /// pi^r(a), the image of F(a, e).
  ComplexMatrix pi(const AlgElement& a) const;
  Representation representation() const;
  PartialRep multipliers() const { return PartialRep{multiplierImages}; }
};

CrossedProduct build_regular(std::shared_ptr<const PartialActionSystem> sys, Tolerance tol = {});
inline CrossedProduct build_regular(const PartialActionSystem& sys, Tolerance tol = {}) {
  return build_regular(std::make_shared<const PartialActionSystem>(sys), tol);
}

/// dim of each degree-s subspace; asserts the sum equals the algebra dimension for closed products.
std::vector<std::size_t> spectral_dims(const CrossedProduct& cp, Tolerance tol = {});

/// Degree-s component of x; DomainError if x is not in the span of the grading.
ComplexMatrix dual_coaction_degree_project(const CrossedProduct& cp, const ComplexMatrix& x, std::size_t s,
                                           Tolerance tol = {});

/// grading[s] grading[t] ⊂ grading[st], independence of the degrees, and closure of the algebra.
Report grading_check(const CrossedProduct& cp, Tolerance tol = {});

/// Every m_s multiplies the algebra into itself on both sides.
Report multiplier_membership_check(const CrossedProduct& cp, Tolerance tol = {});

/// ||image F(a,s)|| <= ||a|| + eps.
bool seminorm_bound_check(const CrossedProduct& cp, const AlgElement& a, std::size_t s, Tolerance tol = {});

/// Random central unitary of A (phases per block).
template <class Rng>
AlgElement random_central_unitary(const FdAlgebra& A, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  AlgElement z = alg::unit(A);
  for (auto& b : z.blocks) b *= std::polar(1.0, angle(rng));
  return z;
}

}  // namespace crossprod
