#pragma once

// Word calculus for Toeplitz-Cuntz and Toeplitz-Cuntz-Krieger algebras:
// elements are finite combinations of s_mu s_nu^*, graded by g_mu g_nu^{-1} in F_n.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "crossprod/graded_model.hpp"
#include "crossprod/groups.hpp"
#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

namespace crossprod {

/// Letters in 1..n; the empty index gives s_∅ = 1.
using Multiindex = std::vector<int>;

/// s_mu s_nu^*, ordered by (|mu|, mu, |nu|, nu).
struct CuntzTerm {
  Multiindex mu;
  Multiindex nu;

  bool operator==(const CuntzTerm&) const = default;
  std::strong_ordering operator<=>(const CuntzTerm& o) const;
};

/// Alphabet size plus, for the Toeplitz-Cuntz-Krieger flavour, the 0/1 transition matrix.
struct CuntzSignature {
  int n = 1;
  std::vector<std::vector<int>> ck;  // empty: Toeplitz-Cuntz

  static CuntzSignature toeplitz(int n);
  static CuntzSignature toeplitz_ck(std::vector<std::vector<int>> A);
  bool is_ck() const { return !ck.empty(); }
  bool operator==(const CuntzSignature&) const = default;
};

struct CuntzElement {
  CuntzSignature sig;
  std::map<CuntzTerm, Complex> terms;
};

/// A(mu_j, mu_{j+1}) = 1 for consecutive letters.
bool ck_admissible(const Multiindex& mu, const std::vector<std::vector<int>>& A);
/// Same, with the prefixed generator i: also A(i, mu_1) = 1.
bool ck_admissible(int i, const Multiindex& mu, const std::vector<std::vector<int>>& A);

namespace cuntz {

CuntzElement zero(const CuntzSignature& sig);
CuntzElement unit(const CuntzSignature& sig);
/// c s_mu s_nu^*; throws PreconditionError for out-of-range or inadmissible indices.
CuntzElement term(const CuntzSignature& sig, Multiindex mu, Multiindex nu, Complex c = 1.0);
/// s_i
CuntzElement generator(const CuntzSignature& sig, int i);
CuntzElement add(const CuntzElement& x, const CuntzElement& y);
CuntzElement scale(const CuntzElement& x, Complex c);
CuntzElement multiply(const CuntzElement& x, const CuntzElement& y);
CuntzElement adjoint(const CuntzElement& x);
bool is_zero(const CuntzElement& x, double eps = 0.0);
bool equal(const CuntzElement& x, const CuntzElement& y, double eps = 0.0);
/// Product of single terms, before coefficients.
CuntzElement multiply_terms(const CuntzSignature& sig, const CuntzTerm& a, const CuntzTerm& b);

/// "s[1,2]*s[2]^"; s[] is the unit.
std::string format_term(const CuntzTerm& t);
std::string format(const CuntzElement& x);
/// Product of atoms s[...] and s[...]^ separated by '*'.
CuntzElement parse(const std::string& text, const CuntzSignature& sig);

/// Matrix of x on the admissible-path Fock space truncated to words of length <= depth.
ComplexMatrix fock_matrix(const CuntzElement& x, int depth);
/// Basis words of the truncated Fock space, in matrix order.
std::vector<Multiindex> fock_basis(const CuntzSignature& sig, int depth);

}  // namespace cuntz

/// g_mu g_nu^{-1}, reduced.
ReducedWord cuntz_degree(const CuntzTerm& t, int n);

/// All terms with |mu|, |nu| <= N of degree s, in normal-form order (Toeplitz-Cuntz).
std::vector<CuntzTerm> cuntz_spectral_basis(int n, const ReducedWord& s, int N);

/// The three-case product table for the diagonal projections s_mu s_mu^*, |mu|,|nu| <= N.
Report projection_product_check(int n, int N);

/// Hypotheses of the Toeplitz-Cuntz characterization on the canonical grading, at depth N.
Report cuntz_characterization_check(int n, int N);

struct GaugeResult {
  Report report;
  std::size_t degreeOneDim = 0;  // dim of sp{s_mu s_nu^*: |mu|-|nu| = 1, |mu| <= N}
  std::size_t coreDim = 0;       // dim of sp{s_mu s_nu^*: |mu| = |nu| <= N-1}
  bool injective = false;
};

/// Gauge spectral subspace B_1 decomposes as the direct sum of s_i (core): module rank n.
GaugeResult gauge_nonexample_check(int n, int N);

/// The canonical F_n grading of the Toeplitz-Cuntz algebra, truncated to |mu|,|nu| <= depth.
class CuntzGradedModel {
 public:
  using Element = CuntzElement;
  CuntzGradedModel(int n, int window, int depth);

  const GroupWindow& group() const { return group_; }
  std::vector<Element> basis(std::size_t s) const;
  Element multiply(const Element& a, const Element& b) const { return cuntz::multiply(a, b); }
  Element adjoint(const Element& a) const { return cuntz::adjoint(a); }
  bool in_degree(const Element& x, std::size_t s) const;
  bool same(const Element& a, const Element& b) const { return cuntz::equal(a, b); }
  bool is_zero(const Element& a) const { return cuntz::is_zero(a); }
  Coordinates coordinates(const Element& x) const;
  /// s_sigma s_sigma^* when s = sigma tau^{-1} with sigma, tau positive words, else 0.
  Element projection(std::size_t s) const;
  Element unit() const { return cuntz::unit(sig_); }
  /// m_{g_i} = s_i.
  std::vector<Element> generator_certificates() const;
  /// Removes a degree from the grading.
  void drop_degree(std::size_t s) { dropped_.push_back(s); }
  int depth() const { return depth_; }

 private:
  CuntzSignature sig_;
  GroupWindow group_;
  int depth_;
  std::vector<std::size_t> dropped_;
};

}  // namespace crossprod
