#pragma once

// Finite-dimensional C*-algebras as direct sums of full matrix blocks,
// their ideals, partial *-isomorphisms and partial actions.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/groups.hpp"
#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

namespace crossprod {

struct FdAlgebra {
  std::vector<int> blockSizes;

  FdAlgebra() = default;
  explicit FdAlgebra(std::vector<int> sizes);

  std::size_t block_count() const { return blockSizes.size(); }
  std::size_t size(std::size_t block) const { return static_cast<std::size_t>(blockSizes.at(block)); }
  /// Sum of n_i^2.
  std::size_t dimension() const;
  /// Sum of n_i, the size of the identity representation.
  std::size_t total_size() const;
  std::size_t offset(std::size_t block) const;
  bool operator==(const FdAlgebra&) const = default;
};

struct AlgElement {
  std::vector<ComplexMatrix> blocks;
};

/// Set of block indices (0-based). Every ideal of a direct sum of matrix blocks has this form.
using Ideal = std::set<std::size_t>;

Ideal full_ideal(const FdAlgebra& A);
Ideal intersect(const Ideal& a, const Ideal& b);
bool is_subset(const Ideal& a, const Ideal& b);
std::size_t ideal_dimension(const FdAlgebra& A, const Ideal& I);
/// 1-based, e.g. "{1,2}".
std::string format_ideal(const Ideal& I);

namespace alg {

AlgElement zero(const FdAlgebra& A);
AlgElement unit(const FdAlgebra& A);
/// Matrix unit E_jk inside block b.
AlgElement matrix_unit(const FdAlgebra& A, std::size_t b, std::size_t j, std::size_t k);
AlgElement multiply(const AlgElement& x, const AlgElement& y);
AlgElement add(const AlgElement& x, const AlgElement& y);
AlgElement scale(const AlgElement& x, Complex c);
AlgElement adjoint(const AlgElement& x);
double norm(const AlgElement& x);
double max_abs_diff(const AlgElement& x, const AlgElement& y);
/// Keeps the blocks in I, zeroes the rest (multiplication by the central projection).
AlgElement cut(const AlgElement& x, const Ideal& I);
bool lies_in(const AlgElement& x, const Ideal& I, Tolerance tol = {});
/// Block-diagonal matrix on C^{total_size}.
ComplexMatrix to_matrix(const FdAlgebra& A, const AlgElement& x);
/// Basis of matrix units for the blocks in I, ordered by (block, row, col).
std::vector<AlgElement> ideal_basis(const FdAlgebra& A, const Ideal& I);
void check_shape(const FdAlgebra& A, const AlgElement& x);

}  // namespace alg

/// Unit of the ideal: identity on its blocks, zero elsewhere.
AlgElement central_projection(const FdAlgebra& A, const Ideal& I);

/// a_i at source block i goes to U_i a_i U_i^* at block blockMap(i).
struct PartialAutomorphism {
  Ideal source;
  Ideal target;
  std::map<std::size_t, std::size_t> blockMap;
  std::map<std::size_t, ComplexMatrix> unitaries;  // keyed by source block

  static PartialAutomorphism identity(const FdAlgebra& A, const Ideal& I);
  static PartialAutomorphism empty() { return {}; }

  /// alpha(a p_source); blocks outside the source are discarded.
  AlgElement apply(const FdAlgebra& A, const AlgElement& a) const;
  PartialAutomorphism inverse() const;
  /// Structural validity: bijection, size preserving, unitary blocks. Empty string when valid.
  std::string defect(const FdAlgebra& A, Tolerance tol = {}) const;
  /// Restriction to a sub-ideal of the source.
  PartialAutomorphism restrict_to(const Ideal& I) const;
  /// Image of a sub-ideal of the source.
  Ideal image(const Ideal& I) const;
};

/// f after g on the natural domain g^{-1}(g.target ∩ f.source).
PartialAutomorphism compose_autos(const PartialAutomorphism& f, const PartialAutomorphism& g);

/// Compares f and g on every matrix unit of the blocks of d (phase-insensitive).
bool autos_agree_on(const FdAlgebra& A, const PartialAutomorphism& f, const PartialAutomorphism& g, const Ideal& d,
                    Tolerance tol = {}, std::string* witness = nullptr);

struct PartialActionSystem {
  std::string name;
  FdAlgebra algebra;
  GroupWindow group = GroupWindow::finite(FiniteGroup::trivial());
  std::vector<Ideal> ideals;                // indexed by group element
  std::vector<PartialAutomorphism> autos;  // alpha_s : D_{s^{-1}} -> D_s

  const Ideal& D(std::size_t s) const { return ideals.at(s); }
  const PartialAutomorphism& alpha(std::size_t s) const { return autos.at(s); }
  AlgElement p(std::size_t s) const { return central_projection(algebra, ideals.at(s)); }
};

struct ValidationResult {
  Report report;
  /// (s,t) pairs where alpha_{st} fails to extend alpha_s alpha_t.
  std::vector<std::pair<std::size_t, std::size_t>> extensionFailures;
  bool passed() const { return report.passed(); }
};

ValidationResult validate_partial_action(const PartialActionSystem& sys, Tolerance tol = {});

struct MultiplicativityResult {
  bool multiplicative = true;
  std::string witness;  // first failing containment, e.g. "D_2 ⊄ D_1"
  std::size_t checked = 0;
};

/// Free windows: D_w ⊂ D_{s_1} for every reduced word; Z windows: D_n ⊂ D_1 for 0 < n <= L.
MultiplicativityResult is_multiplicative(const PartialActionSystem& sys);

/// Recursive construction D_{s_1 w} = alpha_{s_1}(D_{s_1^{-1}} D_w), alpha_{s_1 w} = alpha_{s_1} alpha_w.
/// One automorphism gives a Z window, several give an F_n window.
PartialActionSystem free_product_action(const FdAlgebra& A, const std::vector<PartialAutomorphism>& thetas, int L);

/// Restriction of the global Z action by a block permutation (with unitaries) to the ideal I.
PartialActionSystem restricted_global_action(const FdAlgebra& A, const std::vector<std::size_t>& perm,
                                             const std::vector<ComplexMatrix>& unitaries, const Ideal& I, int L);

/// Z window with D_n = A, alpha_n = id when period divides n, and D_n = 0 otherwise.
PartialActionSystem periodic_action(const FdAlgebra& A, int period, int L);

namespace fixtures {

PartialActionSystem flip();
PartialActionSystem finite_shift();
PartialActionSystem nonmult_z(int L = 6);
PartialActionSystem trivial();
PartialActionSystem free_product(int L = 2);
/// alpha_e swaps the blocks while alpha_g is the identity; extension fails.
PartialActionSystem corrupted_flip();
/// Z_3 acting on C^3 by cyclic shift.
PartialActionSystem cyclic_shift3();
/// Z_2 on M_2 ⊕ C ⊕ C: Ad of a Pauli matrix on the first block, partial on the rest.
PartialActionSystem matrix_flip();

std::vector<std::string> names();
PartialActionSystem by_name(const std::string& name);

}  // namespace fixtures

}  // namespace crossprod
