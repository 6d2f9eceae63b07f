#pragma once

// W_p W_q^* calculus over a quasi-lattice ordered group (G, P), with the
// truncated shift model on l^2({q in P: |q| <= N}).

#include <memory>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/groups.hpp"
#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

namespace crossprod {

using QloElement = QuasiLatticeOrder::Element;

struct WHTerm {
  QloElement p;
  QloElement q;
  bool operator==(const WHTerm&) const = default;
  auto operator<=>(const WHTerm&) const = default;
};

struct WHElement {
  std::shared_ptr<const QuasiLatticeOrder> qlo;
  std::map<WHTerm, Complex> terms;
};

namespace wh {

WHElement zero(std::shared_ptr<const QuasiLatticeOrder> qlo);
/// c W_p W_q^*; throws PreconditionError unless p, q lie in P.
WHElement term(std::shared_ptr<const QuasiLatticeOrder> qlo, QloElement p, QloElement q, Complex c = 1.0);
WHElement add(const WHElement& x, const WHElement& y);
WHElement scale(const WHElement& x, Complex c);
WHElement multiply(const WHElement& x, const WHElement& y);
WHElement adjoint(const WHElement& x);
bool is_zero(const WHElement& x, double eps = 0.0);
bool equal(const WHElement& x, const WHElement& y, double eps = 0.0);
/// (W_p W_q^*)(W_r W_s^*) = W_{p q^{-1}(q∨r)} W_{s r^{-1}(q∨r)}^*, or 0 without a join.
WHElement multiply_terms(std::shared_ptr<const QuasiLatticeOrder> qlo, const WHTerm& a, const WHTerm& b);

/// "W[1,0]*W[0,1]^"
std::string format_term(const WHTerm& t);
std::string format(const WHElement& x);
/// Product of atoms W[...] and W[...]^ separated by '*'.
WHElement parse(const std::string& text, std::shared_ptr<const QuasiLatticeOrder> qlo);

/// Longest index appearing in x.
std::size_t max_index_length(const WHElement& x);

}  // namespace wh

/// p q^{-1}
QloElement wh_degree(const QuasiLatticeOrder& qlo, const WHTerm& t);

/// m_s = W_{sigma(s)} W_{tau(s)}^*, or 0 when s is not in P P^{-1}.
WHElement wh_partial_rep(std::shared_ptr<const QuasiLatticeOrder> qlo, const QloElement& s);

/// W_p W_q^* ⪯ W_u W_v^*: p,q,u,v in P, p q^{-1} = u v^{-1}, u <= p.
bool wh_order_check(const QuasiLatticeOrder& qlo, const WHTerm& x, const WHTerm& y);

/// Truncated basis {delta_q : q in P, |q| <= N}, in cone_window order.
std::vector<QloElement> wh_basis(const QuasiLatticeOrder& qlo, int N);
/// W_p on the truncated basis.
ComplexMatrix wh_truncate(const QuasiLatticeOrder& qlo, const QloElement& p, int N);
/// Sum of c W_p W_q^* on the truncated basis.
ComplexMatrix wh_matrix(const WHElement& x, int N);

/// Symbolic x*y against the product of truncated matrices on vectors delta_q with
/// |q| + max index length of x and y <= N.
Report wh_crosscheck(const WHElement& x, const WHElement& y, int N, double tol = 1e-12);

/// Cone elements inside group_window(N): the box [0,N]^k for Z^k, words of length <= N for free monoids.
std::vector<QloElement> wh_cone_box(const QuasiLatticeOrder& qlo, int N);

/// W_p W_p^* W_q W_q^* = W_{p∨q} W_{p∨q}^* or 0, for p, q in wh_cone_box(N).
Report nica_covariance_check(std::shared_ptr<const QuasiLatticeOrder> qlo, int N);

/// m_s m_t ⪯ m_st and m_s m_s^* = W_{sigma(s)} W_{sigma(s)}^* for s, t, st in group_window(N) ∩ P P^{-1}.
Report wh_partial_rep_check(std::shared_ptr<const QuasiLatticeOrder> qlo, int N);

/// join() against a brute-force search for least upper bounds among cone elements of length <= L + 1.
Report join_oracle_check(const QuasiLatticeOrder& qlo, int L);

/// Nica covariance, partial-representation laws, degree multiplicativity, joins and the matrix cross-check.
Report wh_suite(std::shared_ptr<const QuasiLatticeOrder> qlo, int window);

}  // namespace crossprod
