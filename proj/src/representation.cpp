#include "crossprod/representation.hpp"

#include <algorithm>
#include <sstream>

namespace crossprod {

namespace {

std::string pair_label(const GroupWindow& G, std::size_t s, std::size_t t) {
  return "(" + G.label(s) + "," + G.label(t) + ")";
}

bool order_holds(const ComplexMatrix& u, const ComplexMatrix& v, Tolerance tol) {
  if (!linalg::is_partial_isometry(u, tol) || !linalg::is_partial_isometry(v, tol)) return false;
  return linalg::extends_order(u, v, tol);
}

}  // namespace

ComplexMatrix Representation::operator()(const FdAlgebra& A, const AlgElement& a) const {
  alg::check_shape(A, a);
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < A.block_count(); ++b) {
    const std::size_t n = A.size(b);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex c = a.blocks[b](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
        if (c != Complex(0.0)) out += c * unitImages.at(b).at(j * n + k);
      }
  }
  return out;
}

Report is_partial_rep(const PartialRep& u, const GroupWindow& G, Tolerance tol) {
  Report r("partial representation");
  if (!G.is_finite()) r.note("window L=" + std::to_string(G.window()));
  const std::size_t n = G.size();
  if (u.ops.size() != n) {
    r.add("shape", "one operator per group element", false,
          "got " + std::to_string(u.ops.size()) + " operators for " + std::to_string(n) + " elements");
    return r;
  }
  const auto N = u.ops[0].rows();
  for (const auto& op : u.ops)
    if (op.rows() != N || op.cols() != N) throw DimensionError("is_partial_rep: operators of different sizes");
  const ComplexMatrix I = ComplexMatrix::Identity(N, N);

  Failures pi, comm, ident, inv, hom, alt_ident, alt_inv, alt_hom;
  for (std::size_t s = 0; s < n; ++s)
    if (!linalg::is_partial_isometry(u.ops[s], tol)) pi.add("u_" + G.label(s));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      const ComplexMatrix P = u.ops[s] * u.ops[s].adjoint(), Q = u.ops[t] * u.ops[t].adjoint();
      if (linalg::max_abs(P * Q - Q * P) > tol.eps) comm.add(pair_label(G, s, t));
    }
  const auto& ue = u.ops[G.identity()];
  if (!linalg::approx_equal(ue * ue.adjoint(), I, tol)) ident.add("u_e u_e* != 1");
  if (!linalg::approx_equal(ue, I, tol)) alt_ident.add("u_e != 1");
  for (std::size_t s = 0; s < n; ++s) {
    const auto& us = u.ops[s];
    const auto& ui = u.ops[G.inverse(s)];
    if (!linalg::approx_equal(us.adjoint() * us, ui * ui.adjoint(), tol)) inv.add("s=" + G.label(s));
    if (!linalg::approx_equal(us.adjoint(), ui, tol)) alt_inv.add("s=" + G.label(s));
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      const ComplexMatrix prod = u.ops[s] * u.ops[t];
      if (!order_holds(prod, u.ops[*st], tol)) hom.add(pair_label(G, s, t));
      const ComplexMatrix rhs = u.ops[s] * u.ops[s].adjoint() * u.ops[*st];
      if (!linalg::approx_equal(prod, rhs, tol)) alt_hom.add(pair_label(G, s, t));
    }

  r.add("partial isometries", "each u_s is a partial isometry", pi.ok(), pi.text());
  r.add("commuting range projections", "u_s u_s^* commute", comm.ok(), comm.text());
  r.add("identity", "u_e u_e^* = 1", ident.ok(), ident.text());
  r.add("inverse", "u_s^* u_s = u_{s^{-1}} u_{s^{-1}}^*", inv.ok(), inv.text());
  r.add("hom", "u_s u_t ⪯ u_{st}", hom.ok(), hom.text());
  r.add("derived: u_e = 1", "u_e = 1", alt_ident.ok(), alt_ident.text());
  r.add("derived: u_s^* = u_{s^-1}", "u_s^* = u_{s^{-1}}", alt_inv.ok(), alt_inv.text());
  r.add("derived: u_s u_t = u_s u_s^* u_st", "u_s u_t = u_s u_s^* u_{st}", alt_hom.ok(), alt_hom.text());
  const bool defining = pi.ok() && comm.ok() && ident.ok() && inv.ok() && hom.ok();
  const bool derived = alt_ident.ok() && alt_inv.ok() && alt_hom.ok();
  r.add("consistency: defining conditions imply derived identities", "partial representation => derived identities",
        !defining || derived, "defining conditions hold but a derived identity fails");
  return r;
}

CovarianceResult is_covariant(const Representation& pi, const PartialRep& u, const PartialActionSystem& sys,
                              Tolerance tol) {
  CovarianceResult res;
  Report& r = res.report;
  r = Report("covariant representation");
  const auto& G = sys.group;
  const auto& A = sys.algebra;
  const std::size_t n = G.size();
  if (u.ops.size() != n) throw DimensionError("is_covariant: need one operator per group element");
  for (const auto& op : u.ops)
    if (static_cast<std::size_t>(op.rows()) != pi.dim || static_cast<std::size_t>(op.cols()) != pi.dim)
      throw DimensionError("is_covariant: representation and partial representation live on different spaces");

  Failures rp, cov, f2, f3, f4;
  for (std::size_t s = 0; s < n; ++s) {
    const auto& us = u.ops[s];
    if (!linalg::approx_equal(us * us.adjoint(), pi(A, sys.p(s)), tol)) rp.add("s=" + G.label(s));
    for (const auto& a : alg::ideal_basis(A, sys.D(G.inverse(s)))) {
      const ComplexMatrix lhs = pi(A, sys.alpha(s).apply(A, a));
      const ComplexMatrix rhs = us * pi(A, a) * us.adjoint();
      if (!linalg::approx_equal(lhs, rhs, tol)) {
        cov.add("s=" + G.label(s));
        break;
      }
    }
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      const ComplexMatrix prod = u.ops[s] * u.ops[t];
      if (!order_holds(prod, u.ops[*st], tol)) f2.add(pair_label(G, s, t));
      if (!linalg::approx_equal(pi(A, sys.p(*st)) * prod, pi(A, sys.p(s)) * u.ops[*st], tol))
        f3.add(pair_label(G, s, t));
      for (const auto& a : alg::ideal_basis(A, intersect(sys.D(s), sys.D(*st)))) {
        const ComplexMatrix pa = pi(A, a);
        if (!linalg::approx_equal(pa * prod, pa * u.ops[*st], tol)) {
          f4.add(pair_label(G, s, t));
          break;
        }
      }
    }
  res.rangeproj = rp.ok();
  res.covariance = cov.ok();
  res.ii = f2.ok();
  res.iii = f3.ok();
  res.iv = f4.ok();
  r.add("rangeproj", "u_s u_s^* = pi(p_s)", res.rangeproj, rp.text());
  r.add("covariance", "pi(alpha_s(a)) = u_s pi(a) u_s^* for a in D_{s^{-1}}", res.covariance, cov.text());
  r.add("(ii) u_s u_t ⪯ u_st", "u_s u_t ⪯ u_{st}", res.ii, f2.text());
  r.add("(iii) pi(p_st) u_s u_t = pi(p_s) u_st", "pi(p_{st}) u_s u_t = pi(p_s) u_{st}", res.iii, f3.text());
  r.add("(iv) pi(a) u_s u_t = pi(a) u_st on D_s D_st", "pi(a) u_s u_t = pi(a) u_{st}, a in D_s D_{st}", res.iv,
        f4.text());
  const std::string eq_name = "equivalence of (ii), (iii), (iv)";
  const std::string eq_anchor = "(ii) <=> (iii) <=> (iv) under rangeproj and covariance";
  if (res.rangeproj && res.covariance) {
    const bool agree = res.ii == res.iii && res.iii == res.iv;
    std::ostringstream w;
    w << "(ii)=" << res.ii << " (iii)=" << res.iii << " (iv)=" << res.iv;
    r.add(eq_name, eq_anchor, agree, w.str());
  } else {
    r.add_skip(eq_name, eq_anchor, "hypotheses rangeproj/covariance do not hold");
  }
  return res;
}

// ---------------------------------------------------------------- L_c

LcElement lc_term(std::shared_ptr<const PartialActionSystem> sys, const AlgElement& a, std::size_t s,
                  Tolerance tol) {
  alg::check_shape(sys->algebra, a);
  if (s >= sys->group.size()) throw PreconditionError("lc_term: group element out of range");
  if (!alg::lies_in(a, sys->D(s), tol))
    throw PreconditionError("F(a,s) needs a in D_s (s=" + sys->group.label(s) + ")");
  LcElement x;
  x.sys = std::move(sys);
  x.coeffs[s] = a;
  return x;
}

LcElement lc_add(const LcElement& x, const LcElement& y) {
  if (x.sys != y.sys) throw PreconditionError("lc_add: different systems");
  LcElement z = x;
  for (const auto& [s, b] : y.coeffs) {
    auto it = z.coeffs.find(s);
    if (it == z.coeffs.end())
      z.coeffs[s] = b;
    else
      it->second = alg::add(it->second, b);
  }
  return z;
}

LcElement lc_scale(const LcElement& x, Complex c) {
  LcElement z = x;
  for (auto& [s, a] : z.coeffs) a = alg::scale(a, c);
  return z;
}

LcElement lc_multiply(const LcElement& x, const LcElement& y, Tolerance tol) {
  if (x.sys != y.sys) throw PreconditionError("lc_multiply: different systems");
  const auto& sys = *x.sys;
  const auto& A = sys.algebra;
  LcElement z;
  z.sys = x.sys;
  for (const auto& [s, a] : x.coeffs) {
    const auto inv = sys.alpha(s).inverse();
    const AlgElement pulled = inv.apply(A, a);
    for (const auto& [t, b] : y.coeffs) {
      auto st = sys.group.multiply(s, t);
      if (!st) continue;
      const AlgElement c = sys.alpha(s).apply(A, alg::multiply(pulled, b));
      if (!alg::lies_in(c, sys.D(*st), tol))
        throw DomainError("lc_multiply: coefficient left D_" + sys.group.label(*st));
      auto it = z.coeffs.find(*st);
      if (it == z.coeffs.end())
        z.coeffs[*st] = c;
      else
        it->second = alg::add(it->second, c);
    }
  }
  return z;
}

LcElement lc_adjoint(const LcElement& x) {
  const auto& sys = *x.sys;
  LcElement z;
  z.sys = x.sys;
  for (const auto& [s, a] : x.coeffs) {
    const AlgElement c = sys.alpha(s).inverse().apply(sys.algebra, alg::adjoint(a));
    const auto si = sys.group.inverse(s);
    auto it = z.coeffs.find(si);
    if (it == z.coeffs.end())
      z.coeffs[si] = c;
    else
      it->second = alg::add(it->second, c);
  }
  return z;
}

double lc_max_abs_diff(const LcElement& x, const LcElement& y) {
  if (x.sys != y.sys) throw PreconditionError("lc_max_abs_diff: different systems");
  const auto zero = alg::zero(x.sys->algebra);
  double d = 0.0;
  for (std::size_t s = 0; s < x.sys->group.size(); ++s) {
    auto ix = x.coeffs.find(s), iy = y.coeffs.find(s);
    const AlgElement& a = ix == x.coeffs.end() ? zero : ix->second;
    const AlgElement& b = iy == y.coeffs.end() ? zero : iy->second;
    d = std::max(d, alg::max_abs_diff(a, b));
  }
  return d;
}

// ---------------------------------------------------------------- regular representation

RegularLayout regular_layout(const PartialActionSystem& sys) {
  RegularLayout L;
  const auto& G = sys.group;
  L.offsets.resize(G.size());
  for (std::size_t t = 0; t < G.size(); ++t)
    for (auto b : sys.D(G.inverse(t))) {
      L.offsets[t][b] = L.dim;
      L.dim += sys.algebra.size(b);
    }
  return L;
}

ComplexMatrix regular_image(const PartialActionSystem& sys, const RegularLayout& L, const AlgElement& a,
                            std::size_t s) {
  const auto& G = sys.group;
  const auto& A = sys.algebra;
  const auto N = static_cast<Eigen::Index>(L.dim);
  ComplexMatrix M = ComplexMatrix::Zero(N, N);
  const auto sinv = G.inverse(s);
  for (std::size_t t = 0; t < G.size(); ++t) {
    auto r = G.multiply(sinv, t);
    if (!r) continue;
    const AlgElement img = sys.alpha(G.inverse(t)).apply(A, alg::cut(a, sys.D(t)));
    for (const auto& [b, row] : L.offsets[t]) {
      auto col = L.offsets[*r].find(b);
      if (col == L.offsets[*r].end()) continue;
      const auto n = static_cast<Eigen::Index>(A.size(b));
      M.block(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col->second), n, n) = img.blocks[b];
    }
  }
  return M;
}

ComplexMatrix lc_image(const RegularLayout& L, const LcElement& x) {
  const auto N = static_cast<Eigen::Index>(L.dim);
  ComplexMatrix M = ComplexMatrix::Zero(N, N);
  for (const auto& [s, a] : x.coeffs) M += regular_image(*x.sys, L, a, s);
  return M;
}

ComplexMatrix CrossedProduct::pi(const AlgElement& a) const {
  return regular_image(*sys, layout, a, sys->group.identity());
}

Representation CrossedProduct::representation() const {
  Representation rep;
  rep.dim = layout.dim;
  const auto& A = sys->algebra;
  for (std::size_t b = 0; b < A.block_count(); ++b) {
    rep.unitImages.emplace_back();
    for (std::size_t j = 0; j < A.size(b); ++j)
      for (std::size_t k = 0; k < A.size(b); ++k) rep.unitImages.back().push_back(pi(alg::matrix_unit(A, b, j, k)));
  }
  return rep;
}

CrossedProduct build_regular(std::shared_ptr<const PartialActionSystem> sys, Tolerance tol) {
  CrossedProduct cp;
  cp.sys = sys;
  cp.layout = regular_layout(*sys);
  const auto& G = sys->group;
  const auto& A = sys->algebra;
  std::vector<ComplexMatrix> all;
  for (std::size_t s = 0; s < G.size(); ++s) {
    std::vector<ComplexMatrix> imgs;
    for (const auto& a : alg::ideal_basis(A, sys->D(s))) imgs.push_back(regular_image(*sys, cp.layout, a, s));
    linalg::MatrixSpan span(cp.layout.dim, cp.layout.dim);
    for (const auto& m : imgs) span.insert(m, tol);
    cp.grading.push_back(span.basis());
    all.insert(all.end(), imgs.begin(), imgs.end());
    cp.termImages.push_back(std::move(imgs));
    cp.multiplierImages.push_back(regular_image(*sys, cp.layout, sys->p(s), s));
  }
  if (G.is_finite()) {
    cp.algebraBasis = linalg::generated_algebra_basis(all, tol);
    cp.closed = true;
  }
  return cp;
}

std::vector<std::size_t> spectral_dims(const CrossedProduct& cp, Tolerance tol) {
  std::vector<std::size_t> dims;
  std::size_t total = 0;
  for (const auto& g : cp.grading) {
    dims.push_back(linalg::span_dimension(g, tol));
    total += dims.back();
  }
  if (cp.closed && total != cp.algebra_dimension())
    throw DomainError("spectral dimensions sum to " + std::to_string(total) + " but the algebra has dimension " +
                      std::to_string(cp.algebra_dimension()));
  return dims;
}

ComplexMatrix dual_coaction_degree_project(const CrossedProduct& cp, const ComplexMatrix& x, std::size_t s,
                                           Tolerance tol) {
  if (s >= cp.grading.size()) throw PreconditionError("degree out of range");
  const auto N = static_cast<Eigen::Index>(cp.dim());
  if (x.rows() != N || x.cols() != N) throw DimensionError("degree projection: wrong matrix size");
  std::vector<std::pair<std::size_t, const ComplexMatrix*>> cols;
  for (std::size_t t = 0; t < cp.grading.size(); ++t)
    for (const auto& b : cp.grading[t]) cols.emplace_back(t, &b);
  ComplexMatrix result = ComplexMatrix::Zero(N, N);
  if (cols.empty()) {
    if (linalg::max_abs(x) > tol.eps) throw DomainError("element is not in the crossed product");
    return result;
  }
  ComplexMatrix stacked(N * N, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    stacked.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const ComplexVector>(cols[k].second->data(), N * N);
  const ComplexVector target = Eigen::Map<const ComplexVector>(x.data(), N * N);
  const ComplexVector coef = stacked.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(target);
  const double residual = (stacked * coef - target).norm();
  if (residual > tol.eps * std::max(1.0, target.norm()))
    throw DomainError("element is not in the crossed product (residual " + std::to_string(residual) + ")");
  for (std::size_t k = 0; k < cols.size(); ++k)
    if (cols[k].first == s) result += coef(static_cast<Eigen::Index>(k)) * *cols[k].second;
  return result;
}

Report grading_check(const CrossedProduct& cp, Tolerance tol) {
  Report r("crossed product grading");
  const auto& G = cp.sys->group;
  std::vector<linalg::MatrixSpan> spans;
  for (const auto& g : cp.grading) spans.emplace_back(g, tol);
  Failures prod, adj;
  for (std::size_t s = 0; s < G.size() && cp.closed; ++s)
    for (std::size_t t = 0; t < G.size(); ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      bool ok = true;
      for (const auto& a : cp.grading[s]) {
        for (const auto& b : cp.grading[t])
          if (!spans[*st].contains(a * b, tol)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) prod.add(pair_label(G, s, t));
    }
  for (std::size_t s = 0; s < G.size(); ++s)
    for (const auto& a : cp.grading[s])
      if (!spans[G.inverse(s)].contains(a.adjoint(), tol)) {
        adj.add("s=" + G.label(s));
        break;
      }
  if (cp.closed)
    r.add("grading[s] grading[t] ⊂ grading[st]", "B_s B_t ⊂ B_{st}", prod.ok(), prod.text());
  else
    r.add_skip("grading[s] grading[t] ⊂ grading[st]", "B_s B_t ⊂ B_{st}",
               "window: truncated images leave the window at the boundary");
  r.add("grading[s]^* = grading[s^-1]", "B_s^* = B_{s^{-1}}", adj.ok(), adj.text());

  std::vector<ComplexMatrix> all;
  std::size_t sum = 0;
  for (const auto& g : cp.grading) {
    all.insert(all.end(), g.begin(), g.end());
    sum += g.size();
  }
  const std::size_t joint = linalg::span_dimension(all, tol);
  r.add("degrees are independent", "the sum of the spectral subspaces is direct", joint == sum,
        "span of all degrees has dim " + std::to_string(joint) + ", sum of dims " + std::to_string(sum));
  if (cp.closed) {
    r.add("degrees span the algebra", "A x G = sum of (A x G)_s", joint == cp.algebra_dimension(),
          "algebra dim " + std::to_string(cp.algebra_dimension()) + " vs " + std::to_string(joint));
    linalg::MatrixSpan alg_span(cp.algebraBasis, tol);
    bool closed = true;
    for (const auto& a : cp.algebraBasis) {
      if (!alg_span.contains(a.adjoint(), tol)) closed = false;
      for (const auto& b : cp.algebraBasis)
        if (closed && !alg_span.contains(a * b, tol)) closed = false;
      if (!closed) break;
    }
    r.add("algebra basis closed under products and adjoints", "the image is a *-algebra", closed,
          "product or adjoint escapes the span");
  } else {
    r.add_skip("degrees span the algebra", "A x G = sum of (A x G)_s", "window, no closure claim");
  }
  return r;
}

Report multiplier_membership_check(const CrossedProduct& cp, Tolerance tol) {
  Report r("multipliers");
  const auto& G = cp.sys->group;
  if (!cp.closed) {
    r.add_skip("m_s multiplies the algebra", "m_s in M(A x G)", "window, no closure claim");
    return r;
  }
  linalg::MatrixSpan span(cp.algebraBasis, tol);
  Failures f;
  for (std::size_t s = 0; s < G.size(); ++s) {
    const auto& m = cp.multiplierImages[s];
    for (const auto& b : cp.algebraBasis)
      if (!span.contains(m * b, tol) || !span.contains(b * m, tol)) {
        f.add("s=" + G.label(s));
        break;
      }
  }
  r.add("m_s multiplies the algebra", "m_s in M(A x G)", f.ok(), f.text());
  return r;
}

bool seminorm_bound_check(const CrossedProduct& cp, const AlgElement& a, std::size_t s, Tolerance tol) {
  if (!alg::lies_in(a, cp.sys->D(s), tol)) throw PreconditionError("seminorm_bound_check: a must lie in D_s");
  const double img = linalg::operator_norm(regular_image(*cp.sys, cp.layout, a, s));
  return img <= alg::norm(a) + tol.eps;
}

}  // namespace crossprod
