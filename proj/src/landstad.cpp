#include "crossprod/landstad.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace crossprod {

namespace {

std::string pair_label(const GroupWindow& G, std::size_t s, std::size_t t) {
  return "(" + G.label(s) + "," + G.label(t) + ")";
}

ComplexMatrix zero(std::size_t n) { return linalg::zeros(n); }

ComplexMatrix random_combination(const std::vector<ComplexMatrix>& basis, std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix x = zero(n);
  for (const auto& b : basis) x += Complex(gauss(rng), gauss(rng)) * b;
  return x;
}

bool close(const ComplexMatrix& a, const ComplexMatrix& b, Tolerance tol) { return linalg::max_abs_diff(a, b) <= tol.eps; }

// u ⪯ v for arbitrary matrices, without the partial-isometry precondition.
bool below(const ComplexMatrix& u, const ComplexMatrix& v, Tolerance tol) {
  return close(u * u.adjoint(), u * v.adjoint(), tol);
}

std::size_t element_order(const GroupWindow& G, std::size_t s) {
  if (!G.is_finite()) return 0;
  std::size_t k = 1;
  std::size_t x = s;
  while (x != G.identity()) {
    x = *G.multiply(x, s);
    ++k;
  }
  return k;
}

// Principal k-th root of a normal matrix on its support, identity on the kernel.
ComplexMatrix root_correction(const ComplexMatrix& c, std::size_t k, Tolerance tol) {
  Eigen::ComplexSchur<ComplexMatrix> schur(c);
  const ComplexMatrix& Q = schur.matrixU();
  const ComplexMatrix& T = schur.matrixT();
  const auto n = c.rows();
  ComplexMatrix diag = ComplexMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(T(i, i)) > 1e3 * tol.eps) diag(i, i) = std::polar(1.0, std::arg(T(i, i)) / static_cast<double>(k));
  return Q * diag * Q.adjoint();
}

struct Cluster {
  double value;
  std::vector<Eigen::Index> columns;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXd& values, double gap) {
  std::vector<Cluster> out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!out.empty() && std::abs(values(i) - out.back().value) <= gap)
      out.back().columns.push_back(i);
    else
      out.push_back({values(i), {i}});
  }
  return out;
}

ComplexMatrix cluster_projection(const ComplexMatrix& vecs, const Cluster& c) {
  ComplexMatrix V(vecs.rows(), static_cast<Eigen::Index>(c.columns.size()));
  for (std::size_t j = 0; j < c.columns.size(); ++j) V.col(static_cast<Eigen::Index>(j)) = vecs.col(c.columns[j]);
  return V * V.adjoint();
}

ComplexMatrix orthonormal_range(const ComplexMatrix& p) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
  ComplexMatrix V(p.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) V.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
  return V;
}

struct BlockFrame {
  std::size_t size = 0;
  ComplexMatrix q;                       // minimal central projection
  std::vector<ComplexMatrix> units;      // e_jk at j*n+k
  double trace = 0.0;
  const ComplexMatrix& e(std::size_t j, std::size_t k) const { return units[j * size + k]; }
};

ComplexMatrix block_coordinates(const BlockFrame& f, const ComplexMatrix& x) {
  const auto n = static_cast<Eigen::Index>(f.size);
  ComplexMatrix c(n, n);
  const Complex tr11 = f.e(0, 0).trace();
  for (std::size_t j = 0; j < f.size; ++j)
    for (std::size_t k = 0; k < f.size; ++k)
      c(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = (f.e(0, j) * x * f.e(k, 0)).trace() / tr11;
  return c;
}

}  // namespace

// ---------------------------------------------------------------- GradedMatrixAlgebra

ComplexMatrix GradedMatrixAlgebra::projection(std::size_t s, Tolerance tol) const {
  const auto& B = grading.at(s);
  if (B.empty()) return zero(dim);
  return linalg::range_projection(B, tol);
}

GradedMatrixAlgebra graded_from_crossed_product(const CrossedProduct& cp) {
  GradedMatrixAlgebra g;
  g.dim = cp.dim();
  g.group = cp.sys->group;
  g.grading = cp.grading;
  return g;
}

// ---------------------------------------------------------------- models

MatrixGradedModel::MatrixGradedModel(const GradedMatrixAlgebra& g, Tolerance tol) : g_(&g), tol_(tol) {
  for (std::size_t s = 0; s < g.group.size(); ++s) {
    linalg::MatrixSpan span(g.dim, g.dim);
    for (const auto& b : g.B(s)) span.insert(b, tol);
    spans_.push_back(std::move(span));
    projections_.push_back(g.projection(s, tol));
  }
}

Coordinates MatrixGradedModel::coordinates(const Element& x) const {
  Coordinates c;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (x(i, j) != Complex(0.0, 0.0)) c.push_back({{static_cast<int>(i), static_cast<int>(j)}, x(i, j)});
  return c;
}

LcGradedModel::LcGradedModel(std::shared_ptr<const PartialActionSystem> sys, Tolerance tol)
    : sys_(std::move(sys)), tol_(tol) {}

std::vector<LcElement> LcGradedModel::basis(std::size_t s) const {
  std::vector<LcElement> out;
  if (std::find(dropped_.begin(), dropped_.end(), s) != dropped_.end()) return out;
  for (const auto& a : alg::ideal_basis(sys_->algebra, sys_->D(s))) out.push_back(lc_term(sys_, a, s, tol_));
  return out;
}

bool LcGradedModel::in_degree(const LcElement& x, std::size_t s) const {
  for (const auto& [t, a] : x.coeffs)
    if (t != s && alg::norm(a) > tol_.eps) return false;
  return true;
}

bool LcGradedModel::is_zero(const LcElement& x) const {
  for (const auto& kv : x.coeffs)
    if (alg::max_abs_diff(kv.second, alg::zero(sys_->algebra)) > tol_.eps) return false;
  return true;
}

Coordinates LcGradedModel::coordinates(const LcElement& x) const {
  Coordinates c;
  for (const auto& [s, a] : x.coeffs)
    for (std::size_t b = 0; b < a.blocks.size(); ++b) {
      const auto& m = a.blocks[b];
      for (Eigen::Index j = 0; j < m.rows(); ++j)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
          if (m(j, k) != Complex(0.0, 0.0))
            c.push_back({{static_cast<int>(s), static_cast<int>(b), static_cast<int>(j), static_cast<int>(k)}, m(j, k)});
    }
  return c;
}

LcElement LcGradedModel::projection(std::size_t s) const {
  return lc_term(sys_, sys_->p(s), sys_->group.identity(), tol_);
}

LcElement LcGradedModel::multiplier(std::size_t s) const { return lc_term(sys_, sys_->p(s), s, tol_); }

static_assert(GradedModel<MatrixGradedModel>);
static_assert(GradedModel<LcGradedModel>);

// ---------------------------------------------------------------- grading axioms

Report validate_grading(const GradedMatrixAlgebra& g, Tolerance tol) {
  Report r("grading");
  r.note("grading model: the coaction is represented by its spectral subspaces");
  const auto& G = g.group;
  const auto N = static_cast<Eigen::Index>(g.dim);
  bool shapes = g.grading.size() == G.size();
  for (const auto& B : g.grading)
    for (const auto& b : B) shapes = shapes && b.rows() == N && b.cols() == N && linalg::all_finite(b);
  r.add("shapes", "every B_s is a space of N x N matrices", shapes,
        "expected " + std::to_string(G.size()) + " degrees of " + std::to_string(g.dim) + "x" +
            std::to_string(g.dim) + " finite matrices");
  if (!shapes) return r;
  if (!G.is_finite()) r.note("window: words of length <= " + std::to_string(G.window()));

  std::vector<linalg::MatrixSpan> spans;
  for (std::size_t s = 0; s < G.size(); ++s) {
    linalg::MatrixSpan span(g.dim, g.dim);
    for (const auto& b : g.B(s)) span.insert(b, tol);
    spans.push_back(std::move(span));
  }
  Failures prod, adj;
  for (std::size_t s = 0; s < G.size(); ++s)
    for (std::size_t t = 0; t < G.size(); ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      bool ok = true;
      for (const auto& a : g.B(s)) {
        for (const auto& b : g.B(t))
          if (!spans[*st].contains(a * b, tol)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) prod.add(pair_label(G, s, t));
    }
  for (std::size_t s = 0; s < G.size(); ++s)
    for (const auto& a : g.B(s))
      if (!spans[G.inverse(s)].contains(a.adjoint(), tol)) {
        adj.add("s=" + G.label(s));
        break;
      }
  r.add("B_s B_t ⊂ B_st", "B_s B_t ⊂ B_{st}", prod.ok(), prod.text());
  r.add("B_s^* = B_{s^-1}", "B_s^* = B_{s^{-1}}", adj.ok(), adj.text());

  std::vector<ComplexMatrix> all;
  std::size_t sum = 0;
  for (std::size_t s = 0; s < G.size(); ++s) {
    all.insert(all.end(), g.B(s).begin(), g.B(s).end());
    sum += spans[s].dimension();
  }
  const std::size_t joint = all.empty() ? 0 : linalg::span_dimension(all, tol);
  r.add("degrees independent", "B = direct sum of the B_s", joint == sum,
        "joint span " + std::to_string(joint) + " vs sum " + std::to_string(sum));
  return r;
}

std::string certificate_defect(const GradedMatrixAlgebra& g, std::size_t s, const ComplexMatrix& m, Tolerance tol) {
  MatrixGradedModel model(g, tol);
  return graded::certificate_defect(model, s, m);
}

// ---------------------------------------------------------------- certificate search

std::optional<ComplexMatrix> find_certificate(const GradedMatrixAlgebra& g, std::size_t s, int attempts,
                                              std::uint64_t seed, Tolerance tol) {
  const auto& B = g.B(s);
  const ComplexMatrix p = g.projection(s, tol);
  MatrixGradedModel model(g, tol);
  if (B.empty() || linalg::max_abs(p) <= tol.eps) {
    ComplexMatrix z = zero(g.dim);
    if (graded::certificate_defect(model, s, z).empty()) return z;
    return std::nullopt;
  }
  const bool involutive = g.group.inverse(s) == s;
  for (int a = 0; a < attempts; ++a) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(a)};
    std::mt19937_64 rng(seq);
    ComplexMatrix x = random_combination(B, g.dim, rng);
    if (involutive) x = (x + x.adjoint()).eval();
    const ComplexMatrix m = linalg::polar_partial_isometry(x, tol);
    if (graded::certificate_defect(model, s, m).empty()) return m;
  }
  return std::nullopt;
}

namespace {

Report verify_family(const GradedMatrixAlgebra& g, const std::vector<ComplexMatrix>& m, Tolerance tol) {
  Report r("certificate family");
  const auto& G = g.group;
  MatrixGradedModel model(g, tol.scaled(10));
  Failures cert, inv, ord;
  for (std::size_t s = 0; s < G.size(); ++s) {
    const auto d = graded::certificate_defect(model, s, m[s]);
    if (!d.empty()) cert.add("s=" + G.label(s) + ": " + d);
    if (!close(m[G.inverse(s)], m[s].adjoint(), tol.scaled(10))) inv.add("s=" + G.label(s));
  }
  for (std::size_t s = 0; s < G.size(); ++s)
    for (std::size_t t = 0; t < G.size(); ++t) {
      auto st = G.multiply(s, t);
      if (st && !below(m[s] * m[t], m[*st], tol.scaled(10))) ord.add(pair_label(G, s, t));
    }
  r.add("certificates", "m_s ∈ M(B_s), m_s m_s^* = p_s, m_s^* m_s = p_{s^{-1}}", cert.ok(), cert.text());
  r.add("m_e = p_e", "m_e = p_e", close(m[G.identity()], g.projection(G.identity(), tol), tol.scaled(10)),
        "m_e differs from the unit of B_e");
  r.add("m_{s^-1} = m_s^*", "m_{s^{-1}} = m_s^*", inv.ok(), inv.text());
  r.add("m_s m_t ⪯ m_st", "m_s m_t ⪯ m_{st}", ord.ok(), ord.text());
  return r;
}

// Elements ordered so that every s is preceded by shorter factors (words) or by index (finite groups).
std::vector<std::size_t> search_order(const GroupWindow& G) {
  std::vector<std::size_t> order(G.size());
  std::iota(order.begin(), order.end(), 0);
  if (!G.is_finite())
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return G.length(a) < G.length(b); });
  return order;
}

}  // namespace

CertificateFamily find_certificates(const GradedMatrixAlgebra& g, int attempts, std::uint64_t seed, Tolerance tol) {
  CertificateFamily fam;
  const auto& G = g.group;
  const std::size_t n = g.dim;
  std::vector<ComplexMatrix> p;
  for (std::size_t s = 0; s < G.size(); ++s) p.push_back(g.projection(s, tol));
  const auto order = search_order(G);

  for (int a = 0; a < std::max(attempts, 1); ++a) {
    fam.attempts_used = a + 1;
    std::vector<ComplexMatrix> m(G.size());
    std::vector<bool> known(G.size(), false);
    m[G.identity()] = p[G.identity()];
    known[G.identity()] = true;
    bool consistent = true;
    std::string why;

    for (std::size_t s : order) {
      if (known[s]) continue;
      // determined part from m_ab = m_a m_b on p_a
      ComplexMatrix Q = zero(n), Mdet = zero(n);
      for (std::size_t x = 0; x < G.size() && consistent; ++x) {
        if (!known[x] || x == G.identity()) continue;
        for (std::size_t y = 0; y < G.size(); ++y) {
          if (!known[y] || y == G.identity()) continue;
          auto xy = G.multiply(x, y);
          if (!xy || *xy != s) continue;
          const ComplexMatrix P = p[x] * p[s];
          const ComplexMatrix V = m[x] * m[y];
          if (!close(P * Q * V, P * Mdet, tol.scaled(100))) {
            consistent = false;
            why = "conflicting products for s=" + G.label(s);
            break;
          }
          const ComplexMatrix fresh = P - P * Q;
          Mdet += fresh * V;
          Q += fresh;
        }
      }
      if (!consistent) break;
      const std::size_t si = G.inverse(s);
      const ComplexMatrix R = p[si] - Mdet.adjoint() * Mdet;
      std::seed_seq seq{seed, static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(a)};
      std::mt19937_64 rng(seq);
      ComplexMatrix x = (p[s] - Q) * random_combination(g.B(s), n, rng) * R;
      if (si == s) x = (x + x.adjoint()).eval();
      ComplexMatrix ms = Mdet + linalg::polar_partial_isometry(x, tol);
      const std::size_t k = element_order(G, s);
      if (k > 2 && linalg::max_abs(Q) <= tol.eps) {
        ComplexMatrix c = ms;
        for (std::size_t i = 1; i < k; ++i) c = c * ms;
        if (close(c * c.adjoint(), c.adjoint() * c, tol.scaled(100))) ms = ms * root_correction(c, k, tol).adjoint();
      }
      m[s] = ms;
      known[s] = true;
      m[si] = ms.adjoint();
      known[si] = true;
    }
    if (!consistent) {
      fam.notes.push_back("attempt " + std::to_string(a + 1) + ": " + why);
      continue;
    }
    Report r = verify_family(g, m, tol);
    if (r.passed()) {
      fam.m = std::move(m);
      fam.found = true;
      fam.report = std::move(r);
      break;
    }
    fam.report = std::move(r);
    if (const auto* f = fam.report.first_failure())
      fam.notes.push_back("attempt " + std::to_string(a + 1) + ": " + f->name + " " + f->witness);
  }
  if (!fam.found) fam.notes.push_back("no coherent certificate family found");

  // flag certificates that live outside span(B)
  if (fam.found) {
    std::vector<ComplexMatrix> all;
    for (const auto& B : g.grading) all.insert(all.end(), B.begin(), B.end());
    linalg::MatrixSpan span(n, n);
    for (const auto& b : all) span.insert(b, tol);
    for (std::size_t s = 0; s < G.size(); ++s)
      if (!span.contains(fam.m[s], tol.scaled(10)))
        fam.notes.push_back("m_" + G.label(s) + ": ambient multiplier — review");
  }
  return fam;
}

// ---------------------------------------------------------------- reconstruction

PartialActionSystem reconstruct_action(const GradedMatrixAlgebra& g, const std::vector<ComplexMatrix>& certs,
                                       Tolerance tol) {
  const auto& G = g.group;
  const std::size_t e = G.identity();
  const std::size_t N = g.dim;
  if (certs.size() != G.size()) throw PreconditionError("reconstruct_action: need one certificate per degree");
  const auto& Be = g.B(e);
  if (Be.empty()) throw ReconstructionError(e, e, "B_e is zero");
  linalg::MatrixSpan be_span(N, N);
  for (const auto& b : Be) be_span.insert(b, tol);

  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // minimal central projections of B_e
  const auto centre = linalg::center_basis(Be, tol);
  ComplexMatrix h = zero(N);
  for (const auto& z : centre) h += gauss(rng) * (z + z.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> hs(h);
  std::vector<ComplexMatrix> qs;
  for (const auto& c : cluster_eigenvalues(hs.eigenvalues(), 1e-6 * std::max(1.0, hs.eigenvalues().cwiseAbs().maxCoeff()))) {
    ComplexMatrix q = cluster_projection(hs.eigenvectors(), c);
    if (be_span.contains(q, tol.scaled(1e3))) qs.push_back(std::move(q));
  }

  // matrix units inside each q B_e
  std::vector<BlockFrame> frames;
  for (const auto& q : qs) {
    std::vector<ComplexMatrix> qb;
    for (const auto& b : be_span.basis()) qb.push_back(q * b * q);
    const std::size_t d = linalg::span_dimension(qb, tol);
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
    if (n * n != d || n == 0) throw ReconstructionError(e, e, "central summand of B_e is not a full matrix algebra");
    BlockFrame f;
    f.size = n;
    f.q = q;
    f.trace = q.trace().real();
    const ComplexMatrix V = orthonormal_range(q);
    ComplexMatrix y = zero(N);
    for (const auto& b : qb) y += gauss(rng) * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ys(V.adjoint() * y * V);
    auto clusters = cluster_eigenvalues(ys.eigenvalues(), 1e-6 * std::max(1.0, ys.eigenvalues().cwiseAbs().maxCoeff()));
    if (clusters.size() != n) throw ReconstructionError(e, e, "could not split a central summand into matrix units");
    std::vector<ComplexMatrix> diag;
    for (const auto& c : clusters) diag.push_back(V * cluster_projection(ys.eigenvectors(), c) * V.adjoint());
    ComplexMatrix z = zero(N);
    for (const auto& b : qb) z += Complex(gauss(rng), gauss(rng)) * b;
    std::vector<ComplexMatrix> row(n);
    row[0] = diag[0];
    for (std::size_t j = 1; j < n; ++j) row[j] = linalg::polar_partial_isometry(diag[0] * z * diag[j], tol);
    f.units.resize(n * n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) f.units[j * n + k] = row[j].adjoint() * row[k];
    frames.push_back(std::move(f));
  }
  std::stable_sort(frames.begin(), frames.end(), [](const BlockFrame& a, const BlockFrame& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.trace < b.trace - 1e-6;
  });

  PartialActionSystem sys;
  sys.name = "reconstructed";
  std::vector<int> sizes;
  for (const auto& f : frames) sizes.push_back(static_cast<int>(f.size));
  sys.algebra = FdAlgebra(sizes);
  sys.group = G;

  const auto psproj = [&](std::size_t s) { return g.projection(s, tol); };
  for (std::size_t s = 0; s < G.size(); ++s) {
    const ComplexMatrix ps = psproj(s);
    Ideal I;
    for (std::size_t b = 0; b < frames.size(); ++b) {
      const ComplexMatrix qp = frames[b].q * ps;
      if (close(qp, frames[b].q, tol.scaled(1e3)))
        I.insert(b);
      else if (linalg::max_abs(qp) > tol.scaled(1e3).eps)
        throw ReconstructionError(s, s, "p_" + G.label(s) + " is not central in B_e");
    }
    sys.ideals.push_back(std::move(I));
  }

  for (std::size_t s = 0; s < G.size(); ++s) {
    const ComplexMatrix& m = certs[s];
    PartialAutomorphism a;
    a.source = sys.ideals[G.inverse(s)];
    a.target = sys.ideals[s];
    for (std::size_t b : a.source) {
      const ComplexMatrix img = m * frames[b].q * m.adjoint();
      std::optional<std::size_t> tgt;
      for (std::size_t c = 0; c < frames.size(); ++c)
        if (close(img, frames[c].q, tol.scaled(1e3))) tgt = c;
      if (!tgt || frames[*tgt].size != frames[b].size)
        throw ReconstructionError(s, G.inverse(s), "Ad m_" + G.label(s) + " does not map a block onto a block");
      const std::size_t n = frames[b].size;
      std::vector<ComplexMatrix> C(n);
      for (std::size_t j = 0; j < n; ++j) C[j] = block_coordinates(frames[*tgt], m * frames[b].e(j, 0) * m.adjoint());
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> c11(C[0]);
      const ComplexVector u1 = c11.eigenvectors().col(static_cast<Eigen::Index>(n) - 1);
      ComplexMatrix U(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t j = 0; j < n; ++j) U.col(static_cast<Eigen::Index>(j)) = C[j] * u1;
      a.blockMap[b] = *tgt;
      a.unitaries[b] = U;
    }
    sys.autos.push_back(std::move(a));
  }

  for (std::size_t s = 0; s < G.size(); ++s)
    for (std::size_t t = 0; t < G.size(); ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      const Ideal dom = intersect(sys.D(G.inverse(s)), sys.D(t));
      if (!is_subset(sys.alpha(s).image(dom), sys.D(*st)))
        throw ReconstructionError(s, t, "alpha_s(D_{s^-1} D_t) ⊄ D_st at " + pair_label(G, s, t));
    }
  const auto v = validate_partial_action(sys, tol.scaled(1e3));
  if (!v.passed()) {
    if (!v.extensionFailures.empty()) {
      auto [s, t] = v.extensionFailures.front();
      throw ReconstructionError(s, t, "alpha_st does not extend alpha_s alpha_t at " + pair_label(G, s, t));
    }
    const auto* f = v.report.first_failure();
    throw ReconstructionError(e, e, "reconstructed action invalid: " + (f ? f->name + " " + f->witness : ""));
  }
  return sys;
}

// ---------------------------------------------------------------- module isomorphism

Report module_iso_check(const GradedMatrixAlgebra& g, const std::vector<ComplexMatrix>& certs, Tolerance tol) {
  Report r("module isomorphism");
  const auto& G = g.group;
  if (certs.size() != G.size()) throw PreconditionError("module_iso_check: need one certificate per degree");
  const auto psi = [&](std::size_t s, const ComplexMatrix& x) { return ComplexMatrix(x * certs[s].adjoint()); };
  Failures comp, inner, range, bij;
  for (std::size_t s = 0; s < G.size(); ++s)
    for (std::size_t t = 0; t < G.size(); ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      bool ok = true;
      for (const auto& x : g.B(s)) {
        for (const auto& y : g.B(t))
          if (!close(psi(*st, x * y), psi(s, x * psi(t, y)), tol)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) comp.add(pair_label(G, s, t));
    }
  for (std::size_t s = 0; s < G.size(); ++s) {
    const auto& B = g.B(s);
    bool ok = true;
    for (const auto& x : B)
      for (const auto& y : B)
        if (ok && !close(psi(s, x) * psi(s, y).adjoint(), x * y.adjoint(), tol)) ok = false;
    if (!ok) inner.add("s=" + G.label(s));

    std::vector<ComplexMatrix> D;
    for (const auto& x : B)
      for (const auto& y : B) D.push_back(x * y.adjoint());
    linalg::MatrixSpan dspan(g.dim, g.dim);
    for (const auto& d : D) dspan.insert(d, tol);
    std::vector<ComplexMatrix> images;
    bool in_range = true;
    for (const auto& x : B) {
      images.push_back(psi(s, x));
      if (!dspan.contains(images.back(), tol)) in_range = false;
    }
    if (!in_range) range.add("s=" + G.label(s));
    const std::size_t dimB = B.empty() ? 0 : linalg::span_dimension(B, tol);
    const std::size_t dimImg = images.empty() ? 0 : linalg::span_dimension(images, tol);
    if (dimB != dimImg || dimB != dspan.dimension())
      bij.add("s=" + G.label(s) + ": dim B_s=" + std::to_string(dimB) + ", dim ψ_s(B_s)=" + std::to_string(dimImg) +
              ", dim D_s=" + std::to_string(dspan.dimension()));
  }
  r.add("ψ_st(xy) = ψ_s(xψ_t(y))", "ψ_{st}(xy) = ψ_s(x ψ_t(y)), ψ_s(x) = x m_s^*", comp.ok(), comp.text());
  r.add("ψ_s preserves inner products", "(x m_s^*)(y m_s^*)^* = x y^*", inner.ok(), inner.text());
  r.add("ψ_s(B_s) ⊂ D_s", "ψ_s maps B_s into D_s = B_s B_s^*", range.ok(), range.text());
  r.add("ψ_s bijective", "dim ψ_s(B_s) = dim B_s = dim D_s", bij.ok(), bij.text());
  return r;
}

// ---------------------------------------------------------------- round trip

RoundTrip landstad_roundtrip(const GradedMatrixAlgebra& g, int attempts, std::uint64_t seed, Tolerance tol) {
  RoundTrip out;
  out.report = Report("landstad round trip");
  const auto& G = g.group;
  const Report vg = validate_grading(g, tol);
  out.report.append(vg, "grading: ");
  for (const auto& B : g.grading) out.originalDims.push_back(B.empty() ? 0 : linalg::span_dimension(B, tol));
  if (!vg.passed()) return out;

  auto fam = find_certificates(g, attempts, seed, tol);
  out.report.add("certificate family found", "there is a partial representation s -> m_s ∈ M(B_s), m_s m_s^* = p_s",
                 fam.found, fam.notes.empty() ? "" : fam.notes.back());
  for (const auto& n : fam.notes) out.report.note(n);
  out.report.note("certificate attempts used: " + std::to_string(fam.attempts_used));
  if (!fam.found) return out;
  out.report.append(fam.report, "certificates: ");

  try {
    out.reconstructed = reconstruct_action(g, fam.m, tol);
    out.report.add("reconstruction", "alpha_s = Ad m_s is a partial action of G on B_e", true);
  } catch (const ReconstructionError& err) {
    out.report.add("reconstruction", "alpha_s = Ad m_s is a partial action of G on B_e", false,
                   std::string(err.what()) + " at " + pair_label(G, err.s(), err.t()));
    return out;
  }
  out.report.append(module_iso_check(g, fam.m, tol), "module: ");

  const auto& sys = *out.reconstructed;
  if (G.is_finite()) {
    const auto cp = build_regular(sys, tol);
    out.reconstructedDims = spectral_dims(cp, tol);
  } else {
    for (std::size_t s = 0; s < G.size(); ++s) out.reconstructedDims.push_back(ideal_dimension(sys.algebra, sys.D(s)));
  }
  Failures dims;
  for (std::size_t s = 0; s < G.size(); ++s)
    if (out.originalDims[s] != out.reconstructedDims[s])
      dims.add("s=" + G.label(s) + ": " + std::to_string(out.originalDims[s]) + " vs " +
               std::to_string(out.reconstructedDims[s]));
  out.report.add("per-degree dimensions reproduced", "(B_e ×_alpha G)_s ≅ B_s", dims.ok(), dims.text());
  return out;
}

}  // namespace crossprod
