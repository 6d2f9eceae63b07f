#include "crossprod/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace crossprod {

FdAlgebra::FdAlgebra(std::vector<int> sizes) : blockSizes(std::move(sizes)) {
  if (blockSizes.empty()) throw PreconditionError("algebra needs at least one block");
  for (int n : blockSizes)
    if (n < 1) throw PreconditionError("block sizes must be positive");
}

std::size_t FdAlgebra::dimension() const {
  std::size_t d = 0;
  for (int n : blockSizes) d += static_cast<std::size_t>(n * n);
  return d;
}

std::size_t FdAlgebra::total_size() const {
  return static_cast<std::size_t>(std::accumulate(blockSizes.begin(), blockSizes.end(), 0));
}

std::size_t FdAlgebra::offset(std::size_t block) const {
  std::size_t o = 0;
  for (std::size_t i = 0; i < block; ++i) o += size(i);
  return o;
}

Ideal full_ideal(const FdAlgebra& A) {
  Ideal I;
  for (std::size_t i = 0; i < A.block_count(); ++i) I.insert(i);
  return I;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  Ideal out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

bool is_subset(const Ideal& a, const Ideal& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::size_t ideal_dimension(const FdAlgebra& A, const Ideal& I) {
  std::size_t d = 0;
  for (auto i : I) d += A.size(i) * A.size(i);
  return d;
}

std::string format_ideal(const Ideal& I) {
  std::string s = "{";
  bool first = true;
  for (auto i : I) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

namespace alg {

void check_shape(const FdAlgebra& A, const AlgElement& x) {
  if (x.blocks.size() != A.block_count()) throw DimensionError("element has wrong number of blocks");
  for (std::size_t i = 0; i < x.blocks.size(); ++i)
    if (static_cast<std::size_t>(x.blocks[i].rows()) != A.size(i) ||
        static_cast<std::size_t>(x.blocks[i].cols()) != A.size(i))
      throw DimensionError("block " + std::to_string(i + 1) + " has wrong shape");
}

AlgElement zero(const FdAlgebra& A) {
  AlgElement x;
  for (int n : A.blockSizes) x.blocks.push_back(ComplexMatrix::Zero(n, n));
  return x;
}

AlgElement unit(const FdAlgebra& A) {
  AlgElement x;
  for (int n : A.blockSizes) x.blocks.push_back(ComplexMatrix::Identity(n, n));
  return x;
}

AlgElement matrix_unit(const FdAlgebra& A, std::size_t b, std::size_t j, std::size_t k) {
  AlgElement x = zero(A);
  x.blocks.at(b) = linalg::matrix_unit(A.size(b), j, k);
  return x;
}

AlgElement multiply(const AlgElement& x, const AlgElement& y) {
  if (x.blocks.size() != y.blocks.size()) throw DimensionError("multiply: block count mismatch");
  AlgElement z;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) z.blocks.push_back(x.blocks[i] * y.blocks[i]);
  return z;
}

AlgElement add(const AlgElement& x, const AlgElement& y) {
  if (x.blocks.size() != y.blocks.size()) throw DimensionError("add: block count mismatch");
  AlgElement z;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) z.blocks.push_back(x.blocks[i] + y.blocks[i]);
  return z;
}

AlgElement scale(const AlgElement& x, Complex c) {
  AlgElement z;
  for (const auto& b : x.blocks) z.blocks.push_back(c * b);
  return z;
}

AlgElement adjoint(const AlgElement& x) {
  AlgElement z;
  for (const auto& b : x.blocks) z.blocks.push_back(b.adjoint());
  return z;
}

double norm(const AlgElement& x) {
  double n = 0.0;
  for (const auto& b : x.blocks) n = std::max(n, linalg::operator_norm(b));
  return n;
}

double max_abs_diff(const AlgElement& x, const AlgElement& y) {
  if (x.blocks.size() != y.blocks.size()) throw DimensionError("max_abs_diff: block count mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) d = std::max(d, linalg::max_abs_diff(x.blocks[i], y.blocks[i]));
  return d;
}

AlgElement cut(const AlgElement& x, const Ideal& I) {
  AlgElement z = x;
  for (std::size_t i = 0; i < z.blocks.size(); ++i)
    if (!I.count(i)) z.blocks[i].setZero();
  return z;
}

bool lies_in(const AlgElement& x, const Ideal& I, Tolerance tol) {
  for (std::size_t i = 0; i < x.blocks.size(); ++i)
    if (!I.count(i) && linalg::max_abs(x.blocks[i]) > tol.eps) return false;
  return true;
}

ComplexMatrix to_matrix(const FdAlgebra& A, const AlgElement& x) {
  check_shape(A, x);
  const auto N = static_cast<Eigen::Index>(A.total_size());
  ComplexMatrix m = ComplexMatrix::Zero(N, N);
  for (std::size_t i = 0; i < A.block_count(); ++i) {
    const auto o = static_cast<Eigen::Index>(A.offset(i));
    const auto n = static_cast<Eigen::Index>(A.size(i));
    m.block(o, o, n, n) = x.blocks[i];
  }
  return m;
}

std::vector<AlgElement> ideal_basis(const FdAlgebra& A, const Ideal& I) {
  std::vector<AlgElement> out;
  for (auto b : I)
    for (std::size_t j = 0; j < A.size(b); ++j)
      for (std::size_t k = 0; k < A.size(b); ++k) out.push_back(matrix_unit(A, b, j, k));
  return out;
}

}  // namespace alg

AlgElement central_projection(const FdAlgebra& A, const Ideal& I) { return alg::cut(alg::unit(A), I); }

// ---------------------------------------------------------------- partial automorphisms

PartialAutomorphism PartialAutomorphism::identity(const FdAlgebra& A, const Ideal& I) {
  PartialAutomorphism f;
  f.source = I;
  f.target = I;
  for (auto i : I) {
    f.blockMap[i] = i;
    f.unitaries[i] = ComplexMatrix::Identity(static_cast<Eigen::Index>(A.size(i)), static_cast<Eigen::Index>(A.size(i)));
  }
  return f;
}

AlgElement PartialAutomorphism::apply(const FdAlgebra& A, const AlgElement& a) const {
  alg::check_shape(A, a);
  AlgElement out = alg::zero(A);
  for (auto i : source) {
    const auto& U = unitaries.at(i);
    out.blocks.at(blockMap.at(i)) = U * a.blocks[i] * U.adjoint();
  }
  return out;
}

PartialAutomorphism PartialAutomorphism::inverse() const {
  PartialAutomorphism f;
  f.source = target;
  f.target = source;
  for (const auto& [i, j] : blockMap) {
    f.blockMap[j] = i;
    f.unitaries[j] = unitaries.at(i).adjoint();
  }
  return f;
}

std::string PartialAutomorphism::defect(const FdAlgebra& A, Tolerance tol) const {
  const std::size_t k = A.block_count();
  for (auto i : source)
    if (i >= k) return "source block out of range";
  for (auto i : target)
    if (i >= k) return "target block out of range";
  if (blockMap.size() != source.size()) return "block map does not cover the source";
  Ideal hit;
  for (const auto& [i, j] : blockMap) {
    if (!source.count(i)) return "block map defined outside the source";
    if (!target.count(j)) return "block " + std::to_string(i + 1) + " mapped outside the target";
    if (!hit.insert(j).second) return "block map is not injective";
    if (A.size(i) != A.size(j))
      return "block map changes size: " + std::to_string(i + 1) + " -> " + std::to_string(j + 1);
    auto it = unitaries.find(i);
    if (it == unitaries.end()) return "missing unitary for block " + std::to_string(i + 1);
    const auto& U = it->second;
    if (static_cast<std::size_t>(U.rows()) != A.size(i) || static_cast<std::size_t>(U.cols()) != A.size(i))
      return "unitary for block " + std::to_string(i + 1) + " has wrong shape";
    if (!U.allFinite() || linalg::max_abs(U * U.adjoint() - ComplexMatrix::Identity(U.rows(), U.cols())) > tol.eps)
      return "matrix for block " + std::to_string(i + 1) + " is not unitary";
  }
  if (hit != target) return "block map is not onto the target";
  return {};
}

PartialAutomorphism PartialAutomorphism::restrict_to(const Ideal& I) const {
  PartialAutomorphism f;
  for (auto i : I) {
    if (!source.count(i)) throw PreconditionError("restrict_to: ideal not inside the source");
    f.source.insert(i);
    f.blockMap[i] = blockMap.at(i);
    f.target.insert(blockMap.at(i));
    f.unitaries[i] = unitaries.at(i);
  }
  return f;
}

Ideal PartialAutomorphism::image(const Ideal& I) const {
  Ideal out;
  for (auto i : I) {
    auto it = blockMap.find(i);
    if (it != blockMap.end()) out.insert(it->second);
  }
  return out;
}

PartialAutomorphism compose_autos(const PartialAutomorphism& f, const PartialAutomorphism& g) {
  PartialAutomorphism h;
  for (const auto& [i, j] : g.blockMap) {
    auto it = f.blockMap.find(j);
    if (it == f.blockMap.end()) continue;
    h.source.insert(i);
    h.target.insert(it->second);
    h.blockMap[i] = it->second;
    h.unitaries[i] = f.unitaries.at(j) * g.unitaries.at(i);
  }
  return h;
}

bool autos_agree_on(const FdAlgebra& A, const PartialAutomorphism& f, const PartialAutomorphism& g, const Ideal& d,
                    Tolerance tol, std::string* witness) {
  if (!is_subset(d, f.source) || !is_subset(d, g.source))
    throw PreconditionError("autos_agree_on: ideal not contained in both domains");
  for (auto b : d) {
    for (std::size_t j = 0; j < A.size(b); ++j)
      for (std::size_t k = 0; k < A.size(b); ++k) {
        const AlgElement e = alg::matrix_unit(A, b, j, k);
        if (alg::max_abs_diff(f.apply(A, e), g.apply(A, e)) > tol.eps) {
          if (witness) {
            std::ostringstream os;
            os << "E_" << j + 1 << k + 1 << " of block " << b + 1 << " goes to block " << f.blockMap.at(b) + 1
               << " vs block " << g.blockMap.at(b) + 1;
            *witness = os.str();
          }
          return false;
        }
      }
  }
  return true;
}

// ---------------------------------------------------------------- validation

namespace {

std::string pair_label(const GroupWindow& G, std::size_t s, std::size_t t) {
  return "(" + G.label(s) + "," + G.label(t) + ")";
}

struct FailureLog {
  std::size_t count = 0;
  std::string first;
  void add(std::string w) {
    if (count++ == 0) first = std::move(w);
  }
  std::string text() const {
    if (count == 0) return {};
    return first + (count > 1 ? " (+" + std::to_string(count - 1) + " more)" : "");
  }
};

}  // namespace

ValidationResult validate_partial_action(const PartialActionSystem& sys, Tolerance tol) {
  ValidationResult out;
  Report& r = out.report;
  const auto& G = sys.group;
  const auto& A = sys.algebra;
  const std::size_t n = G.size();
  if (!G.is_finite()) r.note("window L=" + std::to_string(G.window()) + ": pairs with st outside the window are skipped");

  bool shape_ok = sys.ideals.size() == n && sys.autos.size() == n;
  r.add("structure: one ideal and one automorphism per group element", "D_s and alpha_s given for every s", shape_ok,
        "expected " + std::to_string(n) + " entries");
  if (!shape_ok) return out;

  FailureLog structural;
  for (std::size_t s = 0; s < n; ++s) {
    const auto& a = sys.alpha(s);
    for (auto b : sys.D(s))
      if (b >= A.block_count()) structural.add("D_" + G.label(s) + " names a block outside the algebra");
    if (std::string d = a.defect(A, tol); !d.empty()) structural.add("alpha_" + G.label(s) + ": " + d);
    if (a.source != sys.D(G.inverse(s)))
      structural.add("alpha_" + G.label(s) + " is not defined on D_" + G.label(G.inverse(s)));
    if (a.target != sys.D(s)) structural.add("alpha_" + G.label(s) + " does not map onto D_" + G.label(s));
  }
  r.add("structure: alpha_s is a *-isomorphism of D_{s^-1} onto D_s", "alpha_s: D_{s^{-1}} -> D_s",
        structural.count == 0, structural.text());
  if (structural.count) return out;

  r.add("(a) D_e = A", "D_e = A", sys.D(G.identity()) == full_ideal(A),
        "D_e = " + format_ideal(sys.D(G.identity())));

  FailureLog ext, dom_remark, image_law;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      const auto comp = compose_autos(sys.alpha(s), sys.alpha(t));
      const auto& big = sys.alpha(*st);
      std::string why;
      bool ok = is_subset(comp.source, big.source);
      if (!ok) {
        Ideal missing;
        std::set_difference(comp.source.begin(), comp.source.end(), big.source.begin(), big.source.end(),
                            std::inserter(missing, missing.end()));
        why = "blocks " + format_ideal(missing) + " lie in dom(alpha_s alpha_t) but not in dom(alpha_st)";
      } else {
        ok = autos_agree_on(A, comp, big, comp.source, tol, &why);
      }
      if (!ok) {
        ext.add(pair_label(G, s, t) + ": " + why);
        out.extensionFailures.emplace_back(s, t);
      }
      // dom(alpha_s alpha_t) ⊂ D_{t^-1} D_{t^-1 s^-1}
      const Ideal expected_dom = intersect(sys.D(G.inverse(t)), sys.D(G.inverse(*st)));
      if (!is_subset(comp.source, expected_dom))
        dom_remark.add(pair_label(G, s, t) + ": dom = " + format_ideal(comp.source) + " ⊄ " +
                       format_ideal(expected_dom));
      // alpha_s(D_{s^-1} D_t) = D_s D_st
      const Ideal lhs = sys.alpha(s).image(intersect(sys.D(G.inverse(s)), sys.D(t)));
      const Ideal rhs = intersect(sys.D(s), sys.D(*st));
      if (lhs != rhs) image_law.add(pair_label(G, s, t) + ": " + format_ideal(lhs) + " vs " + format_ideal(rhs));
    }
  auto& e1 = r.add("(b) alpha_st extends alpha_s alpha_t", "alpha_{st} extends alpha_s alpha_t for all s,t",
                   ext.count == 0, ext.text());
  if (ext.count > 1) {
    std::string all;
    for (auto [s, t] : out.extensionFailures) all += (all.empty() ? "" : " ") + pair_label(G, s, t);
    e1.witness += "; failing pairs: " + all;
  }

  FailureLog ident, inv;
  {
    const auto e = G.identity();
    std::string why;
    const auto id = PartialAutomorphism::identity(A, full_ideal(A));
    if (sys.alpha(e).source != full_ideal(A) || !autos_agree_on(A, sys.alpha(e), id, full_ideal(A), tol, &why))
      ident.add("alpha_e: " + (why.empty() ? std::string("domain is not A") : why));
  }
  for (std::size_t s = 0; s < n; ++s) {
    const auto& a_inv = sys.alpha(G.inverse(s));
    const auto expect = sys.alpha(s).inverse();
    std::string why;
    if (a_inv.source != expect.source || !autos_agree_on(A, a_inv, expect, expect.source, tol, &why))
      inv.add("s=" + G.label(s) + ": " + (why.empty() ? std::string("domains differ") : why));
  }
  r.add("(c) alpha_e = id", "alpha_e = identity", ident.count == 0, ident.text());
  r.add("(c) alpha_{s^-1} = alpha_s^-1", "alpha_{s^{-1}} = alpha_s^{-1}", inv.count == 0, inv.text());
  r.add("(d) alpha_s(D_{s^-1} D_t) = D_s D_st", "alpha_s(D_{s^{-1}} D_t) = D_s D_{st}", image_law.count == 0,
        image_law.text());
  r.add("dom(alpha_s alpha_t) ⊂ D_{t^-1} D_{t^-1 s^-1}", "dom(alpha_s alpha_t) ⊂ D_{t^{-1}} D_{t^{-1}s^{-1}}",
        dom_remark.count == 0, dom_remark.text());
  return out;
}

MultiplicativityResult is_multiplicative(const PartialActionSystem& sys) {
  const auto& G = sys.group;
  MultiplicativityResult res;
  if (G.kind() == GroupWindow::Kind::Finite) throw PreconditionError("is_multiplicative needs a Z or free-group window");
  if (G.kind() == GroupWindow::Kind::Integers) {
    const auto one = *G.find(ReducedWord{{1}, 1});
    for (int n = 1; n <= G.window(); ++n) {
      const auto idx = *G.find(ReducedWord{std::vector<int>(static_cast<std::size_t>(n), 1), 1});
      ++res.checked;
      if (!is_subset(sys.D(idx), sys.D(one))) {
        res.multiplicative = false;
        res.witness = "D_" + std::to_string(n) + " ⊄ D_1";
        return res;
      }
    }
    return res;
  }
  for (std::size_t w = 0; w < G.size(); ++w) {
    const auto& word = G.word(w);
    if (word.length() < 2) continue;
    const auto first = *G.find(ReducedWord{{word.letters[0]}, word.rank});
    ++res.checked;
    if (!is_subset(sys.D(w), sys.D(first))) {
      res.multiplicative = false;
      res.witness = "D_" + G.label(w) + " ⊄ D_" + G.label(first);
      return res;
    }
  }
  return res;
}

PartialActionSystem free_product_action(const FdAlgebra& A, const std::vector<PartialAutomorphism>& thetas, int L) {
  if (thetas.empty()) throw PreconditionError("free_product_action: need at least one automorphism");
  for (const auto& t : thetas)
    if (auto d = t.defect(A); !d.empty()) throw PreconditionError("free_product_action: " + d);
  PartialActionSystem sys;
  sys.name = "free-product";
  sys.algebra = A;
  const int n = static_cast<int>(thetas.size());
  sys.group = n == 1 ? GroupWindow::integers(L) : GroupWindow::free(n, L);
  const auto& G = sys.group;
  sys.ideals.assign(G.size(), {});
  sys.autos.assign(G.size(), {});
  auto letter_auto = [&](int x) { return x > 0 ? thetas[static_cast<std::size_t>(x - 1)] : thetas[static_cast<std::size_t>(-x - 1)].inverse(); };

  // Words in order of length, so the tail is always ready.
  std::vector<std::size_t> order(G.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return G.length(a) < G.length(b); });
  for (auto w : order) {
    const auto& word = G.word(w);
    if (word.is_identity()) {
      sys.ideals[w] = full_ideal(A);
      sys.autos[w] = PartialAutomorphism::identity(A, full_ideal(A));
      continue;
    }
    const int s1 = word.letters[0];
    const auto head = letter_auto(s1);
    const auto tail = *G.find(ReducedWord{std::vector<int>(word.letters.begin() + 1, word.letters.end()), word.rank});
    sys.ideals[w] = head.image(intersect(head.source, sys.ideals[tail]));
    sys.autos[w] = compose_autos(head, sys.autos[tail]);
  }
  return sys;
}

PartialActionSystem restricted_global_action(const FdAlgebra& A, const std::vector<std::size_t>& perm,
                                             const std::vector<ComplexMatrix>& unitaries, const Ideal& I, int L) {
  const std::size_t k = A.block_count();
  if (perm.size() != k || unitaries.size() != k) throw DimensionError("restricted_global_action: need one entry per block");
  PartialAutomorphism beta;
  for (std::size_t i = 0; i < k; ++i) {
    beta.source.insert(i);
    beta.target.insert(perm[i]);
    beta.blockMap[i] = perm[i];
    beta.unitaries[i] = unitaries[i];
  }
  if (auto d = beta.defect(A); !d.empty()) throw PreconditionError("restricted_global_action: " + d);
  PartialActionSystem sys;
  sys.name = "restricted-global";
  sys.algebra = A;
  sys.group = GroupWindow::integers(L);
  const auto& G = sys.group;
  sys.ideals.assign(G.size(), {});
  sys.autos.assign(G.size(), {});
  for (std::size_t w = 0; w < G.size(); ++w) {
    const int n = G.integer(w);
    PartialAutomorphism bn = PartialAutomorphism::identity(A, full_ideal(A));
    const auto step = n >= 0 ? beta : beta.inverse();
    for (int j = 0; j < std::abs(n); ++j) bn = compose_autos(step, bn);
    // alpha_n = beta_n restricted to I ∩ beta_{-n}(I)
    const Ideal src = intersect(I, bn.inverse().image(I));
    sys.autos[w] = bn.restrict_to(src);
    sys.ideals[w] = sys.autos[w].target;
  }
  return sys;
}

PartialActionSystem periodic_action(const FdAlgebra& A, int period, int L) {
  if (period < 1) throw PreconditionError("periodic_action: period must be positive");
  PartialActionSystem sys;
  sys.name = "periodic-" + std::to_string(period);
  sys.algebra = A;
  sys.group = GroupWindow::integers(L);
  for (std::size_t w = 0; w < sys.group.size(); ++w) {
    const bool on = sys.group.integer(w) % period == 0;
    sys.ideals.push_back(on ? full_ideal(A) : Ideal{});
    sys.autos.push_back(PartialAutomorphism::identity(A, sys.ideals.back()));
  }
  return sys;
}

// ---------------------------------------------------------------- fixtures

namespace fixtures {

namespace {

PartialAutomorphism swap_blocks() {
  PartialAutomorphism f;
  f.source = f.target = {0, 1};
  f.blockMap = {{0, 1}, {1, 0}};
  f.unitaries[0] = f.unitaries[1] = ComplexMatrix::Identity(1, 1);
  return f;
}

}  // namespace

PartialActionSystem flip() {
  PartialActionSystem sys;
  sys.name = "flip";
  sys.algebra = FdAlgebra({1, 1});
  sys.group = GroupWindow::finite(FiniteGroup::cyclic(2));
  sys.ideals = {full_ideal(sys.algebra), full_ideal(sys.algebra)};
  sys.autos = {PartialAutomorphism::identity(sys.algebra, full_ideal(sys.algebra)), swap_blocks()};
  return sys;
}

PartialActionSystem finite_shift() {
  PartialActionSystem sys;
  sys.name = "finite-shift";
  sys.algebra = FdAlgebra({1, 1});
  sys.group = GroupWindow::finite(FiniteGroup::cyclic(2));
  sys.ideals = {full_ideal(sys.algebra), Ideal{1}};
  sys.autos = {PartialAutomorphism::identity(sys.algebra, full_ideal(sys.algebra)),
               PartialAutomorphism::identity(sys.algebra, Ideal{1})};
  return sys;
}

PartialActionSystem nonmult_z(int L) {
  auto sys = periodic_action(FdAlgebra({1}), 2, L);
  sys.name = "nonmult-z";
  return sys;
}

PartialActionSystem trivial() {
  PartialActionSystem sys;
  sys.name = "trivial";
  sys.algebra = FdAlgebra({1, 2});
  sys.group = GroupWindow::finite(FiniteGroup::trivial());
  sys.ideals = {full_ideal(sys.algebra)};
  sys.autos = {PartialAutomorphism::identity(sys.algebra, full_ideal(sys.algebra))};
  return sys;
}

PartialActionSystem free_product(int L) {
  const FdAlgebra A({1, 1});
  const auto theta = PartialAutomorphism::identity(A, Ideal{1});
  auto sys = free_product_action(A, {theta, theta}, L);
  sys.name = "free-product";
  return sys;
}

PartialActionSystem corrupted_flip() {
  auto sys = flip();
  sys.name = "corrupted-flip";
  sys.autos[0] = swap_blocks();
  sys.autos[1] = PartialAutomorphism::identity(sys.algebra, full_ideal(sys.algebra));
  return sys;
}

PartialActionSystem cyclic_shift3() {
  PartialActionSystem sys;
  sys.name = "cyclic-shift3";
  sys.algebra = FdAlgebra({1, 1, 1});
  sys.group = GroupWindow::finite(FiniteGroup::cyclic(3));
  const auto full = full_ideal(sys.algebra);
  PartialAutomorphism shift;
  shift.source = shift.target = full;
  for (std::size_t i = 0; i < 3; ++i) {
    shift.blockMap[i] = (i + 1) % 3;
    shift.unitaries[i] = ComplexMatrix::Identity(1, 1);
  }
  sys.ideals = {full, full, full};
  sys.autos = {PartialAutomorphism::identity(sys.algebra, full), shift, shift.inverse()};
  return sys;
}

PartialActionSystem matrix_flip() {
  PartialActionSystem sys;
  sys.name = "matrix-flip";
  sys.algebra = FdAlgebra({2, 1, 1});
  sys.group = GroupWindow::finite(FiniteGroup::cyclic(2));
  PartialAutomorphism a = PartialAutomorphism::identity(sys.algebra, Ideal{0, 1});
  ComplexMatrix X(2, 2);
  X << 0, 1, 1, 0;
  a.unitaries[0] = X;
  sys.ideals = {full_ideal(sys.algebra), Ideal{0, 1}};
  sys.autos = {PartialAutomorphism::identity(sys.algebra, full_ideal(sys.algebra)), a};
  return sys;
}

std::vector<std::string> names() {
  return {"flip", "finite-shift", "nonmult-z", "trivial", "free-product", "corrupted-flip", "cyclic-shift3",
          "matrix-flip"};
}

PartialActionSystem by_name(const std::string& name) {
  if (name == "flip") return flip();
  if (name == "finite-shift") return finite_shift();
  if (name == "nonmult-z") return nonmult_z();
  if (name == "trivial") return trivial();
  if (name == "free-product") return free_product();
  if (name == "corrupted-flip") return corrupted_flip();
  if (name == "cyclic-shift3") return cyclic_shift3();
  if (name == "matrix-flip") return matrix_flip();
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace fixtures

}  // namespace crossprod
