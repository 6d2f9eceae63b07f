#include "crossprod/wiener_hopf.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "crossprod/errors.hpp"

namespace crossprod {

namespace {

using QloPtr = std::shared_ptr<const QuasiLatticeOrder>;

void accumulate(std::map<WHTerm, Complex>& terms, const WHTerm& t, Complex c) {
  auto [it, inserted] = terms.emplace(t, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0, 0.0)) terms.erase(it);
}

void check_same(const WHElement& x, const WHElement& y) {
  if (x.qlo != y.qlo && (!x.qlo || !y.qlo || x.qlo->name() != y.qlo->name()))
    throw PreconditionError("Wiener-Hopf elements over different quasi-lattice orders");
}

bool in_P(const QuasiLatticeOrder& q, const QloElement& p) { return q.is_element(p) && q.in_cone(p); }

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

namespace wh {

WHElement zero(QloPtr qlo) {
  if (!qlo) throw PreconditionError("missing quasi-lattice order");
  return WHElement{std::move(qlo), {}};
}

WHElement term(QloPtr qlo, QloElement p, QloElement q, Complex c) {
  WHElement x = zero(std::move(qlo));
  if (!in_P(*x.qlo, p) || !in_P(*x.qlo, q))
    throw PreconditionError("W index outside the cone: " + format_term(WHTerm{p, q}));
  if (c != Complex(0.0, 0.0)) x.terms.emplace(WHTerm{std::move(p), std::move(q)}, c);
  return x;
}

WHElement add(const WHElement& x, const WHElement& y) {
  check_same(x, y);
  WHElement r = x;
  for (const auto& [t, c] : y.terms) accumulate(r.terms, t, c);
  return r;
}

WHElement scale(const WHElement& x, Complex c) {
  WHElement r = zero(x.qlo);
  if (c == Complex(0.0, 0.0)) return r;
  for (const auto& [t, a] : x.terms) r.terms.emplace(t, a * c);
  return r;
}

WHElement multiply_terms(QloPtr qlo, const WHTerm& a, const WHTerm& b) {
  const auto& Q = *qlo;
  WHElement r = zero(qlo);
  const auto j = Q.join(a.q, b.p);
  if (!j) return r;
  const QloElement left = Q.multiply(a.p, Q.multiply(Q.inverse(a.q), *j));
  const QloElement right = Q.multiply(b.q, Q.multiply(Q.inverse(b.p), *j));
  if (!in_P(Q, left) || !in_P(Q, right))
    throw DomainError("product index left the cone: " + format_term(a) + " " + format_term(b));
  r.terms.emplace(WHTerm{left, right}, 1.0);
  return r;
}

WHElement multiply(const WHElement& x, const WHElement& y) {
  check_same(x, y);
  WHElement r = zero(x.qlo);
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms)
      for (const auto& [t, c] : multiply_terms(x.qlo, a, b).terms) accumulate(r.terms, t, ca * cb * c);
  return r;
}

WHElement adjoint(const WHElement& x) {
  WHElement r = zero(x.qlo);
  for (const auto& [t, c] : x.terms) r.terms.emplace(WHTerm{t.q, t.p}, std::conj(c));
  return r;
}

bool is_zero(const WHElement& x, double eps) {
  for (const auto& kv : x.terms)
    if (std::abs(kv.second) > eps) return false;
  return true;
}

bool equal(const WHElement& x, const WHElement& y, double eps) { return is_zero(add(x, scale(y, -1.0)), eps); }

std::string format_term(const WHTerm& t) {
  const bool q_unit = std::all_of(t.q.begin(), t.q.end(), [](int v) { return v == 0; });
  const bool p_unit = std::all_of(t.p.begin(), t.p.end(), [](int v) { return v == 0; });
  if (q_unit) return "W[" + join_ints(t.p) + "]";
  if (p_unit) return "W[" + join_ints(t.q) + "]^";
  return "W[" + join_ints(t.p) + "]*W[" + join_ints(t.q) + "]^";
}

std::string format(const WHElement& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    if (c != Complex(1.0, 0.0)) os << "(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*";
    os << format_term(t);
  }
  return os.str();
}

WHElement parse(const std::string& text, QloPtr qlo) {
  const auto& Q = *qlo;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  WHElement acc = term(qlo, Q.identity(), Q.identity());
  while (true) {
    expect('W');
    expect('[');
    QloElement p;
    skip();
    if (i < text.size() && text[i] != ']') {
      while (true) {
        skip();
        const std::size_t start = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || (i == start + 1 && text[start] == '-')) throw ParseError("expected an integer", start);
        p.push_back(std::stoi(text.substr(start, i - start)));
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
    }
    const std::size_t close = i;
    expect(']');
    if (!in_P(Q, p)) throw ParseError("index [" + join_ints(p) + "] is not in the cone of " + Q.name(), close);
    skip();
    bool star = false;
    if (i < text.size() && text[i] == '^') {
      star = true;
      ++i;
    }
    acc = multiply(acc, star ? term(qlo, Q.identity(), p) : term(qlo, p, Q.identity()));
    skip();
    if (i >= text.size()) break;
    expect('*');
    skip();
  }
  return acc;
}

std::size_t max_index_length(const WHElement& x) {
  std::size_t m = 0;
  for (const auto& kv : x.terms) m = std::max({m, x.qlo->length(kv.first.p), x.qlo->length(kv.first.q)});
  return m;
}

}  // namespace wh

QloElement wh_degree(const QuasiLatticeOrder& qlo, const WHTerm& t) { return qlo.multiply(t.p, qlo.inverse(t.q)); }

WHElement wh_partial_rep(QloPtr qlo, const QloElement& s) {
  const auto st = qlo->sigma_tau(s);
  if (!st) return wh::zero(qlo);
  return wh::term(qlo, st->first, st->second);
}

bool wh_order_check(const QuasiLatticeOrder& qlo, const WHTerm& x, const WHTerm& y) {
  if (!in_P(qlo, x.p) || !in_P(qlo, x.q) || !in_P(qlo, y.p) || !in_P(qlo, y.q)) return false;
  return wh_degree(qlo, x) == wh_degree(qlo, y) && qlo.leq(y.p, x.p);
}

std::vector<QloElement> wh_basis(const QuasiLatticeOrder& qlo, int N) {
  if (N < 0) throw PreconditionError("truncation depth must be >= 0");
  return qlo.cone_window(N);
}

namespace {

struct Truncation {
  std::vector<QloElement> basis;
  std::map<QloElement, Eigen::Index> index;
  explicit Truncation(const QuasiLatticeOrder& q, int N) : basis(wh_basis(q, N)) {
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<Eigen::Index>(k);
  }
  Eigen::Index size() const { return static_cast<Eigen::Index>(basis.size()); }
};

ComplexMatrix shift(const QuasiLatticeOrder& q, const Truncation& T, const QloElement& p) {
  ComplexMatrix m = ComplexMatrix::Zero(T.size(), T.size());
  for (std::size_t k = 0; k < T.basis.size(); ++k) {
    auto it = T.index.find(q.multiply(p, T.basis[k]));
    if (it != T.index.end()) m(it->second, static_cast<Eigen::Index>(k)) = 1.0;
  }
  return m;
}

ComplexMatrix element_matrix(const WHElement& x, const Truncation& T) {
  ComplexMatrix m = ComplexMatrix::Zero(T.size(), T.size());
  for (const auto& [t, c] : x.terms) m += c * shift(*x.qlo, T, t.p) * shift(*x.qlo, T, t.q).adjoint();
  return m;
}

}  // namespace

ComplexMatrix wh_truncate(const QuasiLatticeOrder& qlo, const QloElement& p, int N) {
  if (N < 1) throw PreconditionError("truncation depth must be >= 1");
  if (!in_P(qlo, p)) throw PreconditionError("W_p needs p in the cone");
  return shift(qlo, Truncation(qlo, N), p);
}

ComplexMatrix wh_matrix(const WHElement& x, int N) {
  if (N < 1) throw PreconditionError("truncation depth must be >= 1");
  return element_matrix(x, Truncation(*x.qlo, N));
}

Report wh_crosscheck(const WHElement& x, const WHElement& y, int N, double tol) {
  check_same(x, y);
  if (N < 1) throw PreconditionError("truncation depth must be >= 1");
  Report r("Wiener-Hopf symbolic/matrix cross-check");
  const Truncation T(*x.qlo, N);
  const ComplexMatrix sym = element_matrix(wh::multiply(x, y), T);
  const ComplexMatrix num = element_matrix(x, T) * element_matrix(y, T);
  const std::size_t guard = std::max(wh::max_index_length(x), wh::max_index_length(y));
  double worst = 0.0;
  std::size_t guarded = 0;
  for (std::size_t k = 0; k < T.basis.size(); ++k) {
    if (x.qlo->length(T.basis[k]) + guard > static_cast<std::size_t>(N)) continue;
    ++guarded;
    const auto col = static_cast<Eigen::Index>(k);
    worst = std::max(worst, (sym.col(col) - num.col(col)).cwiseAbs().maxCoeff());
  }
  std::ostringstream w;
  w << "max deviation " << worst;
  r.add("symbolic product = truncated matrix product", "(W_p xi)(q) = xi(p^{-1}q) if p^{-1}q in P, 0 otherwise",
        guarded > 0 && worst <= tol, guarded ? w.str() : "no guarded basis vectors");
  r.note("truncation |q| <= " + std::to_string(N) + ", guarded vectors: " + std::to_string(guarded));
  return r;
}

std::vector<QloElement> wh_cone_box(const QuasiLatticeOrder& qlo, int N) {
  std::vector<QloElement> out;
  for (auto& s : qlo.group_window(N))
    if (qlo.in_cone(s)) out.push_back(std::move(s));
  return out;
}

Report nica_covariance_check(QloPtr qlo, int N) {
  Report r("Nica covariance");
  const auto box = wh_cone_box(*qlo, N);
  Failures f;
  std::size_t pairs = 0, joins = 0;
  for (const auto& p : box)
    for (const auto& q : box) {
      ++pairs;
      const auto prod = wh::multiply(wh::term(qlo, p, p), wh::term(qlo, q, q));
      const auto j = qlo->join(p, q);
      WHElement expected = wh::zero(qlo);
      if (j) {
        ++joins;
        expected = wh::term(qlo, *j, *j);
      }
      if (!wh::equal(prod, expected))
        f.add("p=" + qlo->format(p) + ", q=" + qlo->format(q) + ": " + wh::format(prod));
    }
  r.add("W_p W_p^* W_q W_q^* = W_{p∨q} W_{p∨q}^* or 0",
        "W_p W_p^* W_q W_q^* = W_{p∨q} W_{p∨q}^* if p∨q exists, 0 otherwise", f.ok(), f.text());
  r.note(qlo->name() + ", cone elements in window " + std::to_string(N) + ": " + std::to_string(box.size()) +
         ", pairs: " + std::to_string(pairs) + ", with join: " + std::to_string(joins));
  return r;
}

Report wh_partial_rep_check(QloPtr qlo, int N) {
  Report r("Wiener-Hopf partial representation");
  const auto& Q = *qlo;
  const auto window = Q.group_window(N);
  const std::set<QloElement> in_window(window.begin(), window.end());
  std::vector<QloElement> S;
  for (const auto& s : window)
    if (Q.sigma_tau(s)) S.push_back(s);

  Failures unit, adj, proj, order, algebraic;
  std::size_t pairs = 0, nonzero = 0;
  const auto me = wh_partial_rep(qlo, Q.identity());
  if (!wh::equal(me, wh::term(qlo, Q.identity(), Q.identity()))) unit.add(wh::format(me));
  for (const auto& s : S) {
    const auto ms = wh_partial_rep(qlo, s);
    if (!wh::equal(wh_partial_rep(qlo, Q.inverse(s)), wh::adjoint(ms))) adj.add("s=" + Q.format(s));
    const auto sig = Q.sigma_tau(s)->first;
    if (!wh::equal(wh::multiply(ms, wh::adjoint(ms)), wh::term(qlo, sig, sig))) proj.add("s=" + Q.format(s));
  }
  for (const auto& s : S)
    for (const auto& t : S) {
      const auto st = Q.multiply(s, t);
      if (!in_window.count(st) || !Q.sigma_tau(st)) continue;
      ++pairs;
      const auto u = wh::multiply(wh_partial_rep(qlo, s), wh_partial_rep(qlo, t));
      if (wh::is_zero(u)) continue;
      ++nonzero;
      const auto v = wh_partial_rep(qlo, st);
      const std::string tag = "s=" + Q.format(s) + ", t=" + Q.format(t);
      if (u.terms.size() != 1 || v.terms.size() != 1 ||
          !wh_order_check(Q, u.terms.begin()->first, v.terms.begin()->first))
        order.add(tag + ": " + wh::format(u) + " vs " + wh::format(v));
      if (!wh::equal(wh::multiply(u, wh::adjoint(u)), wh::multiply(u, wh::adjoint(v)))) algebraic.add(tag);
    }
  r.add("m_e = 1", "m_e = W_e W_e^* = 1", unit.ok(), unit.text());
  r.add("m_{s^-1} = m_s^*", "m_{s^{-1}} = m_s^*", adj.ok(), adj.text());
  r.add("m_s m_s^* = W_σ(s) W_σ(s)^*", "m_s m_s^* = W_{σ(s)} W_{σ(s)}^* = p_s", proj.ok(), proj.text());
  r.add("m_s m_t ⪯ m_st (order rule)",
        "W_p W_q^* ⪯ W_u W_v^* whenever pq^{-1} = uv^{-1} and u <= p", order.ok(), order.text());
  r.add("m_s m_t ⪯ m_st (uu^* = uv^*)", "u ⪯ v iff uu^* = uv^*", algebraic.ok(), algebraic.text());
  r.note(Q.name() + ", group window " + std::to_string(N) + ": " + std::to_string(S.size()) +
         " elements in PP^{-1}, pairs with st in window: " + std::to_string(pairs) +
         ", non-zero products: " + std::to_string(nonzero));
  return r;
}

Report join_oracle_check(const QuasiLatticeOrder& qlo, int L) {
  Report r("least upper bounds");
  const bool free = dynamic_cast<const FreeMonoid*>(&qlo) != nullptr;
  const auto cone = qlo.cone_window(L);
  const auto search = qlo.cone_window(free ? L + 1 : 2 * L);
  Failures f, prefix;
  std::size_t pairs = 0, joins = 0;
  for (const auto& p : cone)
    for (const auto& q : cone) {
      ++pairs;
      std::vector<QloElement> ub;
      for (const auto& w : search)
        if (qlo.leq(p, w) && qlo.leq(q, w)) ub.push_back(w);
      std::optional<QloElement> least;
      for (const auto& u : ub)
        if (std::all_of(ub.begin(), ub.end(), [&](const QloElement& w) { return qlo.leq(u, w); })) least = u;
      const auto j = qlo.join(p, q);
      if (j) ++joins;
      if (j != least)
        f.add(qlo.format(p) + " ∨ " + qlo.format(q) + ": join() " + (j ? qlo.format(*j) : "none") + ", oracle " +
              (least ? qlo.format(*least) : "none"));
      if (free) {
        const bool comparable = (p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin())) ||
                                (q.size() <= p.size() && std::equal(q.begin(), q.end(), p.begin()));
        if (comparable != j.has_value()) prefix.add(qlo.format(p) + ", " + qlo.format(q));
      }
    }
  r.add("join = least upper bound (brute force)", "any finite set with a common upper bound has a least one",
        f.ok(), f.text());
  if (free)
    r.add("joins exist iff prefix-comparable", "in the free monoid p∨q exists iff p <= q or q <= p", prefix.ok(),
          prefix.text());
  r.note(qlo.name() + ", cone elements of length <= " + std::to_string(L) + ": " + std::to_string(cone.size()) +
         ", pairs: " + std::to_string(pairs) + ", with join: " + std::to_string(joins));
  return r;
}

Report wh_suite(QloPtr qlo, int window) {
  if (window < 1) throw PreconditionError("window must be >= 1");
  const auto& Q = *qlo;
  Report r("Wiener-Hopf suite");
  r.append(nica_covariance_check(qlo, window));
  r.append(wh_partial_rep_check(qlo, window));
  r.append(join_oracle_check(Q, window));

  // degree is multiplicative on non-zero term products
  Failures deg;
  const auto box = wh_cone_box(Q, std::min(window, 2));
  for (const auto& p : box)
    for (const auto& q : box)
      for (const auto& a : box)
        for (const auto& b : box) {
          const WHTerm x{p, q}, y{a, b};
          const auto prod = wh::multiply_terms(qlo, x, y);
          for (const auto& kv : prod.terms)
            if (wh_degree(Q, kv.first) != Q.multiply(wh_degree(Q, x), wh_degree(Q, y)))
              deg.add(wh::format_term(x) + " " + wh::format_term(y));
          const auto adj = WHTerm{q, p};
          if (wh_degree(Q, adj) != Q.inverse(wh_degree(Q, x))) deg.add("adjoint " + wh::format_term(x));
        }
  r.add("degree multiplicative", "δ(W_p W_q^*) = W_p W_q^* ⊗ pq^{-1}", deg.ok(), deg.text());

  // matrix cross-check on random combinations of short terms
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto short_box = Q.cone_window(2);
  auto random_element = [&] {
    WHElement x = wh::zero(qlo);
    for (const auto& p : short_box)
      for (const auto& q : short_box) x = wh::add(x, wh::term(qlo, p, q, Complex(coeff(rng), coeff(rng))));
    return x;
  };
  const auto x = random_element();
  const auto y = random_element();
  const int N = static_cast<int>(std::max(wh::max_index_length(x), wh::max_index_length(y))) + 3;
  r.append(wh_crosscheck(x, y, N));
  for (const auto& p : short_box)
    for (const auto& q : short_box) {
      const auto pp = wh::term(qlo, p, p), qq = wh::term(qlo, q, q);
      const auto c = wh_crosscheck(pp, qq, N);
      if (!c.passed()) r.append(c, wh::format_term({p, p}) + " " + wh::format_term({q, q}) + ": ");
    }
  r.note("window " + std::to_string(window) + " on " + Q.name());
  return r;
}

}  // namespace crossprod
