#include "crossprod/cuntz.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace crossprod {

std::strong_ordering CuntzTerm::operator<=>(const CuntzTerm& o) const {
  if (auto c = mu.size() <=> o.mu.size(); c != 0) return c;
  if (auto c = mu <=> o.mu; c != 0) return c;
  if (auto c = nu.size() <=> o.nu.size(); c != 0) return c;
  return nu <=> o.nu;
}

CuntzSignature CuntzSignature::toeplitz(int n) {
  if (n < 1) throw PreconditionError("Cuntz alphabet size must be >= 1");
  return CuntzSignature{n, {}};
}

CuntzSignature CuntzSignature::toeplitz_ck(std::vector<std::vector<int>> A) {
  const auto n = A.size();
  if (n == 0) throw PreconditionError("transition matrix must be non-empty");
  for (const auto& row : A) {
    if (row.size() != n) throw DimensionError("transition matrix must be square");
    for (int v : row)
      if (v != 0 && v != 1) throw PreconditionError("transition matrix must have 0/1 entries");
  }
  return CuntzSignature{static_cast<int>(n), std::move(A)};
}

bool ck_admissible(const Multiindex& mu, const std::vector<std::vector<int>>& A) {
  const auto n = static_cast<int>(A.size());
  for (int x : mu)
    if (x < 1 || x > n) return false;
  for (std::size_t j = 0; j + 1 < mu.size(); ++j)
    if (A[static_cast<std::size_t>(mu[j] - 1)][static_cast<std::size_t>(mu[j + 1] - 1)] != 1) return false;
  return true;
}

bool ck_admissible(int i, const Multiindex& mu, const std::vector<std::vector<int>>& A) {
  Multiindex w{i};
  w.insert(w.end(), mu.begin(), mu.end());
  return ck_admissible(w, A);
}

namespace {

bool admissible(const CuntzSignature& sig, const Multiindex& mu) {
  for (int x : mu)
    if (x < 1 || x > sig.n) return false;
  return !sig.is_ck() || ck_admissible(mu, sig.ck);
}

Multiindex concat(const Multiindex& a, const Multiindex& b) {
  Multiindex r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool is_prefix(const Multiindex& p, const Multiindex& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

void accumulate(std::map<CuntzTerm, Complex>& terms, const CuntzTerm& t, Complex c) {
  auto [it, inserted] = terms.emplace(t, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0, 0.0)) terms.erase(it);
}

void check_same(const CuntzElement& x, const CuntzElement& y) {
  if (!(x.sig == y.sig)) throw PreconditionError("Cuntz elements over different signatures");
}

std::vector<Multiindex> words_up_to(int n, int N) {
  std::vector<Multiindex> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= N; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 1; i <= n; ++i) {
        Multiindex w = out[k];
        w.push_back(i);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::set<CuntzTerm> term_set(const std::vector<CuntzTerm>& ts) { return {ts.begin(), ts.end()}; }

}  // namespace

namespace cuntz {

CuntzElement zero(const CuntzSignature& sig) { return CuntzElement{sig, {}}; }

CuntzElement unit(const CuntzSignature& sig) { return term(sig, {}, {}); }

CuntzElement term(const CuntzSignature& sig, Multiindex mu, Multiindex nu, Complex c) {
  if (!admissible(sig, mu) || !admissible(sig, nu))
    throw PreconditionError("index word out of range or not admissible: s[" + join_ints(mu) + "]*s[" +
                            join_ints(nu) + "]^");
  CuntzElement x = zero(sig);
  if (c != Complex(0.0, 0.0)) x.terms.emplace(CuntzTerm{std::move(mu), std::move(nu)}, c);
  return x;
}

CuntzElement generator(const CuntzSignature& sig, int i) { return term(sig, {i}, {}); }

CuntzElement add(const CuntzElement& x, const CuntzElement& y) {
  check_same(x, y);
  CuntzElement r = x;
  for (const auto& [t, c] : y.terms) accumulate(r.terms, t, c);
  return r;
}

CuntzElement scale(const CuntzElement& x, Complex c) {
  CuntzElement r = zero(x.sig);
  if (c == Complex(0.0, 0.0)) return r;
  for (const auto& [t, a] : x.terms) r.terms.emplace(t, a * c);
  return r;
}

CuntzElement multiply_terms(const CuntzSignature& sig, const CuntzTerm& a, const CuntzTerm& b) {
  // (s_mu s_nu^*)(s_alpha s_beta^*)
  const auto& mu = a.mu;
  const auto& nu = a.nu;
  const auto& alpha = b.mu;
  const auto& beta = b.nu;
  CuntzElement r = zero(sig);
  if (alpha == nu) {
    accumulate(r.terms, CuntzTerm{mu, beta}, 1.0);
    if (sig.is_ck() && !nu.empty()) {
      // s_nu^* s_nu is the projection onto paths that may follow nu_last
      const auto& row = sig.ck[static_cast<std::size_t>(nu.back() - 1)];
      for (int j = 1; j <= sig.n; ++j) {
        if (row[static_cast<std::size_t>(j - 1)] == 1) continue;
        Multiindex mj = concat(mu, {j}), bj = concat(beta, {j});
        if (admissible(sig, mj) && admissible(sig, bj)) accumulate(r.terms, CuntzTerm{mj, bj}, -1.0);
      }
    }
  } else if (is_prefix(nu, alpha)) {
    Multiindex tail(alpha.begin() + static_cast<std::ptrdiff_t>(nu.size()), alpha.end());
    Multiindex m = concat(mu, tail);
    if (admissible(sig, m)) accumulate(r.terms, CuntzTerm{m, beta}, 1.0);
  } else if (is_prefix(alpha, nu)) {
    Multiindex tail(nu.begin() + static_cast<std::ptrdiff_t>(alpha.size()), nu.end());
    Multiindex m = concat(beta, tail);
    if (admissible(sig, m)) accumulate(r.terms, CuntzTerm{mu, m}, 1.0);
  }
  return r;
}

CuntzElement multiply(const CuntzElement& x, const CuntzElement& y) {
  check_same(x, y);
  CuntzElement r = zero(x.sig);
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms)
      for (const auto& [t, c] : multiply_terms(x.sig, a, b).terms) accumulate(r.terms, t, ca * cb * c);
  return r;
}

CuntzElement adjoint(const CuntzElement& x) {
  CuntzElement r = zero(x.sig);
  for (const auto& [t, c] : x.terms) r.terms.emplace(CuntzTerm{t.nu, t.mu}, std::conj(c));
  return r;
}

bool is_zero(const CuntzElement& x, double eps) {
  for (const auto& kv : x.terms)
    if (std::abs(kv.second) > eps) return false;
  return true;
}

bool equal(const CuntzElement& x, const CuntzElement& y, double eps) {
  return x.sig == y.sig && is_zero(add(x, scale(y, -1.0)), eps);
}

std::string format_term(const CuntzTerm& t) {
  if (t.nu.empty()) return "s[" + join_ints(t.mu) + "]";
  if (t.mu.empty()) return "s[" + join_ints(t.nu) + "]^";
  return "s[" + join_ints(t.mu) + "]*s[" + join_ints(t.nu) + "]^";
}

std::string format(const CuntzElement& x) {
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

CuntzElement parse(const std::string& text, const CuntzSignature& sig) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i);
    ++i;
  };
  CuntzElement acc = unit(sig);
  bool any = false;
  while (true) {
    skip();
    expect('s');
    expect('[');
    Multiindex mu;
    skip();
    if (i < text.size() && text[i] != ']') {
      while (true) {
        skip();
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw ParseError("expected a letter index", start);
        const int v = std::stoi(text.substr(start, i - start));
        if (v < 1 || v > sig.n) throw ParseError("letter " + std::to_string(v) + " out of range", start);
        mu.push_back(v);
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
    }
    expect(']');
    skip();
    bool star = false;
    if (i < text.size() && text[i] == '^') {
      star = true;
      ++i;
    }
    if (!admissible(sig, mu)) throw ParseError("index word not admissible", i);
    acc = multiply(acc, star ? term(sig, {}, mu) : term(sig, mu, {}));
    any = true;
    skip();
    if (i >= text.size()) break;
    expect('*');
  }
  if (!any) throw ParseError("empty term", 0);
  return acc;
}

std::vector<Multiindex> fock_basis(const CuntzSignature& sig, int depth) {
  std::vector<Multiindex> out;
  for (auto& w : words_up_to(sig.n, depth))
    if (admissible(sig, w)) out.push_back(std::move(w));
  return out;
}

ComplexMatrix fock_matrix(const CuntzElement& x, int depth) {
  const auto basis = fock_basis(x.sig, depth);
  std::map<Multiindex, Eigen::Index> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<Eigen::Index>(k);
  const auto d = static_cast<Eigen::Index>(basis.size());
  std::vector<ComplexMatrix> S(static_cast<std::size_t>(x.sig.n) + 1);
  for (int i = 1; i <= x.sig.n; ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (const auto& w : basis) {
      Multiindex iw = concat({i}, w);
      auto it = index.find(iw);
      if (it != index.end() && admissible(x.sig, iw)) m(it->second, index.at(w)) = 1.0;
    }
    S[static_cast<std::size_t>(i)] = std::move(m);
  }
  auto word_op = [&](const Multiindex& mu) {
    ComplexMatrix m = ComplexMatrix::Identity(d, d);
    for (int l : mu) m = m * S[static_cast<std::size_t>(l)];
    return m;
  };
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& [t, c] : x.terms) out += c * word_op(t.mu) * word_op(t.nu).adjoint();
  return out;
}

}  // namespace cuntz

ReducedWord cuntz_degree(const CuntzTerm& t, int n) {
  std::vector<int> letters = t.mu;
  for (auto it = t.nu.rbegin(); it != t.nu.rend(); ++it) letters.push_back(-*it);
  return make_word(std::move(letters), n);
}

std::vector<CuntzTerm> cuntz_spectral_basis(int n, const ReducedWord& s, int N) {
  if (n < 1) throw PreconditionError("Cuntz alphabet size must be >= 1");
  std::vector<CuntzTerm> out;
  const auto words = words_up_to(n, N);
  for (const auto& mu : words)
    for (const auto& nu : words) {
      CuntzTerm t{mu, nu};
      if (cuntz_degree(t, n) == s) out.push_back(std::move(t));
    }
  std::sort(out.begin(), out.end());
  for (const auto& t : out)
    if (s.letters.size() == 1 && s.letters[0] > 0) {
      // degree g_i: every term is s_i s_kappa s_kappa^*
      const int i = s.letters[0];
      if (t.mu.empty() || t.mu[0] != i || !std::equal(t.mu.begin() + 1, t.mu.end(), t.nu.begin(), t.nu.end()))
        throw DomainError("degree g_i term not of the form s_i s_k s_k^*: " + cuntz::format_term(t));
    }
  return out;
}

Report projection_product_check(int n, int N) {
  Report r("diagonal projection products");
  const auto sig = CuntzSignature::toeplitz(n);
  const auto words = words_up_to(n, N);
  Failures f;
  std::size_t checked = 0;
  for (const auto& mu : words)
    for (const auto& nu : words) {
      const auto prod = cuntz::multiply(cuntz::term(sig, mu, mu), cuntz::term(sig, nu, nu));
      CuntzElement expected = cuntz::zero(sig);
      if (is_prefix(mu, nu))
        expected = cuntz::term(sig, nu, nu);
      else if (is_prefix(nu, mu))
        expected = cuntz::term(sig, mu, mu);
      ++checked;
      if (!cuntz::equal(prod, expected))
        f.add("(" + cuntz::format_term({mu, mu}) + ")(" + cuntz::format_term({nu, nu}) + ") = " + cuntz::format(prod));
    }
  r.add("three-case projection product", "(s_mu s_mu^*)(s_nu s_nu^*) = s_nu s_nu^*, 0, or s_mu s_mu^*", f.ok(),
        f.text());
  r.note("pairs checked: " + std::to_string(checked) + " (|mu|,|nu| <= " + std::to_string(N) + ")");
  return r;
}

Report cuntz_characterization_check(int n, int N) {
  if (n < 1) throw PreconditionError("Cuntz alphabet size must be >= 1");
  if (N < 2) throw PreconditionError("characterization check needs depth >= 2");
  Report r("Toeplitz-Cuntz characterization");
  r.note("depth: |mu|,|nu| <= " + std::to_string(N) + ", n = " + std::to_string(n));
  const auto sig = CuntzSignature::toeplitz(n);
  const auto as_elem = [&](const CuntzTerm& t) { return cuntz::term(sig, t.mu, t.nu); };
  const ReducedWord e = make_word({}, n);
  const auto diag_lower = cuntz_spectral_basis(n, e, N - 1);

  // (i) B_{g_i} = s_i B^delta, isometrically
  Failures f1;
  for (int i = 1; i <= n; ++i) {
    const auto Bi = cuntz_spectral_basis(n, make_word({i}, n), N);
    std::set<CuntzTerm> images;
    for (const auto& d : diag_lower) {
      const auto img = cuntz::multiply(cuntz::generator(sig, i), as_elem(d));
      if (img.terms.size() != 1) {
        f1.add("s_" + std::to_string(i) + " " + cuntz::format_term(d) + " is not a single term");
        continue;
      }
      images.insert(img.terms.begin()->first);
    }
    if (images != term_set(Bi)) f1.add("s_" + std::to_string(i) + " B^delta != B_{g_" + std::to_string(i) + "}");
    for (const auto& a : diag_lower)
      for (const auto& b : diag_lower) {
        const auto si = cuntz::generator(sig, i);
        const auto lhs =
            cuntz::multiply(cuntz::adjoint(cuntz::multiply(si, as_elem(a))), cuntz::multiply(si, as_elem(b)));
        const auto rhs = cuntz::multiply(cuntz::adjoint(as_elem(a)), as_elem(b));
        if (!cuntz::equal(lhs, rhs)) f1.add("<s_i a, s_i b> != <a, b> at i=" + std::to_string(i));
      }
  }
  r.add("(i) B_{g_i} ≅ B^delta", "b -> s_i b is a Hilbert B^delta-module isomorphism onto B_{g_i}", f1.ok(), f1.text());

  // (ii) orthogonality
  Failures f2, f2s;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const auto Bi = cuntz_spectral_basis(n, make_word({i}, n), N);
      const auto Bj = cuntz_spectral_basis(n, make_word({j}, n), N);
      bool all_zero = true, in_e = true;
      for (const auto& a : Bi)
        for (const auto& b : Bj) {
          const auto p = cuntz::multiply(cuntz::adjoint(as_elem(a)), as_elem(b));
          if (!cuntz::is_zero(p)) all_zero = false;
          for (const auto& kv : p.terms)
            if (!(cuntz_degree(kv.first, n) == e)) in_e = false;
        }
      if (i != j && !all_zero) f2.add("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i == j && (all_zero || !in_e)) f2s.add("i=" + std::to_string(i));
    }
  r.add("(ii) B_{g_i}^* B_{g_j} = 0 for i != j", "B_{g_i}^* B_{g_j} = 0 for i != j", f2.ok(), f2.text());
  r.add("(ii) sanity: B_{g_i}^* B_{g_i} is a non-zero part of B^delta", "B_{g_i}^* B_{g_i} ⊂ B^delta, non-zero",
        f2s.ok(), f2s.text());

  // (iii) generation
  Failures f3;
  const auto words = words_up_to(n, N);
  for (const auto& mu : words)
    for (const auto& nu : words) {
      CuntzElement p = cuntz::unit(sig);
      for (int l : mu) p = cuntz::multiply(p, cuntz::generator(sig, l));
      for (auto it = nu.rbegin(); it != nu.rend(); ++it)
        p = cuntz::multiply(p, cuntz::adjoint(cuntz::generator(sig, *it)));
      if (!cuntz::equal(p, cuntz::term(sig, mu, nu))) f3.add(cuntz::format_term({mu, nu}));
    }
  r.add("(iii) the B_{g_i} generate", "every s_mu s_nu^* is a product of elements of the B_{g_i} and their adjoints",
        f3.ok(), f3.text());

  // corner ideals and B_mu = s_mu B^delta
  Failures f4, f5;
  for (const auto& mu : words) {
    const auto Bmu = cuntz_spectral_basis(n, make_word(mu, n), N);
    const auto pmu = cuntz::term(sig, mu, mu);
    if (!cuntz::equal(cuntz::multiply(pmu, pmu), pmu) || !cuntz::equal(cuntz::adjoint(pmu), pmu))
      f4.add("p_" + cuntz::format_term({mu, {}}) + " not a projection");
    bool has_unit_generator = false;
    for (const auto& a : Bmu)
      for (const auto& b : Bmu) {
        const auto x = cuntz::multiply(as_elem(a), cuntz::adjoint(as_elem(b)));
        if (cuntz::equal(x, pmu)) has_unit_generator = true;
        if (!cuntz::equal(cuntz::multiply(pmu, x), x) || !cuntz::equal(cuntz::multiply(x, pmu), x))
          f4.add("p_mu is not a unit for " + cuntz::format(x));
        for (const auto& kv : x.terms)
          if (!(cuntz_degree(kv.first, n) == e) || !is_prefix(mu, kv.first.mu) || !is_prefix(mu, kv.first.nu))
            f4.add("B_mu B_mu^* leaves s_mu B^delta s_mu^* at " + cuntz::format_term(kv.first));
        for (const auto& d : diag_lower) {
          const auto dx = cuntz::multiply(as_elem(d), x);
          for (const auto& kv : dx.terms)
            if (!is_prefix(mu, kv.first.mu) || !is_prefix(mu, kv.first.nu))
              f4.add("B^delta B_mu B_mu^* not inside the corner at " + cuntz::format_term(kv.first));
        }
      }
    if (!has_unit_generator) f4.add("p_mu not in B_mu B_mu^* for mu=" + cuntz::format_term({mu, {}}));

    std::set<CuntzTerm> expected;
    for (const auto& d : cuntz_spectral_basis(n, e, N - static_cast<int>(mu.size()))) {
      const auto img = cuntz::multiply(cuntz::term(sig, mu, {}), as_elem(d));
      for (const auto& kv : img.terms) expected.insert(kv.first);
    }
    if (expected != term_set(Bmu)) f5.add("mu=" + cuntz::format_term({mu, {}}));
  }
  r.add("B_mu B_mu^* is an ideal of B^delta with unit p_mu", "B_mu B_mu^* has identity p_mu = s_mu s_mu^*", f4.ok(),
        f4.text());
  r.add("B_mu = s_mu B^delta", "B_mu = B_{mu_1}...B_{mu_k} = s_mu B^delta", f5.ok(), f5.text());

  // (iv) B^delta = sp{p_mu}
  std::set<CuntzTerm> diag;
  for (const auto& mu : words) diag.insert(CuntzTerm{mu, mu});
  const bool iv = term_set(cuntz_spectral_basis(n, e, N)) == diag;
  r.add("(iv) B^delta = sp{p_mu}", "B^delta = closed span of the p_mu", iv, "degree-e terms differ from {p_mu}");

  // Toeplitz rather than Cuntz: 1 - sum s_i s_i^* survives
  CuntzElement defect = cuntz::unit(sig);
  for (int i = 1; i <= n; ++i) defect = cuntz::add(defect, cuntz::scale(cuntz::term(sig, {i}, {i}), -1.0));
  r.note(cuntz::is_zero(defect) ? "sum s_i s_i^* = 1" : "sum s_i s_i^* < 1: the Toeplitz-Cuntz algebra");
  return r;
}

GaugeResult gauge_nonexample_check(int n, int N) {
  if (n < 1) throw PreconditionError("Cuntz alphabet size must be >= 1");
  if (N < 1) throw PreconditionError("gauge check needs depth >= 1");
  GaugeResult g;
  g.report = Report("gauge spectral subspace");
  const auto sig = CuntzSignature::toeplitz(n);
  const auto words = words_up_to(n, N);
  std::vector<CuntzTerm> B1, core;
  for (const auto& mu : words)
    for (const auto& nu : words) {
      const auto lm = static_cast<int>(mu.size()), ln = static_cast<int>(nu.size());
      if (lm - ln == 1) B1.push_back({mu, nu});
      if (lm == ln && lm <= N - 1) core.push_back({mu, nu});
    }
  g.degreeOneDim = B1.size();
  g.coreDim = core.size();

  // (t_1..t_n) -> sum s_i t_i hits every basis term of B_1 exactly once
  std::set<CuntzTerm> hits;
  bool single = true;
  for (int i = 1; i <= n; ++i)
    for (const auto& t : core) {
      const auto img = cuntz::multiply(cuntz::generator(sig, i), cuntz::term(sig, t.mu, t.nu));
      if (img.terms.size() != 1) single = false;
      for (const auto& kv : img.terms) hits.insert(kv.first);
    }
  const bool decomposes = single && hits == term_set(B1) && B1.size() == static_cast<std::size_t>(n) * core.size();
  g.report.add("B_1 = s_1 core ⊕ ... ⊕ s_n core", "B_1 = sp{s_i t: t in B^alpha}, dim B_1 = n dim B^alpha",
               decomposes,
               "dim B_1 = " + std::to_string(B1.size()) + ", n * dim core = " + std::to_string(n * core.size()));

  // r -> (s_1^* r, ..., s_n^* r) is injective with inverse (t_i) -> sum s_i t_i
  bool inverse_ok = true;
  std::vector<std::vector<CuntzTerm>> tuples;
  for (const auto& t : B1) {
    const auto r = cuntz::term(sig, t.mu, t.nu);
    CuntzElement back = cuntz::zero(sig);
    for (int i = 1; i <= n; ++i) {
      const auto si = cuntz::generator(sig, i);
      back = cuntz::add(back, cuntz::multiply(si, cuntz::multiply(cuntz::adjoint(si), r)));
    }
    if (!cuntz::equal(back, r)) inverse_ok = false;
  }
  g.injective = inverse_ok;
  g.report.add("r -> (s_i^* r) injective", "r -> (s_1^* r, ..., s_n^* r) has inverse (t_i) -> sum s_i t_i",
               inverse_ok, "sum s_i s_i^* r != r for some r in B_1");
  {
    const auto s1 = cuntz::generator(sig, 1);
    std::string tuple;
    for (int i = 1; i <= n; ++i)
      tuple += (i > 1 ? ", " : "") + cuntz::format(cuntz::multiply(cuntz::adjoint(cuntz::generator(sig, i)), s1));
    g.report.note("witness r = s_1 -> (" + tuple + ")");
  }
  g.report.note("depth " + std::to_string(N) + ": dim B_1 = " + std::to_string(B1.size()) +
                ", dim core = " + std::to_string(core.size()) + ", module rank " + std::to_string(n));
  return g;
}

// ---------------------------------------------------------------- graded model

CuntzGradedModel::CuntzGradedModel(int n, int window, int depth)
    : sig_(CuntzSignature::toeplitz(n)), group_(GroupWindow::free(n, window)), depth_(depth) {}

std::vector<CuntzElement> CuntzGradedModel::basis(std::size_t s) const {
  std::vector<CuntzElement> out;
  if (std::find(dropped_.begin(), dropped_.end(), s) != dropped_.end()) return out;
  for (const auto& t : cuntz_spectral_basis(sig_.n, group_.word(s), depth_)) out.push_back(cuntz::term(sig_, t.mu, t.nu));
  return out;
}

bool CuntzGradedModel::in_degree(const CuntzElement& x, std::size_t s) const {
  for (const auto& kv : x.terms)
    if (!(cuntz_degree(kv.first, sig_.n) == group_.word(s))) return false;
  return true;
}

Coordinates CuntzGradedModel::coordinates(const CuntzElement& x) const {
  Coordinates c;
  for (const auto& [t, z] : x.terms) {
    std::vector<int> key{static_cast<int>(t.mu.size())};
    key.insert(key.end(), t.mu.begin(), t.mu.end());
    key.push_back(static_cast<int>(t.nu.size()));
    key.insert(key.end(), t.nu.begin(), t.nu.end());
    c.push_back({std::move(key), z});
  }
  return c;
}

CuntzElement CuntzGradedModel::projection(std::size_t s) const {
  FreeMonoid P(sig_.n);
  const auto st = P.sigma_tau(group_.word(s).letters);
  if (!st) return cuntz::zero(sig_);
  return cuntz::term(sig_, st->first, st->first);
}

std::vector<CuntzElement> CuntzGradedModel::generator_certificates() const {
  std::vector<CuntzElement> out;
  for (int i = 1; i <= sig_.n; ++i) out.push_back(cuntz::generator(sig_, i));
  return out;
}

static_assert(GradedModel<CuntzGradedModel>);

}  // namespace crossprod
