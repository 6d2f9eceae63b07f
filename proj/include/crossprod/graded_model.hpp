#pragma once

// Checks shared by every graded model (matrix gradings, L_c over a window,
// symbolic Toeplitz-Cuntz terms). A model exposes degree bases, the algebra
// operations, exact degree membership and sparse coordinates.

#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/groups.hpp"
#include "crossprod/linalg.hpp"
#include "crossprod/report.hpp"

namespace crossprod {

using Coordinates = std::vector<std::pair<std::vector<int>, Complex>>;

template <class M>
concept GradedModel = requires(const M& m, const typename M::Element& x, std::size_t s) {
  { m.group() } -> std::convertible_to<const GroupWindow&>;
  { m.basis(s) } -> std::convertible_to<std::vector<typename M::Element>>;
  { m.multiply(x, x) } -> std::convertible_to<typename M::Element>;
  { m.adjoint(x) } -> std::convertible_to<typename M::Element>;
  { m.in_degree(x, s) } -> std::convertible_to<bool>;
  { m.same(x, x) } -> std::convertible_to<bool>;
  { m.is_zero(x) } -> std::convertible_to<bool>;
  { m.coordinates(x) } -> std::convertible_to<Coordinates>;
  { m.projection(s) } -> std::convertible_to<typename M::Element>;
  { m.unit() } -> std::convertible_to<typename M::Element>;
};

namespace graded {

/// Dimension of the span of a family, through a shared sparse coordinate system.
template <GradedModel M>
std::size_t rank(const M& model, const std::vector<typename M::Element>& xs, Tolerance tol = {}) {
  std::map<std::vector<int>, Eigen::Index> keys;
  std::vector<Coordinates> coords;
  coords.reserve(xs.size());
  for (const auto& x : xs) {
    coords.push_back(model.coordinates(x));
    for (const auto& kv : coords.back()) keys.emplace(kv.first, 0);
  }
  Eigen::Index row = 0;
  for (auto& kv : keys) kv.second = row++;
  std::vector<ComplexMatrix> cols;
  for (const auto& c : coords) {
    ComplexMatrix v = ComplexMatrix::Zero(std::max<Eigen::Index>(row, 1), 1);
    for (const auto& [k, z] : c) v(keys.at(k), 0) += z;
    cols.push_back(std::move(v));
  }
  return linalg::span_dimension(cols, tol);
}

/// Products b_1 ... b_k with b_i running over the degree bases of the letters of w.
template <GradedModel M>
std::vector<typename M::Element> word_products(const M& model, const std::vector<std::size_t>& letters) {
  using E = typename M::Element;
  std::vector<E> acc;
  if (letters.empty()) return model.basis(model.group().identity());
  acc = model.basis(letters[0]);
  for (std::size_t i = 1; i < letters.size(); ++i) {
    const auto next = model.basis(letters[i]);
    std::vector<E> out;
    for (const auto& p : acc)
      for (const auto& b : next) {
        E q = model.multiply(p, b);
        if (model.is_zero(q)) continue;
        bool dup = false;
        for (const auto& o : out)
          if (model.same(o, q)) {
            dup = true;
            break;
          }
        if (!dup) out.push_back(std::move(q));
      }
    acc = std::move(out);
  }
  return acc;
}

/// Products b b'^* spanning D_s.
template <GradedModel M>
std::vector<typename M::Element> ideal_spanning_set(const M& model, std::size_t s) {
  std::vector<typename M::Element> out;
  const auto B = model.basis(s);
  for (const auto& b : B)
    for (const auto& c : B) {
      auto d = model.multiply(b, model.adjoint(c));
      if (!model.is_zero(d)) out.push_back(std::move(d));
    }
  return out;
}

/// Empty string when m is a multiplier certificate for degree s:
/// m m^* = p_s, m^* m = p_{s^-1}, D_s m ⊂ B_s, m D_{s^-1} ⊂ B_s.
template <GradedModel M>
std::string certificate_defect(const M& model, std::size_t s, const typename M::Element& m) {
  const auto& G = model.group();
  const auto si = G.inverse(s);
  if (!model.same(model.multiply(m, model.adjoint(m)), model.projection(s))) return "m m^* != p_s";
  if (!model.same(model.multiply(model.adjoint(m), m), model.projection(si))) return "m^* m != p_{s^-1}";
  for (const auto& d : ideal_spanning_set(model, s))
    if (!model.in_degree(model.multiply(d, m), s)) return "D_s m ⊄ B_s";
  for (const auto& d : ideal_spanning_set(model, si))
    if (!model.in_degree(model.multiply(m, d), s)) return "m D_{s^-1} ⊄ B_s";
  return {};
}

/// Generators g_1..g_n of a free window and their certificates m_{g_i}.
template <GradedModel M>
Report elementary_duality_check(const M& model, const std::vector<typename M::Element>& gen_certs,
                                Tolerance tol = {}) {
  using E = typename M::Element;
  Report r("elementary duality");
  const auto& G = model.group();
  if (G.kind() != GroupWindow::Kind::Free && G.kind() != GroupWindow::Kind::Integers)
    throw PreconditionError("elementary_duality_check needs a free-group window");
  const int n = G.rank();
  if (static_cast<int>(gen_certs.size()) != n)
    throw PreconditionError("elementary_duality_check: need one certificate per generator");
  r.note("window: reduced words of length <= " + std::to_string(G.window()));

  auto letter_index = [&](int x) { return *G.find(ReducedWord{{x}, n}); };

  // (ii) generator certificates
  std::string gen_fail;
  for (int i = 1; i <= n; ++i) {
    const auto d = certificate_defect(model, letter_index(i), gen_certs[static_cast<std::size_t>(i - 1)]);
    if (!d.empty() && gen_fail.empty()) gen_fail = "g" + std::to_string(i) + ": " + d;
  }
  r.add("(ii) generator certificates", "m_{g_i} in M(B_{g_i}), m m^* = p_{g_i}, m^* m = p_{g_i^{-1}}",
        gen_fail.empty(), gen_fail);

  // word certificates m_w = m_{s_1} ... m_{s_k}
  std::vector<E> word_cert(G.size(), model.unit());
  std::string word_fail;
  std::size_t words_checked = 0;
  for (std::size_t w = 0; w < G.size(); ++w) {
    const auto& letters = G.word(w).letters;
    E m = model.unit();
    for (int x : letters) {
      const auto& g = gen_certs[static_cast<std::size_t>(std::abs(x) - 1)];
      m = model.multiply(m, x > 0 ? g : model.adjoint(g));
    }
    word_cert[w] = m;
    ++words_checked;
    const auto d = certificate_defect(model, w, m);
    if (!d.empty() && word_fail.empty()) word_fail = "w=" + G.label(w) + ": " + d;
  }
  r.add("word certificates", "m_{s_1...s_k} = m_{s_1}...m_{s_k} satisfies the certificate invariants",
        word_fail.empty(), word_fail);
  r.note("word certificates checked: " + std::to_string(words_checked));

  // m_s m_t ⪯ m_st
  std::string order_fail;
  for (std::size_t s = 0; s < G.size() && order_fail.empty(); ++s)
    for (std::size_t t = 0; t < G.size(); ++t) {
      auto st = G.multiply(s, t);
      if (!st) continue;
      const E u = model.multiply(word_cert[s], word_cert[t]);
      if (!model.same(model.multiply(u, model.adjoint(u)), model.multiply(u, model.adjoint(word_cert[*st])))) {
        order_fail = "(" + G.label(s) + "," + G.label(t) + ")";
        break;
      }
    }
  r.add("m_s m_t ⪯ m_st", "m_s m_t ⪯ m_{st}", order_fail.empty(), order_fail);

  // (reducedword) and (i) generation
  std::string sub_fail, sup_fail;
  for (std::size_t w = 0; w < G.size(); ++w) {
    const auto& letters = G.word(w).letters;
    const auto Bw = model.basis(w);
    if (letters.size() == 1 && letters[0] < 0) {
      // B_{g^-1} must be reached through adjoints of B_g
      std::vector<E> P;
      for (const auto& b : model.basis(letter_index(-letters[0]))) P.push_back(model.adjoint(b));
      std::vector<E> joint = P;
      joint.insert(joint.end(), Bw.begin(), Bw.end());
      if (rank(model, joint, tol) != rank(model, P, tol) && sup_fail.empty()) sup_fail = "w=" + G.label(w);
      continue;
    }
    if (letters.size() < 2) continue;
    std::vector<std::size_t> idx;
    for (int x : letters) idx.push_back(letter_index(x));
    const auto P = word_products(model, idx);
    for (const auto& p : P)
      if (!model.in_degree(p, w)) {
        if (sub_fail.empty()) sub_fail = "w=" + G.label(w);
        break;
      }
    std::vector<E> joint = P;
    joint.insert(joint.end(), Bw.begin(), Bw.end());
    if (rank(model, joint, tol) != rank(model, P, tol) && sup_fail.empty()) sup_fail = "w=" + G.label(w);
  }
  r.add("(i) generation by B_e and the B_{g_i}", "B is generated by B_e ∪ B_{g_1} ∪ ... ∪ B_{g_n}", sup_fail.empty(),
        sup_fail.empty() ? "" : "basis of B_" + sup_fail.substr(2) + " not reached by generator products");
  r.add("(reducedword) B_{s_1...s_k} = B_{s_1}...B_{s_k}", "B_{s_1...s_k} = B_{s_1}...B_{s_k} for reduced words",
        sub_fail.empty() && sup_fail.empty(),
        !sub_fail.empty() ? "product leaves degree at " + sub_fail : "span too small at " + sup_fail);
  return r;
}

}  // namespace graded
}  // namespace crossprod
