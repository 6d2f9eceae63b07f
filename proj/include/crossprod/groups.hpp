#pragma once

// Discrete groups: Cayley-table groups, reduced words in the free group,
// finite windows of infinite groups, and quasi-lattice orders.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossprod/errors.hpp"

namespace crossprod {

class FiniteGroup {
 public:
  /// Validates the Cayley table (Latin square, identity, associativity).
  FiniteGroup(std::vector<std::vector<int>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int inverse(int g) const { return inverse_.at(static_cast<std::size_t>(g)); }
  int multiply(int a, int b) const { return table_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)); }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

/// Reduced word in F_n: +i is g_i, -i is g_i^{-1}.
struct ReducedWord {
  std::vector<int> letters;
  int rank = 1;

  bool operator==(const ReducedWord&) const = default;
  auto operator<=>(const ReducedWord&) const = default;
  std::size_t length() const { return letters.size(); }
  bool is_identity() const { return letters.empty(); }
};

/// Cancels adjacent inverse pairs until none remain.
std::vector<int> reduce_letters(std::vector<int> letters);
ReducedWord make_word(std::vector<int> letters, int rank);
ReducedWord parse_word(const std::string& text, int n);
std::string format_word(const ReducedWord& w);

struct WordProduct {
  ReducedWord word;
  std::size_t depth = 0;  // letters cancelled from the tail of the left factor
};

WordProduct word_multiply(const ReducedWord& a, const ReducedWord& b);
ReducedWord word_inverse(const ReducedWord& w);

/// All reduced words of length <= L over n generators, ordered by (length, letters).
std::vector<ReducedWord> enumerate_words(int n, int L);

/// A finite group, or a length-bounded window of Z or F_n. Elements are indices.
class GroupWindow {
 public:
  enum class Kind { Finite, Free, Integers };

  static GroupWindow finite(FiniteGroup g);
  static GroupWindow free(int rank, int window);
  static GroupWindow integers(int window);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  std::size_t size() const;
  std::size_t identity() const { return identity_; }
  std::size_t inverse(std::size_t i) const { return inverse_.at(i); }
  /// Product if it lies in the window.
  std::optional<std::size_t> multiply(std::size_t a, std::size_t b) const;
  std::string label(std::size_t i) const;
  /// Accepts element labels; free/integer windows also accept the word grammar, "e" denotes the identity.
  std::size_t parse(const std::string& text) const;
  std::optional<std::size_t> find(const ReducedWord& w) const;

  int rank() const { return rank_; }
  int window() const { return window_; }
  const ReducedWord& word(std::size_t i) const { return words_.at(i); }
  std::size_t length(std::size_t i) const;
  const FiniteGroup& finite_group() const;
  /// Integer value of an element of a Z window.
  int integer(std::size_t i) const;

 private:
  GroupWindow() = default;
  void index_words();

  Kind kind_ = Kind::Finite;
  std::optional<FiniteGroup> finite_;
  int rank_ = 0;
  int window_ = 0;
  std::vector<ReducedWord> words_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// Quasi-lattice ordered group (G, P). Elements are integer vectors:
/// coordinates for Z^k, signed letters of a reduced word for F_n.
class QuasiLatticeOrder {
 public:
  using Element = std::vector<int>;
  virtual ~QuasiLatticeOrder() = default;

  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual bool in_cone(const Element& p) const = 0;
  virtual bool is_element(const Element& s) const = 0;
  /// Least upper bound of two cone elements, if any common upper bound exists.
  virtual std::optional<Element> join(const Element& p, const Element& r) const = 0;
  /// (sigma(s), tau(s)) when s lies in P P^{-1}.
  virtual std::optional<std::pair<Element, Element>> sigma_tau(const Element& s) const = 0;
  virtual std::size_t length(const Element& p) const = 0;
  /// Cone elements of length <= N.
  virtual std::vector<Element> cone_window(int N) const = 0;
  /// Group elements in a box of radius N (Z^k) or of word length <= N (F_n).
  virtual std::vector<Element> group_window(int N) const = 0;
  virtual std::string format(const Element& s) const = 0;

  /// s <= t iff s^{-1} t in P.
  bool leq(const Element& s, const Element& t) const { return in_cone(multiply(inverse(s), t)); }
};

class ZkNk final : public QuasiLatticeOrder {
 public:
  explicit ZkNk(int k);
  int k() const { return k_; }

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  bool in_cone(const Element& p) const override;
  bool is_element(const Element& s) const override;
  std::optional<Element> join(const Element& p, const Element& r) const override;
  std::optional<std::pair<Element, Element>> sigma_tau(const Element& s) const override;
  std::size_t length(const Element& p) const override;
  std::vector<Element> cone_window(int N) const override;
  std::vector<Element> group_window(int N) const override;
  std::string format(const Element& s) const override;

 private:
  int k_;
};

class FreeMonoid final : public QuasiLatticeOrder {
 public:
  explicit FreeMonoid(int n);
  int n() const { return n_; }

  std::string name() const override;
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  bool in_cone(const Element& p) const override;
  bool is_element(const Element& s) const override;
  std::optional<Element> join(const Element& p, const Element& r) const override;
  std::optional<std::pair<Element, Element>> sigma_tau(const Element& s) const override;
  std::size_t length(const Element& p) const override;
  std::vector<Element> cone_window(int N) const override;
  std::vector<Element> group_window(int N) const override;
  /// Cone elements print as letters ("ab"), other elements in the word grammar.
  std::string format(const Element& s) const override;
  /// "ab" -> {1,2}.
  Element from_letters(const std::string& s) const;

 private:
  int n_;
};

/// Folds the binary join over a list; nullopt as soon as a partial join fails.
std::optional<QuasiLatticeOrder::Element> join_all(const QuasiLatticeOrder& q,
                                                   const std::vector<QuasiLatticeOrder::Element>& ps);

std::unique_ptr<QuasiLatticeOrder> make_qlo(const std::string& name);

}  // namespace crossprod
