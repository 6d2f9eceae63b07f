#include "crossprod/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace crossprod {

// ---------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = static_cast<int>(table_.size());
  if (n == 0) throw PreconditionError("finite group: empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw PreconditionError("finite group: table is not square");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int x : row) {
      if (x < 0 || x >= n) throw PreconditionError("finite group: entry out of range");
      if (seen[static_cast<std::size_t>(x)]) throw PreconditionError("finite group: table is not a Latin square");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int r = 0; r < n; ++r) {
      const int x = multiply(r, c);
      if (seen[static_cast<std::size_t>(x)]) throw PreconditionError("finite group: table is not a Latin square");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = multiply(e, g) == g && multiply(g, e) == g;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw PreconditionError("finite group: no identity element");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (multiply(g, h) == identity_) inverse_[static_cast<std::size_t>(g)] = h;
  for (int g = 0; g < n; ++g)
    if (multiply(inverse(g), g) != identity_) throw PreconditionError("finite group: inverses are not two-sided");

  auto assoc = [&](int a, int b, int c) { return multiply(multiply(a, b), c) == multiply(a, multiply(b, c)); };
  if (n <= 24) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw PreconditionError("finite group: associativity fails");
  } else {
    // Deterministic sample for large tables.
    unsigned state = 12345u;
    auto next = [&] {
      state = state * 1103515245u + 12345u;
      return static_cast<int>((state >> 8) % static_cast<unsigned>(n));
    };
    for (int k = 0; k < 20000; ++k) {
      const int a = next(), b = next(), c = next();
      if (!assoc(a, b, c)) throw PreconditionError("finite group: associativity fails");
    }
  }
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(std::vector<std::vector<int>>{{0}}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  return FiniteGroup(std::move(t));
}

// ---------------------------------------------------------------- words

std::vector<int> reduce_letters(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

ReducedWord make_word(std::vector<int> letters, int rank) {
  if (rank < 1) throw PreconditionError("word rank must be positive");
  for (int x : letters)
    if (x == 0 || std::abs(x) > rank) throw DomainError("generator index out of range");
  return ReducedWord{reduce_letters(std::move(letters)), rank};
}

ReducedWord parse_word(const std::string& text, int n) {
  if (n < 1) throw PreconditionError("word rank must be positive");
  // Keep original offsets so errors point into the caller's string.
  std::vector<std::pair<char, std::size_t>> s;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) s.emplace_back(text[i], i);
  std::vector<int> letters;
  std::size_t i = 0;
  auto pos = [&](std::size_t k) { return k < s.size() ? s[k].second : text.size(); };
  if (s.empty()) return ReducedWord{{}, n};
  while (true) {
    if (i >= s.size() || s[i].first != 'g') throw ParseError("expected 'g'", pos(i));
    ++i;
    const std::size_t start = i;
    long value = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i].first))) {
      value = value * 10 + (s[i].first - '0');
      if (value > 1000000) throw ParseError("generator index too large", pos(start));
      ++i;
    }
    if (i == start) throw ParseError("expected generator index", pos(i));
    if (value < 1 || value > n)
      throw ParseError("generator index " + std::to_string(value) + " out of range 1.." + std::to_string(n), pos(start));
    int letter = static_cast<int>(value);
    if (i < s.size() && s[i].first == '^') {
      if (i + 2 < s.size() && s[i + 1].first == '-' && s[i + 2].first == '1') {
        letter = -letter;
        i += 3;
      } else {
        throw ParseError("expected '^-1'", pos(i));
      }
    }
    letters.push_back(letter);
    if (i == s.size()) break;
    if (s[i].first != '*') throw ParseError("expected '*'", pos(i));
    ++i;
  }
  return ReducedWord{reduce_letters(std::move(letters)), n};
}

std::string format_word(const ReducedWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += '*';
    out += 'g' + std::to_string(std::abs(w.letters[k]));
    if (w.letters[k] < 0) out += "^-1";
  }
  return out;
}

WordProduct word_multiply(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank != b.rank) throw PreconditionError("word_multiply: rank mismatch");
  std::size_t depth = 0;
  const std::size_t na = a.letters.size(), nb = b.letters.size();
  while (depth < na && depth < nb && a.letters[na - 1 - depth] == -b.letters[depth]) ++depth;
  WordProduct out;
  out.depth = depth;
  out.word.rank = a.rank;
  out.word.letters.assign(a.letters.begin(), a.letters.end() - static_cast<std::ptrdiff_t>(depth));
  out.word.letters.insert(out.word.letters.end(), b.letters.begin() + static_cast<std::ptrdiff_t>(depth),
                          b.letters.end());
  return out;
}

ReducedWord word_inverse(const ReducedWord& w) {
  ReducedWord out{{}, w.rank};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

std::vector<ReducedWord> enumerate_words(int n, int L) {
  if (n < 1 || L < 0) throw PreconditionError("enumerate_words: bad parameters");
  std::vector<ReducedWord> out{ReducedWord{{}, n}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= L; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int x = -n; x <= n; ++x) {
        if (x == 0) continue;
        const auto& w = out[k].letters;
        if (!w.empty() && w.back() == -x) continue;
        ReducedWord next = out[k];
        next.letters.push_back(x);
        out.push_back(std::move(next));
      }
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(layer_end), out.end());
    layer_begin = layer_end;
  }
  return out;
}

// ---------------------------------------------------------------- GroupWindow

GroupWindow GroupWindow::finite(FiniteGroup g) {
  GroupWindow w;
  w.kind_ = Kind::Finite;
  w.identity_ = static_cast<std::size_t>(g.identity());
  for (int x = 0; x < g.order(); ++x) w.inverse_.push_back(static_cast<std::size_t>(g.inverse(x)));
  w.finite_ = std::move(g);
  return w;
}

GroupWindow GroupWindow::free(int rank, int window) {
  if (rank < 1) throw PreconditionError("free group rank must be positive");
  if (window < 0) throw PreconditionError("window must be non-negative");
  GroupWindow w;
  w.kind_ = Kind::Free;
  w.rank_ = rank;
  w.window_ = window;
  w.words_ = enumerate_words(rank, window);
  w.index_words();
  return w;
}

GroupWindow GroupWindow::integers(int window) {
  if (window < 0) throw PreconditionError("window must be non-negative");
  GroupWindow w;
  w.kind_ = Kind::Integers;
  w.rank_ = 1;
  w.window_ = window;
  w.words_.push_back(ReducedWord{{}, 1});
  for (int n = 1; n <= window; ++n) {
    w.words_.push_back(ReducedWord{std::vector<int>(static_cast<std::size_t>(n), 1), 1});
    w.words_.push_back(ReducedWord{std::vector<int>(static_cast<std::size_t>(n), -1), 1});
  }
  w.index_words();
  return w;
}

void GroupWindow::index_words() {
  for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i].letters] = i;
  identity_ = index_.at({});
  inverse_.resize(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) inverse_[i] = index_.at(word_inverse(words_[i]).letters);
}

std::size_t GroupWindow::size() const {
  return kind_ == Kind::Finite ? static_cast<std::size_t>(finite_->order()) : words_.size();
}

std::optional<std::size_t> GroupWindow::multiply(std::size_t a, std::size_t b) const {
  if (kind_ == Kind::Finite)
    return static_cast<std::size_t>(finite_->multiply(static_cast<int>(a), static_cast<int>(b)));
  return find(word_multiply(words_.at(a), words_.at(b)).word);
}

std::optional<std::size_t> GroupWindow::find(const ReducedWord& w) const {
  if (kind_ == Kind::Finite) return std::nullopt;
  auto it = index_.find(w.letters);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroupWindow::integer(std::size_t i) const {
  if (kind_ != Kind::Integers) throw PreconditionError("integer(): not a Z window");
  const auto& l = words_.at(i).letters;
  return l.empty() ? 0 : static_cast<int>(l.size()) * l[0];
}

std::string GroupWindow::label(std::size_t i) const {
  switch (kind_) {
    case Kind::Finite: return std::to_string(i);
    case Kind::Integers: return std::to_string(integer(i));
    case Kind::Free: return format_word(words_.at(i));
  }
  return {};
}

std::size_t GroupWindow::length(std::size_t i) const {
  if (kind_ == Kind::Finite) return i == identity_ ? 0 : 1;
  return words_.at(i).length();
}

const FiniteGroup& GroupWindow::finite_group() const {
  if (!finite_) throw PreconditionError("finite_group(): window group");
  return *finite_;
}

std::size_t GroupWindow::parse(const std::string& raw) const {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  auto is_decimal = [](const std::string& s) {
    std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  if (kind_ == Kind::Finite) {
    if (!is_decimal(text) || text[0] == '-') throw ParseError("expected a group element index", 0);
    const long v = std::strtol(text.c_str(), nullptr, 10);
    if (v < 0 || v >= finite_->order()) throw DomainError("group element " + text + " out of range");
    return static_cast<std::size_t>(v);
  }
  ReducedWord w;
  if (text == "e") {
    w = ReducedWord{{}, rank_};
  } else if (kind_ == Kind::Integers && is_decimal(text)) {
    const long v = std::strtol(text.c_str(), nullptr, 10);
    if (std::labs(v) > window_) throw DomainError("integer " + text + " outside window");
    w = ReducedWord{std::vector<int>(static_cast<std::size_t>(std::labs(v)), v < 0 ? -1 : 1), 1};
  } else {
    w = parse_word(raw, rank_);
  }
  auto idx = find(w);
  if (!idx) throw DomainError("element " + raw + " outside the window of length " + std::to_string(window_));
  return *idx;
}

// ---------------------------------------------------------------- quasi-lattice orders

std::optional<QuasiLatticeOrder::Element> join_all(const QuasiLatticeOrder& q,
                                                   const std::vector<QuasiLatticeOrder::Element>& ps) {
  QuasiLatticeOrder::Element acc = q.identity();
  for (const auto& p : ps) {
    auto j = q.join(acc, p);
    if (!j) return std::nullopt;
    acc = std::move(*j);
  }
  return acc;
}

ZkNk::ZkNk(int k) : k_(k) {
  if (k < 1) throw PreconditionError("ZkNk: k must be positive");
}

std::string ZkNk::name() const { return "Z" + std::to_string(k_) + "N" + std::to_string(k_); }

ZkNk::Element ZkNk::identity() const { return Element(static_cast<std::size_t>(k_), 0); }

bool ZkNk::is_element(const Element& s) const { return static_cast<int>(s.size()) == k_; }

ZkNk::Element ZkNk::multiply(const Element& a, const Element& b) const {
  if (!is_element(a) || !is_element(b)) throw DimensionError("ZkNk: wrong coordinate count");
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

ZkNk::Element ZkNk::inverse(const Element& a) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

bool ZkNk::in_cone(const Element& p) const {
  return is_element(p) && std::all_of(p.begin(), p.end(), [](int x) { return x >= 0; });
}

std::optional<ZkNk::Element> ZkNk::join(const Element& p, const Element& r) const {
  if (!in_cone(p) || !in_cone(r)) throw PreconditionError("join: arguments must lie in the cone");
  Element j(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) j[i] = std::max(p[i], r[i]);
  return j;
}

std::optional<std::pair<ZkNk::Element, ZkNk::Element>> ZkNk::sigma_tau(const Element& s) const {
  if (!is_element(s)) return std::nullopt;
  Element sigma(s.size()), tau(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    sigma[i] = std::max(s[i], 0);
    tau[i] = sigma[i] - s[i];
  }
  return std::make_pair(sigma, tau);
}

std::size_t ZkNk::length(const Element& p) const {
  std::size_t n = 0;
  for (int x : p) n += static_cast<std::size_t>(std::abs(x));
  return n;
}

std::vector<ZkNk::Element> ZkNk::cone_window(int N) const {
  std::vector<Element> out;
  Element cur(static_cast<std::size_t>(k_), 0);
  // Odometer over the box [0,N]^k, keeping coordinate sums <= N.
  while (true) {
    if (static_cast<int>(length(cur)) <= N) out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == N) cur[i++] = 0;
    if (i == cur.size()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), [this](const Element& a, const Element& b) {
    return std::make_pair(length(a), a) < std::make_pair(length(b), b);
  });
  return out;
}

std::vector<ZkNk::Element> ZkNk::group_window(int N) const {
  std::vector<Element> out;
  Element cur(static_cast<std::size_t>(k_), -N);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == N) cur[i++] = -N;
    if (i == cur.size()) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ZkNk::format(const Element& s) const {
  std::ostringstream os;
  if (k_ == 1) {
    os << s.at(0);
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

FreeMonoid::FreeMonoid(int n) : n_(n) {
  if (n < 1 || n > 26) throw PreconditionError("FreeMonoid: n must be in 1..26");
}

std::string FreeMonoid::name() const { return "free" + std::to_string(n_); }

FreeMonoid::Element FreeMonoid::identity() const { return {}; }

bool FreeMonoid::is_element(const Element& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0 || std::abs(s[i]) > n_) return false;
    if (i && s[i] == -s[i - 1]) return false;
  }
  return true;
}

FreeMonoid::Element FreeMonoid::multiply(const Element& a, const Element& b) const {
  return word_multiply(ReducedWord{a, n_}, ReducedWord{b, n_}).word.letters;
}

FreeMonoid::Element FreeMonoid::inverse(const Element& a) const { return word_inverse(ReducedWord{a, n_}).letters; }

bool FreeMonoid::in_cone(const Element& p) const {
  return std::all_of(p.begin(), p.end(), [this](int x) { return x >= 1 && x <= n_; });
}

std::optional<FreeMonoid::Element> FreeMonoid::join(const Element& p, const Element& r) const {
  if (!in_cone(p) || !in_cone(r)) throw PreconditionError("join: arguments must lie in the cone");
  const Element& shorter = p.size() <= r.size() ? p : r;
  const Element& longer = p.size() <= r.size() ? r : p;
  if (!std::equal(shorter.begin(), shorter.end(), longer.begin())) return std::nullopt;
  return longer;
}

std::optional<std::pair<FreeMonoid::Element, FreeMonoid::Element>> FreeMonoid::sigma_tau(const Element& s) const {
  if (!is_element(s)) return std::nullopt;
  std::size_t split = 0;
  while (split < s.size() && s[split] > 0) ++split;
  for (std::size_t i = split; i < s.size(); ++i)
    if (s[i] > 0) return std::nullopt;
  Element sigma(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(split));
  Element tau;
  for (std::size_t i = s.size(); i > split; --i) tau.push_back(-s[i - 1]);
  return std::make_pair(sigma, tau);
}

std::size_t FreeMonoid::length(const Element& p) const { return p.size(); }

std::vector<FreeMonoid::Element> FreeMonoid::cone_window(int N) const {
  std::vector<Element> out{{}};
  std::size_t begin = 0;
  for (int len = 1; len <= N; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int x = 1; x <= n_; ++x) {
        Element w = out[k];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

std::vector<FreeMonoid::Element> FreeMonoid::group_window(int N) const {
  std::vector<Element> out;
  for (auto& w : enumerate_words(n_, N)) out.push_back(std::move(w.letters));
  return out;
}

std::string FreeMonoid::format(const Element& s) const {
  if (in_cone(s)) {
    if (s.empty()) return "e";
    std::string out;
    for (int x : s) out += static_cast<char>('a' + x - 1);
    return out;
  }
  return format_word(ReducedWord{s, n_});
}

FreeMonoid::Element FreeMonoid::from_letters(const std::string& s) const {
  Element out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int x = s[i] - 'a' + 1;
    if (x < 1 || x > n_) throw ParseError("letter outside alphabet", i);
    out.push_back(x);
  }
  return out;
}

std::unique_ptr<QuasiLatticeOrder> make_qlo(const std::string& name) {
  if (name == "z1n1") return std::make_unique<ZkNk>(1);
  if (name == "z2n2") return std::make_unique<ZkNk>(2);
  if (name == "z3n3") return std::make_unique<ZkNk>(3);
  if (name.rfind("free", 0) == 0 && name.size() > 4) {
    const int n = std::atoi(name.c_str() + 4);
    if (n >= 1) return std::make_unique<FreeMonoid>(n);
  }
  throw PreconditionError("unknown quasi-lattice order '" + name + "'");
}

}  // namespace crossprod
