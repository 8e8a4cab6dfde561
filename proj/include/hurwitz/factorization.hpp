#pragma once

// Words in the factorization semigroup of S_d and the local Hurwitz moves.
//
// A Factorization is a *word*: an ordered tuple of non-identity factors.
// Two words represent the same semigroup element iff they lie in one orbit
// of the moves below; deciding that is orbit_engine's job, not operator==.

#include <cctype>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

class Factorization {
 public:
  explicit Factorization(int degree = 1) : degree_(degree) {
    if (degree < 1 || degree > kMaxDegree) throw PreconditionError("bad degree " + std::to_string(degree));
  }

  // Rejects identity factors and degree mismatches.
  Factorization(int degree, std::vector<Perm> factors) : Factorization(degree) {
    for (const auto& f : factors) check_factor(f);
    factors_ = std::move(factors);
  }

  // Same as the constructor but drops identity factors (x_g * x_1 = x_g).
  static Factorization dropping_identities(int degree, std::vector<Perm> factors) {
    std::erase_if(factors, [](const Perm& p) { return p.is_identity(); });
    return Factorization(degree, std::move(factors));
  }

  int degree() const { return degree_; }
  std::size_t length() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const std::vector<Perm>& factors() const { return factors_; }
  const Perm& operator[](std::size_t i) const { return factors_[i]; }

  void push_back(Perm p) {
    check_factor(p);
    factors_.push_back(std::move(p));
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend std::strong_ordering operator<=>(const Factorization& a, const Factorization& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

 private:
  void check_factor(const Perm& f) const {
    if (f.degree() != degree_) throw DegreeMismatch(f.degree(), degree_);
    if (f.is_identity()) throw PreconditionError("identity factor in a factorization");
  }

  int degree_;
  std::vector<Perm> factors_;
};

// tau(s): how many factors lie in each conjugacy class.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::map<ClassLabel, int> counts) : counts_(std::move(counts)) {
    for (const auto& [c, n] : counts_) {
      if (n <= 0) throw PreconditionError("type multiplicities must be positive");
      if (c.is_identity()) throw PreconditionError("identity class in a type");
    }
  }

  void add(const ClassLabel& c, int n = 1) {
    if (n <= 0) throw PreconditionError("type multiplicities must be positive");
    counts_[c] += n;
  }

  const std::map<ClassLabel, int>& counts() const { return counts_; }
  int count(const ClassLabel& c) const {
    auto it = counts_.find(c);
    return it == counts_.end() ? 0 : it->second;
  }
  int total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0,
                           [](int acc, const auto& kv) { return acc + kv.second; });
  }
  bool empty() const { return counts_.empty(); }

  // Parity of any product of a word of this type.
  Parity parity() const {
    Parity p = Parity::even;
    for (const auto& [c, n] : counts_) {
      if (c.parity() == Parity::odd && n % 2 == 1) p = p ^ Parity::odd;
    }
    return p;
  }

  std::vector<ClassLabel> classes() const {
    std::vector<ClassLabel> out;
    for (const auto& kv : counts_) out.push_back(kv.first);
    return out;
  }

  // "2,1,1:6" or "2,1:2;3:2"
  std::string to_string() const {
    std::string s;
    for (const auto& [c, n] : counts_) {
      if (!s.empty()) s += ';';
      s += c.to_string() + ':' + std::to_string(n);
    }
    return s;
  }

  friend bool operator==(const TypeVector&, const TypeVector&) = default;
  friend auto operator<=>(const TypeVector&, const TypeVector&) = default;

 private:
  std::map<ClassLabel, int> counts_;
};

inline TypeVector parse_type(int degree, std::string_view text) {
  TypeVector t;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    const auto entry = text.substr(start, end - start);
    if (!entry.empty()) {
      const auto colon = entry.rfind(':');
      if (colon == std::string_view::npos) throw ParseError("type entry \"" + std::string(entry) + "\" lacks ':count'");
      int n = 0;
      try {
        n = std::stoi(std::string(entry.substr(colon + 1)));
      } catch (const std::exception&) {
        throw ParseError("bad count in type entry \"" + std::string(entry) + "\"");
      }
      const ClassLabel c = parse_class(degree, entry.substr(0, colon));
      if (c.is_identity()) throw ParseError("identity class in a type");
      t.add(c, n);
    }
    start = end + 1;
  }
  if (t.empty()) throw ParseError("empty type");
  return t;
}

enum class Direction { L, R };

// A braid-generator move at position i (1-based) acting on factors i, i+1.
//   R: (a, b) -> (a b a^-1, a)
//   L: (a, b) -> (b, b^-1 a b)
struct Move {
  int position = 1;
  Direction direction = Direction::R;

  Move inverse() const { return {position, direction == Direction::R ? Direction::L : Direction::R}; }

  friend bool operator==(const Move&, const Move&) = default;

  std::string to_string() const {
    return (direction == Direction::R ? "R" : "L") + std::to_string(position);
  }
};

inline Move parse_move(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'R' && text[0] != 'L')) throw ParseError("bad move \"" + std::string(text) + "\"");
  return {std::stoi(std::string(text.substr(1))), text[0] == 'R' ? Direction::R : Direction::L};
}

// alpha(s) = g_1 * ... * g_n
inline Perm alpha(const Factorization& s) {
  Perm r = Perm::identity(s.degree());
  for (const auto& f : s.factors()) r = compose(r, f);
  return r;
}

inline std::size_t length(const Factorization& s) { return s.length(); }

inline TypeVector tau(const Factorization& s) {
  TypeVector t;
  for (const auto& f : s.factors()) t.add(class_of(f));
  return t;
}

// G_s as an explicit sorted element list.
inline std::vector<Perm> generated_subgroup(const Factorization& s,
                                            int max_degree = kClosureMaxDegree) {
  return subgroup_closure(s.degree(), s.factors(), max_degree);
}

inline bool is_transitive(const Factorization& s) {
  const int d = s.degree();
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int comps = d;
  for (const auto& f : s.factors()) {
    for (int i = 0; i < d; ++i) {
      const int a = find(i), b = find(f.images()[static_cast<std::size_t>(i)]);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
  }
  return comps == 1;
}

// s in S_O^H: G_s equals H (given as any listing of its elements).
inline bool in_S_O_H(const Factorization& s, std::vector<Perm> H) {
  std::sort(H.begin(), H.end());
  H.erase(std::unique(H.begin(), H.end()), H.end());
  return generated_subgroup(s) == H;
}

// s in S_{O,Gamma}: alpha(s) lies in Gamma.
inline bool in_S_O_Gamma(const Factorization& s, const std::vector<Perm>& Gamma) {
  const Perm a = alpha(s);
  return std::find(Gamma.begin(), Gamma.end(), a) != Gamma.end();
}

inline Factorization apply_move(const Factorization& s, Move m) {
  if (m.position < 1 || static_cast<std::size_t>(m.position) >= s.length()) {
    throw PreconditionError("move position " + std::to_string(m.position) + " out of range for length " +
                            std::to_string(s.length()));
  }
  std::vector<Perm> f = s.factors();
  const auto i = static_cast<std::size_t>(m.position - 1);
  const Perm a = f[i], b = f[i + 1];
  if (m.direction == Direction::R) {
    f[i] = conj(a, b);
    f[i + 1] = a;
  } else {
    f[i] = b;
    f[i + 1] = conj(inverse(b), a);
  }
  return Factorization(s.degree(), std::move(f));
}

inline Factorization apply_moves(Factorization s, std::span<const Move> moves) {
  for (const Move& m : moves) s = apply_move(s, m);
  return s;
}

// rho(g)(s): conjugate every factor by g.
inline Factorization rho(const Perm& g, const Factorization& s) {
  if (g.degree() != s.degree()) throw DegreeMismatch(g.degree(), s.degree());
  std::vector<Perm> f;
  f.reserve(s.length());
  for (const auto& x : s.factors()) f.push_back(conj(g, x));
  return Factorization(s.degree(), std::move(f));
}

inline Factorization concat(const Factorization& a, const Factorization& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
  std::vector<Perm> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Factorization(a.degree(), std::move(f));
}

inline Factorization power(const Factorization& s, int k) {
  Factorization r(s.degree());
  for (int i = 0; i < k; ++i) r = concat(r, s);
  return r;
}

inline Factorization slice(const Factorization& s, std::size_t from, std::size_t count) {
  std::vector<Perm> f(s.factors().begin() + static_cast<std::ptrdiff_t>(from),
                      s.factors().begin() + static_cast<std::ptrdiff_t>(from + count));
  return Factorization(s.degree(), std::move(f));
}

// Factor in word syntax: single cycles bare, multi-cycle factors in brackets.
inline std::string format_factor(const Perm& p) {
  const std::string c = to_cycle_string(p);
  return cycles(p).size() > 1 ? "[" + c + "]" : c;
}

// The empty word prints as "()".
inline std::string format_word(const Factorization& s) {
  if (s.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) out += ' ';
    out += format_factor(s[i]);
  }
  return out;
}

// Word syntax: whitespace separates factors; inside a token adjacent cycles
// are separate factors, so "(1,2)(2,3)" is a two-letter word. A single
// multi-cycle factor is written "[(1,2)(3,4)]" or one-line "[2,1,4,3]".
inline Factorization parse_word(std::string_view text, int degree) {
  std::vector<std::string> tokens;
  std::string cur;
  int bracket = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) && bracket == 0) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    if (ch == '[') ++bracket;
    if (ch == ']') --bracket;
    cur += ch;
  }
  if (bracket != 0) throw ParseError("unbalanced '[' in word \"" + std::string(text) + "\"");
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.size() == 1 && tokens.front() == "()") return Factorization(degree);

  std::vector<Perm> factors;
  for (const auto& tok : tokens) {
    if (tok.front() == '[') {
      if (tok.back() != ']') throw ParseError("bad factor \"" + tok + "\"");
      const std::string_view inner = std::string_view(tok).substr(1, tok.size() - 2);
      factors.push_back(parse_perm(inner.find('(') != std::string_view::npos ? inner : std::string_view(tok), degree));
    } else {
      for (const auto& cyc : detail::parse_cycle_groups(tok)) {
        if (cyc.size() <= 1) throw ParseError("identity factor in word \"" + std::string(text) + "\"");
        factors.push_back(Perm::from_cycles(degree, {cyc}));
      }
    }
  }
  return Factorization(degree, std::move(factors));
}

// Largest point mentioned in a word, for inferring d.
inline int infer_degree(std::string_view text) {
  int d = 1;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) d = std::max(d, std::stoi(num));
    num.clear();
  };
  bool one_line = false;
  int one_line_len = 0;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      num += ch;
    } else {
      if (ch == '[') {
        one_line = true;
        one_line_len = 0;
      }
      if (one_line && (ch == ',' || ch == ']') && !num.empty()) ++one_line_len;
      if (ch == ']') {
        d = std::max(d, one_line_len);
        one_line = false;
      }
      flush();
    }
  }
  flush();
  return d;
}

// File format: "d=<degree>" header, then one word per line.
inline std::vector<Factorization> read_factorizations(std::istream& in) {
  std::string line;
  int degree = 0;
  std::vector<Factorization> out;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (degree == 0) {
      if (line.compare(first, 2, "d=") != 0) throw ParseError("factorization file must start with \"d=<degree>\"");
      degree = std::stoi(line.substr(first + 2));
      continue;
    }
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(parse_word(std::string_view(line).substr(first, last - first + 1), degree));
  }
  if (degree == 0) throw ParseError("missing \"d=<degree>\" header");
  return out;
}

inline void write_factorizations(std::ostream& out, int degree, const std::vector<Factorization>& words) {
  out << "d=" << degree << '\n';
  for (const auto& w : words) out << format_word(w) << '\n';
}

}  // namespace hurwitz
