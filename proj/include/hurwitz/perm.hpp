#pragma once

// Permutations of I_d = {1..d} and conjugacy-class bookkeeping.
//
// Points are 1-based at the API boundary and 0-based in storage. Products
// follow the single convention (p*q)(i) = p(q(i)): q is applied first.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hurwitz/error.hpp"

namespace hurwitz {

inline constexpr int kMaxDegree = 16;

class Perm {
 public:
  using Point = std::uint8_t;

  Perm() : Perm(1) {}

  explicit Perm(int degree) {
    check_degree(degree);
    images_.resize(static_cast<std::size_t>(degree));
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  static Perm identity(int degree) { return Perm(degree); }

  // One-line notation, 1-based: images[i-1] = sigma(i).
  static Perm from_images(const std::vector<int>& images) {
    const int d = static_cast<int>(images.size());
    check_degree(d);
    Perm p(d);
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 1 || v > d || seen[static_cast<std::size_t>(v - 1)]) {
        throw ParseError("not a permutation of {1.." + std::to_string(d) + "}");
      }
      seen[static_cast<std::size_t>(v - 1)] = true;
      p.images_[i] = static_cast<Point>(v - 1);
    }
    return p;
  }

  // Product of the given cycles; cycles must be pairwise disjoint.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int a = cycle[k];
        if (a < 1 || a > degree) {
          throw ParseError("point " + std::to_string(a) + " outside {1.." +
                           std::to_string(degree) + "}");
        }
        if (used[static_cast<std::size_t>(a - 1)]) {
          throw ParseError("point " + std::to_string(a) + " repeated in cycles");
        }
        used[static_cast<std::size_t>(a - 1)] = true;
        const int b = cycle[(k + 1) % cycle.size()];
        p.images_[static_cast<std::size_t>(a - 1)] = static_cast<Point>(b - 1);
      }
    }
    return p;
  }

  static Perm transposition(int degree, int i, int j) {
    if (i == j) throw PreconditionError("transposition needs two distinct points");
    return from_cycles(degree, {{i, j}});
  }

  int degree() const { return static_cast<int>(images_.size()); }

  // sigma(i), 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)] + 1; }

  // 0-based image table.
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  // Packs the one-line form into 4 bits per point. Injective for a fixed degree.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (const Point v : images_) k = (k << 4) | v;
    return k;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  // Lexicographic on one-line notation; shorter degree first.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
  }

 private:
  friend Perm compose(const Perm&, const Perm&);
  friend Perm inverse(const Perm&);

  static void check_degree(int d) {
    if (d < 1 || d > kMaxDegree) {
      throw PreconditionError("degree must lie in 1.." + std::to_string(kMaxDegree));
    }
  }

  std::vector<Point> images_;
};

inline void require_same_degree(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch(a.degree(), b.degree());
}

// (p*q)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
  require_same_degree(p, q);
  Perm r(p.degree());
  for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

inline Perm inverse(const Perm& p) {
  Perm r(p.degree());
  for (std::size_t i = 0; i < p.images_.size(); ++i) r.images_[p.images_[i]] = static_cast<Perm::Point>(i);
  return r;
}

// g * a * g^-1
inline Perm conj(const Perm& g, const Perm& a) { return compose(compose(g, a), inverse(g)); }

// Cycles of length >= 2, each starting at its least point, ordered by that point.
inline std::vector<std::vector<int>> cycles(const Perm& p, bool include_fixed = false) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int s = 1; s <= p.degree(); ++s) {
    if (seen[static_cast<std::size_t>(s - 1)]) continue;
    std::vector<int> c;
    for (int x = s; !seen[static_cast<std::size_t>(x - 1)]; x = p(x)) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      c.push_back(x);
    }
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

// Conjugacy class of S_d, as a non-increasing partition of d including 1s.
struct ClassLabel {
  std::vector<int> parts;

  int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts[i]);
    }
    return s;
  }

  Parity parity() const {
    const int d = degree();
    return (d - static_cast<int>(parts.size())) % 2 == 0 ? Parity::even : Parity::odd;
  }

  std::uint64_t order() const {
    std::uint64_t l = 1;
    for (int p : parts) l = std::lcm(l, static_cast<std::uint64_t>(p));
    return l;
  }

  int fixed_points() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  }

  bool is_identity() const {
    return std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
  }

  // |C| = d! / prod_l (l^{m_l} m_l!)
  std::uint64_t class_size() const {
    std::uint64_t n = 1;
    for (int i = 2; i <= degree(); ++i) n *= static_cast<std::uint64_t>(i);
    std::size_t i = 0;
    while (i < parts.size()) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      const auto mult = static_cast<std::uint64_t>(j - i);
      for (std::uint64_t k = 0; k < mult; ++k) n /= static_cast<std::uint64_t>(parts[i]);
      for (std::uint64_t k = 2; k <= mult; ++k) n /= k;
      i = j;
    }
    return n;
  }
};

// Parses "4,1,1" or "4" (missing 1s are filled up to d).
inline ClassLabel parse_class(int d, std::string_view text) {
  ClassLabel c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty part in class \"" + std::string(text) + "\"");
    int v = 0;
    try {
      v = std::stoi(cur);
    } catch (const std::exception&) {
      throw ParseError("bad class part \"" + cur + "\"");
    }
    if (v < 1) throw ParseError("class parts must be positive");
    c.parts.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == '[' || ch == ']') continue;
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  std::sort(c.parts.begin(), c.parts.end(), std::greater<>());
  const int sum = c.degree();
  if (sum > d) throw ParseError("class \"" + std::string(text) + "\" is not a partition of " + std::to_string(d));
  for (int i = sum; i < d; ++i) c.parts.push_back(1);
  return c;
}

inline ClassLabel class_of(const Perm& p) {
  ClassLabel c;
  for (const auto& cyc : cycles(p, true)) c.parts.push_back(static_cast<int>(cyc.size()));
  std::sort(c.parts.begin(), c.parts.end(), std::greater<>());
  return c;
}

inline Parity parity(const Perm& p) { return class_of(p).parity(); }
inline std::uint64_t order(const Perm& p) { return class_of(p).order(); }
inline int fixed_points(const Perm& p) { return class_of(p).fixed_points(); }

// All partitions of d in reverse-lexicographic order: [d], [d-1,1], ...
inline std::vector<ClassLabel> partitions(int d) {
  std::vector<ClassLabel> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(ClassLabel{cur});
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

inline constexpr std::uint64_t kDefaultClassLimit = 1'000'000;

// Elements of the class, sorted by one-line notation.
inline std::vector<Perm> class_elements(int d, const ClassLabel& c,
                                        std::uint64_t limit = kDefaultClassLimit) {
  if (c.degree() != d) throw PreconditionError("class " + c.to_string() + " is not a partition of " + std::to_string(d));
  if (c.class_size() > limit) {
    throw LimitExceeded("class " + c.to_string() + " has " + std::to_string(c.class_size()) +
                        " elements, limit " + std::to_string(limit));
  }
  // Fill the cycle pattern of c with points in every order; dedupe by sorting.
  std::vector<int> pts(static_cast<std::size_t>(d));
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<Perm> raw;
  raw.reserve(c.class_size());
  if (d <= 10) {
    do {
      std::vector<std::vector<int>> cyc;
      std::size_t at = 0;
      bool canonical = true;
      for (int len : c.parts) {
        std::vector<int> cy(pts.begin() + static_cast<std::ptrdiff_t>(at),
                            pts.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(len)));
        // Each cycle must start at its minimum to avoid rotations.
        if (*std::min_element(cy.begin(), cy.end()) != cy.front()) {
          canonical = false;
          break;
        }
        cyc.push_back(std::move(cy));
        at += static_cast<std::size_t>(len);
      }
      if (canonical) raw.push_back(Perm::from_cycles(d, cyc));
    } while (std::next_permutation(pts.begin(), pts.end()));
  } else {
    throw LimitExceeded("class enumeration supports d <= 10");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

// "(1,2)(3,4,5)"; identity prints as "()".
inline std::string to_cycle_string(const Perm& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

// "[2,1,4,3]"
inline std::string to_one_line_string(const Perm& p) {
  std::string s = "[";
  for (int i = 1; i <= p.degree(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(p(i));
  }
  return s + "]";
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view body) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("empty entry in \"" + std::string(body) + "\"");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer \"" + cur + "\"");
    }
    if (used != cur.size()) throw ParseError("bad integer \"" + cur + "\"");
    out.push_back(v);
    cur.clear();
  };
  for (char ch : body) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == ',') {
      flush();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty() || !out.empty()) flush();
  return out;
}

// Splits "(1,2)(3,4,5)" into cycle bodies.
inline std::vector<std::vector<int>> parse_cycle_groups(std::string_view text) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unbalanced '(' in \"" + std::string(text) + "\"");
    out.push_back(parse_int_list(text.substr(i + 1, close - i - 1)));
    i = close + 1;
  }
  return out;
}

}  // namespace detail

// Accepts cycle notation "(1,2)(3,4,5)" / "()" or one-line "[2,1,4,3]".
// `degree` 0 infers it (one-line length, or the largest point in the cycles).
inline Perm parse_perm(std::string_view text, int degree = 0) {
  auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) throw ParseError("empty permutation");
  text = text.substr(first, text.find_last_not_of(" \t") - first + 1);
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("unbalanced '[' in \"" + std::string(text) + "\"");
    const auto images = detail::parse_int_list(text.substr(1, text.size() - 2));
    Perm p = Perm::from_images(images);
    if (degree != 0 && p.degree() != degree) throw DegreeMismatch(p.degree(), degree);
    return p;
  }
  auto groups = detail::parse_cycle_groups(text);
  int d = degree;
  if (d == 0) {
    d = 1;
    for (const auto& g : groups)
      for (int v : g) d = std::max(d, v);
  }
  std::erase_if(groups, [](const std::vector<int>& g) { return g.size() <= 1; });
  return Perm::from_cycles(d, groups);
}

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::Perm> {
  std::size_t operator()(const hurwitz::Perm& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.key() ^ (static_cast<std::uint64_t>(p.degree()) << 60));
  }
};

namespace hurwitz {

// Subgroup closure is exhaustive; this caps the degree it accepts.
inline constexpr int kClosureMaxDegree = 8;

// Elements of <gens> in S_d, sorted by one-line notation.
inline std::vector<Perm> subgroup_closure(int degree, const std::vector<Perm>& gens,
                                          int max_degree = kClosureMaxDegree) {
  if (degree > max_degree) {
    throw LimitExceeded("subgroup closure supports d <= " + std::to_string(max_degree));
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
  }
  std::vector<Perm> elems{Perm::identity(degree)};
  std::unordered_set<std::uint64_t> seen{elems.front().key()};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      Perm x = compose(elems[i], g);
      if (seen.insert(x.key()).second) elems.push_back(std::move(x));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace hurwitz
