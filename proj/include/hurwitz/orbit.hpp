#pragma once

// Hurwitz orbits, equivalence, and fibers of the product map.
//
// Every search here is level-synchronous: a level is generated (optionally in
// parallel against a read-only snapshot of the visited table) and then merged
// sequentially in frontier order. Reported sizes, canonical words, orbit
// counts and certificates are therefore independent of the worker count.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hurwitz/alphabet.hpp"
#include "hurwitz/factorization.hpp"
#include "hurwitz/word_table.hpp"

namespace hurwitz {

struct Limits {
  std::uint64_t max_states = 10'000'000;
  std::uint64_t max_fiber = 10'000'000;
  std::uint64_t memory_budget = std::uint64_t{4} << 30;  // bytes per search
  unsigned workers = 1;
};

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

// Runs fn(chunk, begin, end) over [0, n) split into `workers` contiguous chunks.
template <class Fn>
void parallel_chunks(unsigned workers, std::size_t n, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || n < 2 * workers) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  const std::size_t per = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t b = std::min(n, w * per), e = std::min(n, b + per);
    pool.emplace_back([&, w, b, e] {
      try {
        fn(std::size_t{w}, b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace detail {

inline std::vector<Letter> encode(const Alphabet& A, const Factorization& s) {
  std::vector<Letter> w;
  w.reserve(s.length());
  for (const auto& f : s.factors()) w.push_back(A.letter(f));
  return w;
}

inline Factorization decode(const Alphabet& A, WordView w) {
  std::vector<Perm> f;
  f.reserve(w.size());
  for (Letter a : w) f.push_back(A.perm(a));
  return Factorization(A.degree(), std::move(f));
}

// Edge codes: 2*i + 0 is R at position i+1, 2*i + 1 is L at position i+1;
// codes >= 2*(n-1) are conjugations by extra generators.
inline std::uint32_t move_code(Move m) {
  return static_cast<std::uint32_t>(2 * (m.position - 1) + (m.direction == Direction::L ? 1 : 0));
}

inline Move code_move(std::uint32_t c) {
  return {static_cast<int>(c / 2) + 1, c % 2 == 0 ? Direction::R : Direction::L};
}

// Applies edge `code` to src, writing into dst (same width).
inline void apply_edge(const Alphabet& A, WordView src, std::span<Letter> dst, std::uint32_t code,
                       const std::vector<Perm>& conj_gens) {
  const std::size_t n = src.size();
  const std::size_t move_codes = n >= 2 ? 2 * (n - 1) : 0;
  if (code < move_codes) {
    std::copy(src.begin(), src.end(), dst.begin());
    const std::size_t i = code / 2;
    const Letter a = src[i], b = src[i + 1];
    if (code % 2 == 0) {
      dst[i] = A.conj(a, b);
      dst[i + 1] = a;
    } else {
      dst[i] = b;
      dst[i + 1] = A.conj(A.inv(b), a);
    }
  } else {
    const Perm& g = conj_gens[code - move_codes];
    for (std::size_t k = 0; k < n; ++k) dst[k] = A.conj_by(g, src[k]);
  }
}

inline std::uint32_t edge_count(std::size_t width, const std::vector<Perm>& conj_gens) {
  return static_cast<std::uint32_t>((width >= 2 ? 2 * (width - 1) : 0) + conj_gens.size());
}

// Adjacent transpositions (i, i+1): a generating set of S_d.
inline std::vector<Perm> adjacent_transpositions(int d) {
  std::vector<Perm> g;
  for (int i = 1; i < d; ++i) g.push_back(Perm::transposition(d, i, i + 1));
  return g;
}

// Breadth-first search tree over one orbit.
struct SearchTree {
  explicit SearchTree(std::size_t width) : table(width) {}

  WordTable table;
  std::vector<WordTable::Index> parent;
  std::vector<std::uint32_t> via;
  std::size_t level_begin = 0;  // current frontier is [level_begin, table.size())
  bool complete = false;
  std::string limit_hit;

  std::size_t bytes() const {
    return table.bytes() + parent.capacity() * sizeof(WordTable::Index) + via.capacity() * sizeof(std::uint32_t);
  }

  void add_root(WordView w) {
    table.insert(w);
    parent.push_back(WordTable::kNone);
    via.push_back(0);
  }

  // Edge codes from the root to node i.
  std::vector<std::uint32_t> path_to(WordTable::Index i) const {
    std::vector<std::uint32_t> rev;
    while (parent[i] != WordTable::kNone) {
      rev.push_back(via[i]);
      i = parent[i];
    }
    return {rev.rbegin(), rev.rend()};
  }
};

struct Candidate {
  WordTable::Index parent;
  std::uint32_t code;
  std::size_t offset;  // into the chunk's letter buffer
};

// Generates successors of tree frontier [lo, hi) that are not yet in the
// tree, grouped per chunk in frontier order.
inline void generate_level(const Alphabet& A, const SearchTree& tree, std::size_t lo, std::size_t hi,
                           const std::vector<Perm>& conj_gens, unsigned workers,
                           std::vector<std::vector<Candidate>>& cands, std::vector<std::vector<Letter>>& bufs) {
  const std::size_t width = tree.table.width();
  const std::uint32_t edges = edge_count(width, conj_gens);
  const unsigned w = std::max(1u, workers);
  cands.assign(w, {});
  bufs.assign(w, {});
  parallel_chunks(w, hi - lo, [&](std::size_t chunk, std::size_t b, std::size_t e) {
    std::vector<Letter> tmp(width);
    auto& cs = cands[chunk];
    auto& buf = bufs[chunk];
    for (std::size_t i = lo + b; i < lo + e; ++i) {
      const WordView src = tree.table[static_cast<WordTable::Index>(i)];
      for (std::uint32_t c = 0; c < edges; ++c) {
        apply_edge(A, src, tmp, c, conj_gens);
        if (tree.table.contains(tmp)) continue;
        cs.push_back({static_cast<WordTable::Index>(i), c, buf.size()});
        buf.insert(buf.end(), tmp.begin(), tmp.end());
      }
    }
  });
}

// Expands the whole next level of `tree`. `on_new(index)` may return true
// to stop early. Returns true if stopped by on_new.
template <class OnNew>
bool expand_level(const Alphabet& A, SearchTree& tree, const std::vector<Perm>& conj_gens, const Limits& limits,
                  OnNew&& on_new) {
  const std::size_t lo = tree.level_begin, hi = tree.table.size();
  tree.level_begin = hi;
  std::vector<std::vector<Candidate>> cands;
  std::vector<std::vector<Letter>> bufs;
  generate_level(A, tree, lo, hi, conj_gens, limits.workers, cands, bufs);
  const std::size_t width = tree.table.width();
  for (std::size_t chunk = 0; chunk < cands.size(); ++chunk) {
    for (const Candidate& c : cands[chunk]) {
      const WordView w{bufs[chunk].data() + c.offset, width};
      if (tree.table.contains(w)) continue;
      if (tree.table.size() >= limits.max_states) {
        tree.limit_hit = "max_states=" + std::to_string(limits.max_states);
        return true;
      }
      const auto idx = tree.table.insert(w).first;
      tree.parent.push_back(c.parent);
      tree.via.push_back(c.code);
      if (on_new(idx)) return true;
      if ((idx & 0xFFF) == 0 && tree.bytes() > limits.memory_budget) {
        tree.limit_hit = "memory_budget=" + std::to_string(limits.memory_budget);
        return true;
      }
    }
  }
  return false;
}

// Full BFS from `start`. `on_new(tree, index)` returning true stops the search
// (tree.complete stays false, limit_hit empty).
template <class OnNew>
SearchTree explore(const Alphabet& A, WordView start, const std::vector<Perm>& conj_gens, const Limits& limits,
                   OnNew&& on_new) {
  SearchTree tree(start.size());
  tree.add_root(start);
  if (on_new(tree, WordTable::Index{0})) return tree;
  while (tree.level_begin < tree.table.size()) {
    const bool stopped = expand_level(A, tree, conj_gens, limits,
                                      [&](WordTable::Index i) { return on_new(tree, i); });
    if (stopped) return tree;
  }
  tree.complete = true;
  return tree;
}

inline SearchTree explore(const Alphabet& A, WordView start, const std::vector<Perm>& conj_gens,
                          const Limits& limits) {
  return explore(A, start, conj_gens, limits, [](const SearchTree&, WordTable::Index) { return false; });
}

inline WordTable::Index lex_min(const WordTable& t) {
  WordTable::Index best = 0;
  for (WordTable::Index i = 1; i < t.size(); ++i) {
    const WordView a = t[i], b = t[best];
    if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())) best = i;
  }
  return best;
}

}  // namespace detail

struct OrbitReport {
  Factorization start;
  std::uint64_t size = 1;
  bool complete = false;
  std::optional<Factorization> canonical;  // lexicographic minimum, only when complete
  std::uint64_t states_explored = 0;
  std::string limit_hit;  // empty when complete
};

// Closure of s under all moves (and under simultaneous conjugation when
// conjugation_quotient is set).
inline OrbitReport enumerate_orbit(const Factorization& s, const Limits& limits = {},
                                   bool conjugation_quotient = false) {
  OrbitReport r;
  r.start = s;
  if (s.empty()) {
    r.complete = true;
    r.canonical = s;
    r.states_explored = 1;
    return r;
  }
  const Alphabet A = Alphabet::covering(s.degree(), s.factors());
  const auto start = detail::encode(A, s);
  const std::vector<Perm> gens = conjugation_quotient ? detail::adjacent_transpositions(s.degree()) : std::vector<Perm>{};
  const detail::SearchTree tree = detail::explore(A, start, gens, limits);
  r.size = tree.table.size();
  r.states_explored = tree.table.size();
  r.complete = tree.complete;
  r.limit_hit = tree.limit_hit;
  if (r.complete) r.canonical = detail::decode(A, tree.table[detail::lex_min(tree.table)]);
  return r;
}

// All words of the orbit, in discovery order (start first).
inline std::vector<Factorization> orbit_members(const Factorization& s, const Limits& limits = {},
                                                bool conjugation_quotient = false) {
  if (s.empty()) return {s};
  const Alphabet A = Alphabet::covering(s.degree(), s.factors());
  const auto start = detail::encode(A, s);
  const std::vector<Perm> gens = conjugation_quotient ? detail::adjacent_transpositions(s.degree()) : std::vector<Perm>{};
  const detail::SearchTree tree = detail::explore(A, start, gens, limits);
  if (!tree.complete) throw LimitExceeded("orbit not enumerated: " + tree.limit_hit);
  std::vector<Factorization> out;
  out.reserve(tree.table.size());
  for (WordTable::Index i = 0; i < tree.table.size(); ++i) out.push_back(detail::decode(A, tree.table[i]));
  return out;
}

struct Equivalence {
  Verdict verdict = Verdict::unknown;
  std::vector<Move> certificate;  // applied to the first word, yields the second
  std::uint64_t states_explored = 0;
  std::string reason;
};

// Cheap invariants that separate orbits: length, alpha, tau, G_s.
inline std::optional<std::string> separating_invariant(const Factorization& s1, const Factorization& s2) {
  if (s1.degree() != s2.degree()) return "degree differs";
  if (s1.length() != s2.length()) return "length differs";
  if (alpha(s1) != alpha(s2)) return "alpha differs";
  if (tau(s1) != tau(s2)) return "tau differs";
  if (s1.degree() <= kClosureMaxDegree && generated_subgroup(s1) != generated_subgroup(s2)) {
    return "generated subgroup differs";
  }
  return std::nullopt;
}

// Decides whether s2 lies in the Hurwitz orbit of s1. Bidirectional BFS,
// always expanding the side with the smaller frontier; "unknown" only when
// limits are hit. A "yes" carries a replay-checked move certificate.
inline Equivalence are_equivalent(const Factorization& s1, const Factorization& s2, const Limits& limits = {}) {
  Equivalence out;
  if (auto why = separating_invariant(s1, s2)) {
    out.verdict = Verdict::no;
    out.reason = *why;
    return out;
  }
  if (s1 == s2) {
    out.verdict = Verdict::yes;
    out.states_explored = 1;
    return out;
  }
  const Alphabet A = Alphabet::covering(s1.degree(), s1.factors());
  const std::vector<Perm> none;
  detail::SearchTree fwd(s1.length()), bwd(s1.length());
  fwd.add_root(detail::encode(A, s1));
  bwd.add_root(detail::encode(A, s2));

  auto finish = [&](const std::vector<std::uint32_t>& path) {
    out.verdict = Verdict::yes;
    for (auto c : path) out.certificate.push_back(detail::code_move(c));
    out.states_explored = fwd.table.size() + bwd.table.size();
    if (apply_moves(s1, out.certificate) != s2) throw Error("internal: equivalence certificate does not replay");
  };

  Limits side = limits;
  while (true) {
    const std::size_t ff = fwd.table.size() - fwd.level_begin, bf = bwd.table.size() - bwd.level_begin;
    if (ff == 0 || bf == 0) {
      out.verdict = Verdict::no;
      out.reason = "orbit exhausted without meeting";
      out.states_explored = fwd.table.size() + bwd.table.size();
      return out;
    }
    const bool forward = ff <= bf;
    detail::SearchTree& me = forward ? fwd : bwd;
    detail::SearchTree& other = forward ? bwd : fwd;
    side.max_states = limits.max_states > other.table.size() ? limits.max_states - other.table.size() : 1;
    std::optional<std::pair<WordTable::Index, WordTable::Index>> meet;  // (index in me, index in other)
    detail::expand_level(A, me, none, side, [&](WordTable::Index i) {
      if (auto j = other.table.find(me.table[i])) {
        meet = std::make_pair(i, *j);
        return true;
      }
      return false;
    });
    if (meet) {
      const auto [i, j] = *meet;
      const WordTable::Index fi = forward ? i : j, bi = forward ? j : i;
      std::vector<std::uint32_t> path = fwd.path_to(fi);
      const auto back = bwd.path_to(bi);
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        path.push_back(detail::move_code(detail::code_move(*it).inverse()));
      }
      finish(path);
      return out;
    }
    if (!me.limit_hit.empty()) {
      out.verdict = Verdict::unknown;
      out.reason = me.limit_hit.starts_with("max_states")
                       ? "limit reached: max_states=" + std::to_string(limits.max_states) + " (both directions)"
                       : "limit reached: " + me.limit_hit;
      out.states_explored = fwd.table.size() + bwd.table.size();
      return out;
    }
  }
}

// Moves taking A.B (A at 1-based offset+1, lengths a and b) to rho(alpha(A))(B).A
inline std::vector<Move> block_pass_right(std::size_t offset, std::size_t a, std::size_t b) {
  std::vector<Move> out;
  for (std::size_t k = a; k >= 1; --k) {
    for (std::size_t t = 0; t < b; ++t) out.push_back({static_cast<int>(offset + k + t), Direction::R});
  }
  return out;
}

// Moves taking A.B to B.rho(alpha(B)^-1)(A)
inline std::vector<Move> block_pass_left(std::size_t offset, std::size_t a, std::size_t b) {
  std::vector<Move> out;
  for (std::size_t k = 1; k <= b; ++k) {
    for (std::size_t t = 0; t < a; ++t) out.push_back({static_cast<int>(offset + a + k - 1 - t), Direction::L});
  }
  return out;
}

inline std::vector<Move> shifted(const std::vector<Move>& moves, std::size_t offset) {
  std::vector<Move> out;
  out.reserve(moves.size());
  for (Move m : moves) out.push_back({m.position + static_cast<int>(offset), m.direction});
  return out;
}

// Decides A.B ~ C.D blockwise: either A~C and B~D, or after passing one
// block across the other. Sub-problems go to are_equivalent; the assembled
// certificate is replayed on the full word. Failure of every route is
// "unknown" (the route list is not exhaustive) unless an invariant separates
// the two words.
inline Equivalence are_equivalent_blocks(const Factorization& a, const Factorization& b, const Factorization& c,
                                         const Factorization& d, const Limits& limits = {}) {
  const Factorization lhs = concat(a, b), rhs = concat(c, d);
  Equivalence out;
  if (auto why = separating_invariant(lhs, rhs)) {
    out.verdict = Verdict::no;
    out.reason = *why;
    return out;
  }
  struct Route {
    std::vector<Move> prefix;
    Factorization first, second;
  };
  std::vector<Route> routes;
  if (a.length() == c.length()) routes.push_back({{}, a, b});
  const Factorization moved_b = rho(alpha(a), b);
  if (moved_b.length() == c.length()) routes.push_back({block_pass_right(0, a.length(), b.length()), moved_b, a});
  const Factorization moved_a = rho(inverse(alpha(b)), a);
  if (b.length() == c.length()) routes.push_back({block_pass_left(0, a.length(), b.length()), b, moved_a});

  std::uint64_t explored = 0;
  std::string reasons;
  for (const Route& r : routes) {
    if (separating_invariant(r.first, c) || separating_invariant(r.second, d)) continue;
    const Equivalence e1 = are_equivalent(r.first, c, limits);
    explored += e1.states_explored;
    if (e1.verdict != Verdict::yes) {
      reasons += (reasons.empty() ? "" : "; ") + std::string(to_string(e1.verdict)) + " on first block";
      continue;
    }
    const Equivalence e2 = are_equivalent(r.second, d, limits);
    explored += e2.states_explored;
    if (e2.verdict != Verdict::yes) {
      reasons += (reasons.empty() ? "" : "; ") + std::string(to_string(e2.verdict)) + " on second block";
      continue;
    }
    out.certificate = r.prefix;
    const auto m1 = e1.certificate;
    const auto m2 = shifted(e2.certificate, c.length());
    out.certificate.insert(out.certificate.end(), m1.begin(), m1.end());
    out.certificate.insert(out.certificate.end(), m2.begin(), m2.end());
    if (apply_moves(lhs, out.certificate) != rhs) throw Error("internal: block certificate does not replay");
    out.verdict = Verdict::yes;
    out.states_explored = explored;
    return out;
  }
  out.verdict = Verdict::unknown;
  out.states_explored = explored;
  out.reason = reasons.empty() ? "no block route applies" : reasons;
  return out;
}

enum class SubgroupConstraint { none, full_group, transitive };

inline const char* to_string(SubgroupConstraint c) {
  switch (c) {
    case SubgroupConstraint::none: return "none";
    case SubgroupConstraint::full_group: return "full_group";
    case SubgroupConstraint::transitive: return "transitive";
  }
  return "none";
}

// Words with fixed type and product, optionally constrained on G_s.
struct FiberSpec {
  int d = 1;
  TypeVector type;
  Perm product;
  SubgroupConstraint constraint = SubgroupConstraint::none;
  // Also identify words conjugate by the centralizer of `product`.
  bool conjugation_quotient = false;
};

namespace detail {

// Generators of the centralizer of p in S_d, greedily picked in one-line
// order; adjacent transpositions when p is central.
inline std::vector<Perm> centralizer_generators(const Perm& p) {
  const int d = p.degree();
  if (p.is_identity() || d <= 2) return adjacent_transpositions(d);
  if (d > kClosureMaxDegree) throw LimitExceeded("centralizer needs d <= " + std::to_string(kClosureMaxDegree));
  std::vector<Perm> cent;
  std::vector<int> pts(static_cast<std::size_t>(d));
  std::iota(pts.begin(), pts.end(), 1);
  do {
    const Perm g = Perm::from_images(pts);
    if (compose(g, p) == compose(p, g)) cent.push_back(g);
  } while (std::next_permutation(pts.begin(), pts.end()));
  std::vector<Perm> gens;
  std::vector<Perm> group{Perm::identity(d)};
  for (const auto& g : cent) {
    if (group.size() == cent.size()) break;
    if (std::binary_search(group.begin(), group.end(), g)) continue;
    gens.push_back(g);
    group = subgroup_closure(d, gens);
  }
  return gens;
}

class SubgroupTester {
 public:
  SubgroupTester(const Alphabet& A, SubgroupConstraint c) : A_(A), c_(c) {}

  bool operator()(WordView w) {
    if (c_ == SubgroupConstraint::none) return true;
    if (!transitive(w)) return false;
    if (c_ == SubgroupConstraint::transitive) return true;
    std::vector<Letter> key(w.begin(), w.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    const std::uint64_t h = hash_word(key);
    auto& bucket = memo_[h];
    for (const auto& [k, v] : bucket)
      if (k == key) return v;
    std::vector<Perm> gens;
    for (Letter a : key) gens.push_back(A_.perm(a));
    const bool full = subgroup_closure(A_.degree(), gens).size() == factorial(A_.degree());
    bucket.emplace_back(std::move(key), full);
    return full;
  }

 private:
  bool transitive(WordView w) const {
    const int d = A_.degree();
    std::uint32_t reached = 1, frontier = 1;
    const std::uint32_t all = (d >= 32) ? ~0u : ((1u << d) - 1);
    while (frontier) {
      std::uint32_t next = 0;
      for (Letter a : w) {
        const auto& img = A_.perm(a).images();
        for (int i = 0; i < d; ++i)
          if (frontier >> i & 1u) next |= 1u << img[static_cast<std::size_t>(i)];
      }
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == all;
  }

  const Alphabet& A_;
  SubgroupConstraint c_;
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::vector<Letter>, bool>>> memo_;
};

inline void check_spec(const FiberSpec& spec) {
  if (spec.product.degree() != spec.d) throw DegreeMismatch(spec.product.degree(), spec.d);
  for (const auto& [c, n] : spec.type.counts()) {
    if (c.degree() != spec.d) throw PreconditionError("class " + c.to_string() + " is not a partition of d");
  }
}

// Lexicographically ordered fiber words (letters of `A`, which must contain
// every class of spec.type).
inline WordTable fiber_table(const FiberSpec& spec, const Alphabet& A, const Limits& limits) {
  check_spec(spec);
  const std::size_t n = static_cast<std::size_t>(spec.type.total());
  WordTable out(n);
  if (parity(spec.product) != spec.type.parity()) return out;
  if (n == 0) {
    if (spec.product.is_identity()) out.insert(std::vector<Letter>{});
    return out;
  }
  const int d = spec.d;
  std::vector<int> need(A.classes().size(), 0);
  for (const auto& [c, k] : spec.type.counts()) {
    auto it = std::lower_bound(A.classes().begin(), A.classes().end(), c);
    if (it == A.classes().end() || *it != c) throw PreconditionError("alphabet lacks class " + c.to_string());
    need[static_cast<std::size_t>(it - A.classes().begin())] = k;
  }
  const auto& target = spec.product.images();

  // Split on the first letter; every worker enumerates its first letters in order.
  std::vector<Letter> firsts;
  for (std::size_t a = 0; a < A.size(); ++a)
    if (need[A.class_index(static_cast<Letter>(a))] > 0) firsts.push_back(static_cast<Letter>(a));

  std::atomic<std::uint64_t> total{0};
  std::atomic<bool> overflow{false};
  const unsigned workers = std::max(1u, limits.workers);
  std::vector<std::vector<Letter>> per_first(firsts.size());

  auto run_first = [&](std::size_t fi) {
    SubgroupTester tester(A, spec.constraint);
    std::vector<int> left = need;
    std::vector<Letter> word(n);
    // prefix[k] = product of word[0..k), as 0-based images
    std::vector<std::array<Perm::Point, kMaxDegree>> prefix(n + 1);
    for (int i = 0; i < d; ++i) prefix[0][static_cast<std::size_t>(i)] = static_cast<Perm::Point>(i);
    auto& sink = per_first[fi];
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (overflow.load(std::memory_order_relaxed)) return;
      if (k + 1 == n) {
        // last letter is forced: prefix * x = product  =>  x = prefix^-1 * product
        std::array<Perm::Point, kMaxDegree> pinv{};
        for (int i = 0; i < d; ++i) pinv[prefix[k][static_cast<std::size_t>(i)]] = static_cast<Perm::Point>(i);
        std::uint64_t key = 0;
        for (int i = 0; i < d; ++i) key = (key << 4) | pinv[target[static_cast<std::size_t>(i)]];
        const auto x = A.find_key(key);
        if (!x || left[A.class_index(*x)] == 0) return;
        if (k == 0 && *x != firsts[fi]) return;
        word[k] = *x;
        if (!tester(word)) return;
        if (total.fetch_add(1, std::memory_order_relaxed) + 1 > limits.max_fiber) {
          overflow = true;
          return;
        }
        sink.insert(sink.end(), word.begin(), word.end());
        return;
      }
      for (std::size_t a = (k == 0 ? firsts[fi] : 0); a < (k == 0 ? firsts[fi] + 1u : A.size()); ++a) {
        const auto ci = A.class_index(static_cast<Letter>(a));
        if (left[ci] == 0) continue;
        --left[ci];
        word[k] = static_cast<Letter>(a);
        const auto& img = A.perm(static_cast<Letter>(a)).images();
        for (int i = 0; i < d; ++i)
          prefix[k + 1][static_cast<std::size_t>(i)] = prefix[k][img[static_cast<std::size_t>(i)]];
        rec(k + 1);
        ++left[ci];
      }
    };
    rec(0);
  };

  parallel_chunks(workers, firsts.size(), [&](std::size_t, std::size_t b, std::size_t e) {
    for (std::size_t fi = b; fi < e; ++fi) run_first(fi);
  });
  if (overflow) throw LimitExceeded("fiber exceeds max_fiber=" + std::to_string(limits.max_fiber));
  out.reserve(total.load());
  for (const auto& chunk : per_first) {
    for (std::size_t off = 0; off < chunk.size(); off += n) out.insert(WordView{chunk.data() + off, n});
  }
  return out;
}

inline Alphabet fiber_alphabet(const FiberSpec& spec) { return Alphabet::of_classes(spec.d, spec.type.classes()); }

}  // namespace detail

// All words of the fiber, in lexicographic order.
inline std::vector<Factorization> enumerate_fiber(const FiberSpec& spec, const Limits& limits = {}) {
  const Alphabet A = detail::fiber_alphabet(spec);
  const WordTable t = detail::fiber_table(spec, A, limits);
  std::vector<Factorization> out;
  out.reserve(t.size());
  for (WordTable::Index i = 0; i < t.size(); ++i) out.push_back(detail::decode(A, t[i]));
  return out;
}

struct FiberOrbits {
  std::uint64_t fiber_size = 0;
  std::uint64_t orbit_count = 0;
  std::vector<Factorization> representatives;  // lexicographically least per orbit, ascending
  std::vector<std::uint64_t> orbit_sizes;      // aligned with representatives
  bool complete = false;
  std::string limit_hit;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::uint32_t{0}); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller index as root, so roots are lexicographic minima.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Orbit blocks of words, each block ascending, blocks ordered by their least word.
using Partition = std::vector<std::vector<Factorization>>;

inline FiberOrbits summarize(const Alphabet& A, const WordTable& fiber, UnionFind& uf, Partition* partition) {
  FiberOrbits r;
  r.fiber_size = fiber.size();
  std::map<std::uint32_t, std::uint64_t> sizes;
  for (std::uint32_t i = 0; i < fiber.size(); ++i) ++sizes[uf.find(i)];
  if (partition) {
    std::map<std::uint32_t, std::size_t> slot;
    for (const auto& [root, n] : sizes) slot.emplace(root, slot.size());
    partition->assign(slot.size(), {});
    for (std::uint32_t i = 0; i < fiber.size(); ++i) (*partition)[slot[uf.find(i)]].push_back(decode(A, fiber[i]));
  }
  r.orbit_count = sizes.size();
  for (const auto& [root, n] : sizes) {
    r.representatives.push_back(decode(A, fiber[root]));
    r.orbit_sizes.push_back(n);
  }
  r.complete = true;
  return r;
}

}  // namespace detail

// Partitions the fiber into Hurwitz orbits by union-find over single-move
// edges (R at every position; L edges are their inverses).
using OrbitPartition = detail::Partition;

// With `partition`, also returns the orbits as word sets.
inline FiberOrbits count_orbits_in_fiber(const FiberSpec& spec, const Limits& limits = {},
                                         OrbitPartition* partition = nullptr) {
  const Alphabet A = detail::fiber_alphabet(spec);
  WordTable fiber;
  try {
    fiber = detail::fiber_table(spec, A, limits);
  } catch (const LimitExceeded& e) {
    FiberOrbits r;
    r.limit_hit = e.what();
    return r;
  }
  const std::size_t n = fiber.width();
  const std::vector<Perm> gens = spec.conjugation_quotient ? detail::centralizer_generators(spec.product) : std::vector<Perm>{};
  // R moves plus conjugation edges.
  std::vector<std::uint32_t> codes;
  for (std::size_t i = 0; i + 1 < n; ++i) codes.push_back(static_cast<std::uint32_t>(2 * i));
  for (std::size_t g = 0; g < gens.size(); ++g) codes.push_back(static_cast<std::uint32_t>((n >= 2 ? 2 * (n - 1) : 0) + g));

  detail::UnionFind uf(fiber.size());
  constexpr std::size_t kBlock = std::size_t{1} << 16;
  std::vector<std::uint32_t> targets;
  for (std::size_t lo = 0; lo < fiber.size(); lo += kBlock) {
    const std::size_t hi = std::min(fiber.size(), lo + kBlock);
    targets.assign((hi - lo) * codes.size(), 0);
    parallel_chunks(limits.workers, hi - lo, [&](std::size_t, std::size_t b, std::size_t e) {
      std::vector<Letter> tmp(n);
      for (std::size_t i = lo + b; i < lo + e; ++i) {
        for (std::size_t c = 0; c < codes.size(); ++c) {
          detail::apply_edge(A, fiber[static_cast<WordTable::Index>(i)], tmp, codes[c], gens);
          const auto j = fiber.find(tmp);
          if (!j) throw Error("internal: move left the fiber");
          targets[(i - lo) * codes.size() + c] = *j;
        }
      }
    });
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t c = 0; c < codes.size(); ++c)
        uf.unite(static_cast<std::uint32_t>(i), targets[(i - lo) * codes.size() + c]);
  }
  return detail::summarize(A, fiber, uf, partition);
}

// Same partition by a different route: repeated full orbit enumerations,
// each started from the least word not yet covered.
inline FiberOrbits count_orbits_by_sweeps(const FiberSpec& spec, const Limits& limits = {},
                                          OrbitPartition* partition = nullptr) {
  const Alphabet A = detail::fiber_alphabet(spec);
  WordTable fiber;
  try {
    fiber = detail::fiber_table(spec, A, limits);
  } catch (const LimitExceeded& e) {
    FiberOrbits r;
    r.limit_hit = e.what();
    return r;
  }
  const std::vector<Perm> gens = spec.conjugation_quotient ? detail::centralizer_generators(spec.product) : std::vector<Perm>{};
  std::vector<bool> covered(fiber.size(), false);
  FiberOrbits r;
  r.fiber_size = fiber.size();
  for (WordTable::Index i = 0; i < fiber.size(); ++i) {
    if (covered[i]) continue;
    const detail::SearchTree tree = detail::explore(A, fiber[i], gens, limits);
    if (!tree.complete) {
      r.limit_hit = tree.limit_hit;
      r.complete = false;
      return r;
    }
    std::vector<Factorization> block;
    for (WordTable::Index k = 0; k < tree.table.size(); ++k) {
      const auto j = fiber.find(tree.table[k]);
      if (!j) throw Error("internal: orbit left the fiber");
      covered[*j] = true;
      if (partition) block.push_back(detail::decode(A, tree.table[k]));
    }
    if (partition) {
      std::sort(block.begin(), block.end());
      partition->push_back(std::move(block));
    }
    ++r.orbit_count;
    r.representatives.push_back(detail::decode(A, fiber[i]));
    r.orbit_sizes.push_back(tree.table.size());
  }
  r.complete = true;
  return r;
}

struct ScanRow {
  int n = 0;
  std::uint64_t fiber_size = 0;
  std::uint64_t orbits = 0;
  bool complete = false;
  std::string limit_hit;
};

// Orbit counts of the fibers {type n*c, product, G_s = S_d} for n in [from, to].
inline std::vector<ScanRow> stable_length_scan(int d, const ClassLabel& c, const Perm& product, int n_from, int n_to,
                                               const Limits& limits = {}) {
  if (c.is_identity()) throw PreconditionError("scan needs a non-identity class");
  if (n_from < 1 || n_to < n_from) throw PreconditionError("bad scan range");
  std::vector<ScanRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    FiberSpec spec;
    spec.d = d;
    spec.type.add(c, n);
    spec.product = product;
    spec.constraint = SubgroupConstraint::full_group;
    const FiberOrbits fo = count_orbits_in_fiber(spec, limits);
    rows.push_back({n, fo.fiber_size, fo.orbit_count, fo.complete, fo.limit_hit});
  }
  return rows;
}

}  // namespace hurwitz
