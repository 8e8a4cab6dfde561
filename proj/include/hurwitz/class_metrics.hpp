#pragma once

// Per-class constants: element order n_C, class size k_C, fixed points f_C,
// the minimal C-word length m_C for the transposition (1,2), and the
// stability bound 3^{d-3}(2d-1)(d-1) m_C + n_C k_C + 1.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

inline constexpr int kDefaultWordDepth = 8;

struct MinWord {
  enum class Status { found, not_applicable, limit_exceeded };

  Status status = Status::limit_exceeded;
  int length = 0;             // valid when found
  std::vector<Perm> witness;  // witness[0] * ... * witness[length-1] = target
  int depth_limit = 0;
  std::string reason;

  bool found() const { return status == Status::found; }
};

namespace detail {

// Least m with target in C^m, breadth-first over the layers C^1, C^2, ...
// Each layer keeps one predecessor per element, so the witness is the first
// path found in the order of `letters`.
inline MinWord shortest_product(int d, const std::vector<Perm>& letters, const Perm& target, int depth_limit) {
  MinWord out;
  out.depth_limit = depth_limit;
  struct Step {
    std::uint64_t parent;
    std::uint32_t letter;
  };
  std::vector<std::unordered_map<std::uint64_t, Step>> layers;
  std::vector<Perm> frontier{Perm::identity(d)};
  std::unordered_map<std::uint64_t, Perm> by_key;
  for (int depth = 1; depth <= depth_limit; ++depth) {
    std::unordered_map<std::uint64_t, Step> layer;
    std::vector<Perm> next;
    for (const auto& p : frontier) {
      for (std::uint32_t li = 0; li < letters.size(); ++li) {
        Perm q = compose(p, letters[li]);
        if (layer.emplace(q.key(), Step{p.key(), li}).second) next.push_back(std::move(q));
      }
    }
    layers.push_back(std::move(layer));
    if (layers.back().contains(target.key())) {
      out.status = MinWord::Status::found;
      out.length = depth;
      std::uint64_t k = target.key();
      std::vector<Perm> rev;
      for (int l = depth - 1; l >= 0; --l) {
        const Step s = layers[static_cast<std::size_t>(l)].at(k);
        rev.push_back(letters[s.letter]);
        k = s.parent;
      }
      out.witness.assign(rev.rbegin(), rev.rend());
      return out;
    }
    frontier = std::move(next);
  }
  out.status = MinWord::Status::limit_exceeded;
  out.reason = "no word of length <= " + std::to_string(depth_limit);
  return out;
}

}  // namespace detail

// m_C: least number of elements of c whose product is (1,2).
inline MinWord min_word_to_transposition(int d, const ClassLabel& c, int depth_limit = kDefaultWordDepth) {
  if (d < 2) throw PreconditionError("need d >= 2 for the transposition (1,2)");
  if (c.degree() != d) throw PreconditionError("class is not a partition of d");
  if (c.parity() == Parity::even) {
    MinWord out;
    out.status = MinWord::Status::not_applicable;
    out.depth_limit = depth_limit;
    out.reason = "even class: products are even, (1,2) is odd";
    return out;
  }
  return detail::shortest_product(d, class_elements(d, c), Perm::transposition(d, 1, 2), depth_limit);
}

// Same, restricted to elements of c that fix both points of `fixed`.
inline MinWord min_word_constrained(int d, const ClassLabel& c, std::pair<int, int> fixed = {3, 4},
                                    int depth_limit = kDefaultWordDepth) {
  if (c.degree() != d) throw PreconditionError("class is not a partition of d");
  if (c.fixed_points() < 2) {
    throw PreconditionError("f_C = " + std::to_string(c.fixed_points()) + " < 2: no element of C fixes two points");
  }
  const auto [p, q] = fixed;
  if (p == q || p < 1 || q < 1 || p > d || q > d || p <= 2 || q <= 2) {
    throw PreconditionError("fixed points must be two distinct points outside {1,2}");
  }
  if (c.parity() == Parity::even) {
    MinWord out;
    out.status = MinWord::Status::not_applicable;
    out.depth_limit = depth_limit;
    out.reason = "even class: products are even, (1,2) is odd";
    return out;
  }
  std::vector<Perm> letters;
  for (auto& e : class_elements(d, c)) {
    if (e(p) == p && e(q) == q) letters.push_back(std::move(e));
  }
  return detail::shortest_product(d, letters, Perm::transposition(d, 1, 2), depth_limit);
}

// Whether the elements of c generate S_d, by explicit closure.
inline bool generates_full_group(int d, const ClassLabel& c) {
  if (d > kClosureMaxDegree) {
    throw LimitExceeded("generates_full_group supports d <= " + std::to_string(kClosureMaxDegree));
  }
  return subgroup_closure(d, class_elements(d, c)).size() == factorial(d);
}

// 3^{d-3}(2d-1)(d-1) m
inline std::uint64_t h_C_length(int d, std::uint64_t m) {
  if (d < 3) throw PreconditionError("h_C needs d >= 3");
  std::uint64_t p = 1;
  for (int i = 0; i < d - 3; ++i) p *= 3;
  return p * static_cast<std::uint64_t>(2 * d - 1) * static_cast<std::uint64_t>(d - 1) * m;
}

// 3^{k-4}(2d-1) m
inline std::uint64_t y_length(int d, int k, std::uint64_t m) {
  if (k < 4) throw PreconditionError("y_k needs k >= 4");
  std::uint64_t p = 1;
  for (int i = 0; i < k - 4; ++i) p *= 3;
  return p * static_cast<std::uint64_t>(2 * d - 1) * m;
}

struct ClassMetrics {
  int d = 0;
  ClassLabel label;
  std::uint64_t n_C = 0;
  std::uint64_t k_C = 0;
  int f_C = 0;
  Parity parity = Parity::even;
  MinWord m_C;
  std::optional<MinWord> m_C_constrained;  // absent when f_C < 2
  bool generates_full = false;
};

inline ClassMetrics compute_class_metrics(int d, const ClassLabel& c, int depth_limit = kDefaultWordDepth) {
  if (c.degree() != d) throw PreconditionError("class " + c.to_string() + " is not a partition of " + std::to_string(d));
  ClassMetrics m;
  m.d = d;
  m.label = c;
  m.n_C = c.order();
  m.k_C = c.class_size();
  m.f_C = c.fixed_points();
  m.parity = c.parity();
  if (d >= 2) {
    m.m_C = min_word_to_transposition(d, c, depth_limit);
  } else {
    m.m_C.status = MinWord::Status::not_applicable;
    m.m_C.reason = "d < 2";
  }
  if (m.f_C >= 2 && d >= 4) m.m_C_constrained = min_word_constrained(d, c, {3, 4}, depth_limit);
  m.generates_full = d <= kClosureMaxDegree ? generates_full_group(d, c) : false;
  return m;
}

// 3^{d-3}(2d-1)(d-1) m + n_C k_C + 1 with m = m_C (or an explicit m).
inline std::uint64_t bound_N_C(const ClassMetrics& m, std::optional<std::uint64_t> m_override = std::nullopt) {
  if (m.parity != Parity::odd) throw PreconditionError("bound needs an odd class");
  if (m.f_C < 2) throw PreconditionError("bound needs f_C >= 2, got f_C = " + std::to_string(m.f_C));
  if (!m_override && !m.m_C.found()) throw PreconditionError("m_C unknown: " + m.m_C.reason);
  const std::uint64_t mc = m_override ? *m_override : static_cast<std::uint64_t>(m.m_C.length);
  return h_C_length(m.d, mc) + m.n_C * m.k_C + 1;
}

}  // namespace hurwitz
