#pragma once

// Deduplicating store of fixed-width letter words.
//
// Words live back to back in one arena; an open-addressing table of arena
// indices gives O(1) insert/find. Hash hits are confirmed by full comparison.

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hurwitz/alphabet.hpp"
#include "hurwitz/error.hpp"

namespace hurwitz {

using WordView = std::span<const Letter>;

inline std::uint64_t hash_word(WordView w) {
  // FNV-1a over letters, then a murmur-style finalizer.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Letter a : w) {
    h ^= a;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

class WordTable {
 public:
  using Index = std::uint32_t;
  static constexpr Index kNone = std::numeric_limits<Index>::max();

  explicit WordTable(std::size_t width = 0) : width_(width) { slots_.assign(16, kNone); }

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  WordView operator[](Index i) const {
    return {arena_.data() + std::size_t{i} * width_, width_};
  }

  // Returns the index of w and whether it was newly added.
  std::pair<Index, bool> insert(WordView w) {
    if (w.size() != width_) throw PreconditionError("word width mismatch in WordTable");
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t slot = probe(w, hash_word(w));
    if (slots_[slot] != kNone) return {slots_[slot], false};
    if (count_ >= kNone - 1) throw LimitExceeded("WordTable index space exhausted");
    const auto idx = static_cast<Index>(count_);
    if (!arena_.empty() && w.data() >= arena_.data() && w.data() < arena_.data() + arena_.size()) {
      const std::vector<Letter> copy(w.begin(), w.end());
      arena_.insert(arena_.end(), copy.begin(), copy.end());
    } else {
      arena_.insert(arena_.end(), w.begin(), w.end());
    }
    slots_[slot] = idx;
    ++count_;
    return {idx, true};
  }

  std::optional<Index> find(WordView w) const {
    if (w.size() != width_) return std::nullopt;
    const std::size_t slot = probe(w, hash_word(w));
    if (slots_[slot] == kNone) return std::nullopt;
    return slots_[slot];
  }

  bool contains(WordView w) const { return find(w).has_value(); }

  std::size_t bytes() const {
    return arena_.capacity() * sizeof(Letter) + slots_.capacity() * sizeof(Index);
  }

  void reserve(std::size_t n) {
    arena_.reserve(n * width_);
    while (n * 2 > slots_.size()) grow();
  }

 private:
  std::size_t probe(WordView w, std::uint64_t h) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t slot = static_cast<std::size_t>(h) & mask;
    while (slots_[slot] != kNone) {
      const WordView other = (*this)[slots_[slot]];
      if (std::equal(w.begin(), w.end(), other.begin())) return slot;
      slot = (slot + 1) & mask;
    }
    return slot;
  }

  void grow() {
    std::vector<Index> old = std::move(slots_);
    slots_.assign(old.size() * 2, kNone);
    const std::size_t mask = slots_.size() - 1;
    for (Index idx : old) {
      if (idx == kNone) continue;
      std::size_t slot = static_cast<std::size_t>(hash_word((*this)[idx])) & mask;
      while (slots_[slot] != kNone) slot = (slot + 1) & mask;
      slots_[slot] = idx;
    }
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Letter> arena_;
  std::vector<Index> slots_;
};

}  // namespace hurwitz
