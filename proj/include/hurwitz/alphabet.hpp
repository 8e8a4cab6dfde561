#pragma once

// Letter encoding for the search engine.
//
// An Alphabet is a conjugation-closed set of non-identity permutations of one
// degree (a union of conjugacy classes). Letters are numbered in increasing
// one-line order, so comparing letter sequences compares words
// lexicographically by one-line notation.

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

using Letter = std::uint16_t;

class Alphabet {
 public:
  // Conjugation tables are materialized up to this many letters.
  static constexpr std::size_t kTableLetters = 2048;

  Alphabet() = default;

  // The union of the given classes of S_d (identity class is ignored).
  static Alphabet of_classes(int degree, const std::vector<ClassLabel>& classes,
                             std::uint64_t class_limit = kDefaultClassLimit) {
    std::set<ClassLabel> uniq(classes.begin(), classes.end());
    std::vector<Perm> perms;
    for (const auto& c : uniq) {
      if (c.is_identity()) continue;
      auto elems = class_elements(degree, c, class_limit);
      perms.insert(perms.end(), elems.begin(), elems.end());
    }
    return Alphabet(degree, std::move(perms));
  }

  // The classes of every given permutation.
  static Alphabet covering(int degree, const std::vector<Perm>& perms,
                           std::uint64_t class_limit = kDefaultClassLimit) {
    std::vector<ClassLabel> cls;
    for (const auto& p : perms) cls.push_back(class_of(p));
    return of_classes(degree, cls, class_limit);
  }

  int degree() const { return degree_; }
  std::size_t size() const { return letters_.size(); }
  const Perm& perm(Letter a) const { return letters_[a]; }
  const std::vector<Perm>& perms() const { return letters_; }

  std::optional<Letter> find(const Perm& p) const {
    auto it = index_.find(p.key());
    if (p.degree() != degree_ || it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Lookup by Perm::key().
  std::optional<Letter> find_key(std::uint64_t key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Letter letter(const Perm& p) const {
    auto l = find(p);
    if (!l) throw PreconditionError(to_cycle_string(p) + " is not in the alphabet");
    return *l;
  }

  Letter inv(Letter a) const { return inverse_[a]; }
  const ClassLabel& class_label(Letter a) const { return class_labels_[class_index_[a]]; }
  // Index into classes(), ordered as the sorted distinct labels.
  std::size_t class_index(Letter a) const { return class_index_[a]; }
  const std::vector<ClassLabel>& classes() const { return class_labels_; }

  // a * b * a^-1
  Letter conj(Letter a, Letter b) const {
    if (!conj_.empty()) return conj_[std::size_t{a} * letters_.size() + b];
    return letter(hurwitz::conj(letters_[a], letters_[b]));
  }

  // g * a * g^-1 for an arbitrary g in S_d.
  Letter conj_by(const Perm& g, Letter a) const { return letter(hurwitz::conj(g, letters_[a])); }

 private:
  Alphabet(int degree, std::vector<Perm> perms) : degree_(degree), letters_(std::move(perms)) {
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (letters_.size() > 0xFFFF) throw LimitExceeded("alphabet exceeds 65535 letters");
    for (std::size_t i = 0; i < letters_.size(); ++i) index_.emplace(letters_[i].key(), static_cast<Letter>(i));
    inverse_.resize(letters_.size());
    class_index_.resize(letters_.size());
    std::set<ClassLabel> labels;
    for (const auto& p : letters_) labels.insert(class_of(p));
    class_labels_.assign(labels.begin(), labels.end());
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      inverse_[i] = letter(inverse(letters_[i]));
      const auto lab = class_of(letters_[i]);
      class_index_[i] = static_cast<std::size_t>(
          std::lower_bound(class_labels_.begin(), class_labels_.end(), lab) - class_labels_.begin());
    }
    if (letters_.size() <= kTableLetters) {
      const std::size_t n = letters_.size();
      conj_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        const Perm ainv = inverse(letters_[a]);
        for (std::size_t b = 0; b < n; ++b) {
          conj_[a * n + b] = letter(compose(compose(letters_[a], letters_[b]), ainv));
        }
      }
    }
  }

  int degree_ = 0;
  std::vector<Perm> letters_;
  std::unordered_map<std::uint64_t, Letter> index_;
  std::vector<Letter> inverse_;
  std::vector<std::size_t> class_index_;
  std::vector<ClassLabel> class_labels_;
  std::vector<Letter> conj_;
};

}  // namespace hurwitz
