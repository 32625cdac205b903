#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncchrom/error.hpp"

namespace ncchrom {

// Dense generator id: vertex * outputs + output.
using Letter = std::uint16_t;

struct GeneratorId {
  std::size_t vertex = 0;
  std::size_t output = 0;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

/// Generator universe x[v,a] for v < inputs, a < outputs.
struct GeneratorSpace {
  std::size_t inputs = 0;
  std::size_t outputs = 0;

  std::size_t size() const { return inputs * outputs; }

  Letter letter(std::size_t vertex, std::size_t output) const {
    if (vertex >= inputs || output >= outputs)
      throw Error("generator x[" + std::to_string(vertex) + "," + std::to_string(output) +
                  "] outside " + std::to_string(inputs) + "x" + std::to_string(outputs));
    return static_cast<Letter>(vertex * outputs + output);
  }
  Letter letter(GeneratorId g) const { return letter(g.vertex, g.output); }
  GeneratorId generator(Letter l) const { return {l / outputs, l % outputs}; }

  friend bool operator==(const GeneratorSpace&, const GeneratorSpace&) = default;
};

/// A monomial of the free algebra: a finite sequence of letters. The empty
/// word is the identity.
class Word {
 public:
  using Storage = boost::container::small_vector<Letter, 8>;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::span<const Letter> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const { return letters_.size(); }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return {letters_.data(), letters_.size()}; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters().subspan(pos, len));
  }
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  bool occurs_at(const Word& sub, std::size_t pos) const {
    if (pos + sub.size() > size()) return false;
    return std::equal(sub.letters_.begin(), sub.letters_.end(), letters_.begin() + pos);
  }

  std::optional<std::size_t> find(const Word& sub, std::size_t from = 0) const {
    if (sub.size() > size()) return std::nullopt;
    for (std::size_t pos = from; pos + sub.size() <= size(); ++pos)
      if (occurs_at(sub, pos)) return pos;
    return std::nullopt;
  }
  bool contains(const Word& sub) const { return find(sub).has_value(); }

  Word& operator*=(const Word& rhs) {
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

  // Degree-lexicographic comparison on raw letter ids.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }

 private:
  Storage letters_;
};

inline Word concat(const Word& a, const Word& b, const Word& c) {
  Word out;
  for (Letter l : a) out.push_back(l);
  for (Letter l : b) out.push_back(l);
  for (Letter l : c) out.push_back(l);
  return out;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull ^ w.size();
    for (Letter l : w) h = (h ^ l) * 1099511628211ull;
    return h;
  }
};

/// Graded lexicographic order under a generator ranking. The default ranking
/// is the identity on dense ids, i.e. (vertex, output) lexicographic.
class DegLexOrder {
 public:
  DegLexOrder() = default;

  /// ranking[i] is the rank of letter i; must be a permutation of 0..n-1.
  explicit DegLexOrder(std::vector<Letter> ranking) : rank_(std::move(ranking)) {
    std::vector<bool> seen(rank_.size(), false);
    for (Letter r : rank_) {
      if (r >= rank_.size() || seen[r]) throw Error("generator ranking is not a permutation");
      seen[r] = true;
    }
    bool identity = true;
    for (std::size_t i = 0; i < rank_.size(); ++i) identity = identity && rank_[i] == i;
    if (identity) {
      rank_.clear();
      return;
    }
    inverse_.resize(rank_.size());
    for (std::size_t i = 0; i < rank_.size(); ++i) inverse_[rank_[i]] = static_cast<Letter>(i);
  }

  bool is_default() const { return rank_.empty(); }
  const std::vector<Letter>& ranking() const { return rank_; }

  Letter rank(Letter l) const { return rank_.empty() ? l : rank_.at(l); }

  std::strong_ordering compare(const Word& u, const Word& w) const {
    if (rank_.empty()) return u <=> w;
    if (u.size() != w.size()) return u.size() <=> w.size();
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != w[i]) return rank(u[i]) <=> rank(w[i]);
    return std::strong_ordering::equal;
  }

  bool less(const Word& u, const Word& w) const { return compare(u, w) < 0; }

  /// Letter relabeling taking this order to the default order.
  Word to_rank_space(const Word& w) const {
    if (rank_.empty()) return w;
    Word out;
    for (Letter l : w) out.push_back(rank_.at(l));
    return out;
  }
  Word from_rank_space(const Word& w) const {
    if (rank_.empty()) return w;
    Word out;
    for (Letter l : w) out.push_back(inverse_.at(l));
    return out;
  }

  friend bool operator==(const DegLexOrder& a, const DegLexOrder& b) { return a.rank_ == b.rank_; }

 private:
  std::vector<Letter> rank_;
  std::vector<Letter> inverse_;
};

inline std::strong_ordering word_compare(const DegLexOrder& order, const Word& u, const Word& w) {
  return order.compare(u, w);
}

}  // namespace ncchrom
