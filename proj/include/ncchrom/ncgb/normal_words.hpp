#pragma once

#include <gmpxx.h>

#include <deque>
#include <string>
#include <vector>

#include "ncchrom/ncgb/basis.hpp"

namespace ncchrom {

namespace detail {

/// Aho-Corasick automaton over the rule leads. A word is normal iff its run
/// never enters a dead state.
class LeadAutomaton {
 public:
  explicit LeadAutomaton(const GroebnerBasis& basis) : alphabet_(basis.space().size()) {
    new_state();
    for (const auto& r : basis.rules()) {
      if (r.lead.empty()) {
        dead_[0] = 1;
        continue;
      }
      std::size_t s = 0;
      for (Letter l : r.lead) {
        if (l >= alphabet_) throw Error("rule lead uses a letter outside the generator space");
        if (next_[s * alphabet_ + l] == kNone) {
          const std::size_t fresh = new_state();
          next_[s * alphabet_ + l] = fresh;
        }
        s = next_[s * alphabet_ + l];
      }
      dead_[s] = 1;
    }
    // breadth-first failure links, completing the transition table
    std::vector<std::size_t> fail(size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t l = 0; l < alphabet_; ++l) {
      auto& t = next_[l];
      if (t == kNone) {
        t = 0;
      } else {
        fail[t] = 0;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      if (dead_[fail[s]]) dead_[s] = 1;
      for (std::size_t l = 0; l < alphabet_; ++l) {
        auto& t = next_[s * alphabet_ + l];
        if (t == kNone) {
          t = next_[fail[s] * alphabet_ + l];
        } else {
          fail[t] = next_[fail[s] * alphabet_ + l];
          queue.push_back(t);
        }
      }
    }
  }

  std::size_t size() const { return dead_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  bool dead(std::size_t s) const { return dead_[s] != 0; }
  std::size_t next(std::size_t s, std::size_t l) const { return next_[s * alphabet_ + l]; }

  /// A cycle among live states reachable from the start means arbitrarily
  /// long normal words exist.
  bool has_live_cycle() const {
    if (dead(0)) return false;
    std::vector<char> color(size(), 0);  // 0 new, 1 on stack, 2 done
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    color[0] = 1;
    while (!stack.empty()) {
      auto& [s, l] = stack.back();
      if (l == alphabet_) {
        color[s] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t t = next(s, l++);
      if (dead(t)) continue;
      if (color[t] == 1) return true;
      if (color[t] == 0) {
        color[t] = 1;
        stack.push_back({t, 0});
      }
    }
    return false;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t new_state() {
    next_.resize(next_.size() + alphabet_, kNone);
    dead_.push_back(0);
    return dead_.size() - 1;
  }

  std::size_t alphabet_;
  std::vector<std::size_t> next_;
  std::vector<char> dead_;
};

}  // namespace detail

struct NormalWordCounts {
  std::vector<mpz_class> per_length;  // index = word length
  bool closed = false;                // some length had no normal words
  bool advisory = false;              // basis not complete

  mpz_class total() const {
    mpz_class t = 0;
    for (const auto& c : per_length) t += c;
    return t;
  }
};

/// Number of normal words of each length up to max_length (stopping early
/// once a length has none).
inline NormalWordCounts normal_words(const GroebnerBasis& basis, std::size_t max_length) {
  const detail::LeadAutomaton automaton(basis);
  NormalWordCounts out;
  out.advisory = !basis.status().is_complete();
  std::vector<mpz_class> current(automaton.size(), 0);
  if (!automaton.dead(0)) current[0] = 1;
  for (std::size_t len = 0;; ++len) {
    mpz_class count = 0;
    for (const auto& c : current) count += c;
    out.per_length.push_back(count);
    if (count == 0) {
      out.closed = true;
      break;
    }
    if (len == max_length) break;
    std::vector<mpz_class> next(automaton.size(), 0);
    for (std::size_t s = 0; s < automaton.size(); ++s) {
      if (current[s] == 0) continue;
      for (std::size_t l = 0; l < automaton.alphabet(); ++l) {
        const std::size_t t = automaton.next(s, l);
        if (!automaton.dead(t)) next[t] += current[s];
      }
    }
    current = std::move(next);
  }
  return out;
}

/// Explicit list of normal words up to max_length by breadth-first
/// extension. Throws if more than `cap` words would be produced.
inline std::vector<Word> enumerate_normal_words(const GroebnerBasis& basis, std::size_t max_length,
                                                std::size_t cap = 1'000'000) {
  std::vector<Word> out;
  if (basis.reducible(Word{})) return out;
  out.push_back(Word{});
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::size_t l = 0; l < basis.space().size(); ++l) {
        Word w = out[i];
        w.push_back(static_cast<Letter>(l));
        // the prefix is normal, so only suffixes can newly match a lead
        bool normal = true;
        for (std::size_t k = 1; k <= w.size() && normal; ++k) normal = !basis.reducible(w.suffix(k));
        if (!normal) continue;
        if (out.size() >= cap) throw Error("normal word enumeration exceeds cap");
        out.push_back(std::move(w));
      }
    }
    if (out.size() == layer_end) break;
    layer_begin = layer_end;
  }
  return out;
}

struct QuotientDim {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  mpz_class count = 0;         // for finite
  std::size_t max_length = 0;  // for unknown: the length budget reached

  std::string to_string() const {
    switch (kind) {
      case Kind::finite: return "finite(" + count.get_str() + ")";
      case Kind::infinite: return "infinite";
      case Kind::unknown: return "unknown(" + std::to_string(max_length) + ")";
    }
    return "?";
  }
  friend bool operator==(const QuotientDim&, const QuotientDim&) = default;
};

inline QuotientDim quotient_dimension(const GroebnerBasis& basis, std::size_t max_length) {
  if (contains_unit(basis)) return {QuotientDim::Kind::finite, 0, 0};
  if (!basis.status().is_complete()) return {QuotientDim::Kind::unknown, 0, max_length};
  const detail::LeadAutomaton automaton(basis);
  if (automaton.has_live_cycle()) return {QuotientDim::Kind::infinite, 0, 0};
  const auto counts = normal_words(basis, max_length);
  if (!counts.closed) return {QuotientDim::Kind::unknown, 0, max_length};
  return {QuotientDim::Kind::finite, counts.total(), 0};
}

}  // namespace ncchrom
