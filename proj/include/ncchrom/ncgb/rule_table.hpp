#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncchrom/polynomial.hpp"

namespace ncchrom {

/// One rewriting step a*lead*b -> a*tail*b applied with a scalar multiplier.
struct ReductionStep {
  std::size_t rule = 0;
  Word left;
  Word right;
  Scalar coeff;
};

namespace detail {

/// Trie over rule leads, answering "which rule lead occurs in this word".
class LeadIndex {
 public:
  struct Match {
    std::size_t rule;
    std::size_t position;
  };

  LeadIndex() : nodes_(1) {}

  void insert(const Word& lead, std::size_t rule) {
    std::size_t node = 0;
    for (Letter l : lead) node = child_or_create(node, l);
    auto& r = nodes_[node].rules;
    r.insert(std::upper_bound(r.begin(), r.end(), rule), rule);
  }

  void erase(const Word& lead, std::size_t rule) {
    std::size_t node = 0;
    for (Letter l : lead) {
      node = child(node, l);
      if (node == kNone) return;
    }
    auto& r = nodes_[node].rules;
    r.erase(std::remove(r.begin(), r.end(), rule), r.end());
  }

  /// Earliest-indexed rule whose lead occurs in w, at its leftmost position.
  std::optional<Match> find(const Word& w) const {
    std::optional<Match> best;
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::size_t node = 0;
      for (std::size_t j = start; j < w.size(); ++j) {
        node = child(node, w[j]);
        if (node == kNone) break;
        const auto& r = nodes_[node].rules;
        if (!r.empty() && (!best || r.front() < best->rule)) best = Match{r.front(), start};
      }
    }
    // the empty lead (constant rule) matches everything at position 0
    if (!nodes_[0].rules.empty() && (!best || nodes_[0].rules.front() < best->rule))
      best = Match{nodes_[0].rules.front(), 0};
    return best;
  }

  bool matches_any(const Word& w) const {
    if (!nodes_[0].rules.empty()) return true;
    for (std::size_t start = 0; start < w.size(); ++start) {
      std::size_t node = 0;
      for (std::size_t j = start; j < w.size(); ++j) {
        node = child(node, w[j]);
        if (node == kNone) break;
        if (!nodes_[node].rules.empty()) return true;
      }
    }
    return false;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    std::vector<std::pair<Letter, std::size_t>> children;  // sorted by letter
    std::vector<std::size_t> rules;                         // sorted ascending
  };

  std::size_t child(std::size_t node, Letter l) const {
    const auto& c = nodes_[node].children;
    auto it = std::lower_bound(c.begin(), c.end(), l,
                               [](const auto& e, Letter x) { return e.first < x; });
    return (it != c.end() && it->first == l) ? it->second : kNone;
  }

  std::size_t child_or_create(std::size_t node, Letter l) {
    auto found = child(node, l);
    if (found != kNone) return found;
    const std::size_t fresh = nodes_.size();
    nodes_.emplace_back();
    auto& c = nodes_[node].children;
    auto it = std::lower_bound(c.begin(), c.end(), l,
                               [](const auto& e, Letter x) { return e.first < x; });
    c.insert(it, {l, fresh});
    return fresh;
  }

  std::vector<Node> nodes_;
};

/// Monic rewrite rule in default-order letter space: lead -> tail.
struct Rule {
  Polynomial poly;
  Word lead;
  Polynomial tail;  // lead - poly
};

inline Rule make_rule(const Polynomial& monic) {
  Rule r;
  r.poly = monic;
  r.lead = monic.front().word;
  r.tail = Polynomial::monomial(r.lead) - monic;
  return r;
}

/// Growable rule collection with tombstones; rule ids are never reused so
/// that ids double as insertion age.
class RuleTable {
 public:
  std::size_t add(const Polynomial& monic) {
    const std::size_t id = rules_.size();
    rules_.push_back(make_rule(monic));
    alive_.push_back(1);
    index_.insert(rules_.back().lead, id);
    ++alive_count_;
    return id;
  }

  void kill(std::size_t id) {
    if (!alive_[id]) return;
    alive_[id] = 0;
    index_.erase(rules_[id].lead, id);
    --alive_count_;
  }

  std::size_t size() const { return rules_.size(); }
  std::size_t alive_count() const { return alive_count_; }
  bool alive(std::size_t id) const { return alive_[id] != 0; }
  const Rule& rule(std::size_t id) const { return rules_[id]; }

  bool reducible(const Word& w) const { return index_.matches_any(w); }
  std::optional<LeadIndex::Match> match(const Word& w) const { return index_.find(w); }

  /// Full normal form: the largest reducible word is rewritten first, using
  /// the leftmost occurrence of the earliest-indexed matching rule.
  Polynomial reduce(const Polynomial& p, std::vector<ReductionStep>* trace = nullptr) const {
    if (p.is_zero() || alive_count_ == 0) return p;
    std::map<Word, Scalar, std::greater<>> work;
    for (const auto& t : p.terms()) work.emplace_hint(work.end(), t.word, t.coeff);
    std::vector<Term> out;
    while (!work.empty()) {
      auto it = work.begin();
      const auto m = index_.find(it->first);
      if (!m) {
        out.push_back({it->first, std::move(it->second)});
        work.erase(it);
        continue;
      }
      const Rule& r = rules_[m->rule];
      const Word left = it->first.prefix(m->position);
      const Word right = it->first.suffix(it->first.size() - m->position - r.lead.size());
      const Scalar c = std::move(it->second);
      work.erase(it);
      if (trace) trace->push_back({m->rule, left, right, c});
      for (const auto& t : r.tail.terms()) {
        auto [jt, inserted] = work.try_emplace(concat(left, t.word, right), 0);
        jt->second += c * t.coeff;
        if (jt->second == 0) work.erase(jt);
      }
    }
    return Polynomial::from_sorted_terms(std::move(out));
  }

  std::vector<std::size_t> alive_ids() const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (alive_[i]) ids.push_back(i);
    return ids;
  }

 private:
  std::vector<Rule> rules_;
  std::vector<char> alive_;
  std::size_t alive_count_ = 0;
  LeadIndex index_;
};

}  // namespace detail
}  // namespace ncchrom
