#pragma once

#include <algorithm>
#include <queue>
#include <span>
#include <thread>
#include <tuple>
#include <vector>

#include "ncchrom/ncgb/basis.hpp"

namespace ncchrom {

struct CompletionOptions {
  std::size_t max_degree = 12;
  unsigned threads = 1;
  // Pairs of equal lcm degree reduced together against one snapshot. Fixed
  // independently of `threads` so that runs are identical at any setting.
  std::size_t batch_size = 64;
};

struct CompletionStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t rules_inserted = 0;
  std::size_t rules_retired = 0;
  std::size_t deferred_pairs = 0;
  std::size_t max_lcm_degree = 0;
  bool unit = false;
};

namespace detail {

/// Sorts polynomials by (lead, remaining terms) so that downstream processing
/// does not depend on input order.
inline void canonical_sort(std::vector<Polynomial>& polys) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    const auto ta = a.terms();
    const auto tb = b.terms();
    for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
      if (ta[i].word != tb[i].word) return ta[i].word < tb[i].word;
      if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
    }
    return ta.size() < tb.size();
  });
}

/// Buchberger-style two-sided completion over the default order.
class CompletionEngine {
 public:
  CompletionEngine(const CompletionOptions& options, CompletionStats& stats)
      : options_(options), stats_(stats) {}

  bool unit() const { return unit_; }
  const RuleTable& table() const { return table_; }

  /// Reduces p against the current rules and inserts the remainder, retiring
  /// rules whose leads it divides (their polynomials are reinserted).
  void insert(const Polynomial& p) {
    std::vector<Polynomial> pending{p};
    while (!pending.empty() && !unit_) {
      Polynomial q = table_.reduce(pending.back());
      pending.pop_back();
      if (q.is_zero()) continue;
      if (q.is_constant()) {
        unit_ = true;
        return;
      }
      q = make_monic(q);
      const std::size_t id = table_.add(q);
      ++stats_.rules_inserted;
      const Word& lead = table_.rule(id).lead;
      for (std::size_t j = 0; j < id; ++j) {
        if (table_.alive(j) && table_.rule(j).lead.contains(lead)) {
          table_.kill(j);
          ++stats_.rules_retired;
          pending.push_back(table_.rule(j).poly);
        }
      }
      make_pairs(id);
    }
  }

  void run() {
    while (!queue_.empty() && !unit_) {
      std::vector<Pair> batch;
      const std::size_t degree = queue_.top().degree;
      while (!queue_.empty() && batch.size() < options_.batch_size && queue_.top().degree == degree) {
        Pair pr = queue_.top();
        queue_.pop();
        if (table_.alive(pr.older) && table_.alive(pr.newer)) batch.push_back(pr);
      }
      std::vector<Polynomial> reduced(batch.size());
      auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t i = begin; i < batch.size(); i += step)
          reduced[i] = table_.reduce(s_poly(batch[i]));
      };
      const unsigned threads = std::max(1u, std::min<unsigned>(options_.threads, batch.size()));
      if (threads <= 1) {
        work(0, 1);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
      }
      stats_.pairs_reduced += batch.size();
      for (auto& r : reduced) {
        if (r.is_zero()) {
          ++stats_.zero_reductions;
          continue;
        }
        insert(r);
        if (unit_) return;
      }
    }
  }

  bool has_live_deferred() const {
    return std::any_of(deferred_.begin(), deferred_.end(), [&](const Pair& p) {
      return table_.alive(p.older) && table_.alive(p.newer);
    });
  }

 private:
  struct Pair {
    std::size_t degree;
    std::size_t newer;
    std::size_t older;
    std::ptrdiff_t offset;
    friend auto operator<=>(const Pair&, const Pair&) = default;
  };

  void make_pairs(std::size_t id) {
    const Word& w = table_.rule(id).lead;
    for (std::size_t j = 0; j <= id; ++j) {
      if (!table_.alive(j)) continue;
      for (const auto& o : find_overlaps(table_.rule(j).lead, w)) {
        if (o.kind != OverlapKind::left && o.kind != OverlapKind::right) continue;
        if (j == id && o.offset <= 0) continue;
        Pair pr{o.lcm.size(), id, j, o.offset};
        ++stats_.pairs_created;
        stats_.max_lcm_degree = std::max(stats_.max_lcm_degree, pr.degree);
        if (pr.degree > options_.max_degree) {
          deferred_.push_back(pr);
          ++stats_.deferred_pairs;
        } else {
          queue_.push(pr);
        }
      }
    }
  }

  Polynomial s_poly(const Pair& pr) const {
    const Rule& u = table_.rule(pr.older);
    const Rule& w = table_.rule(pr.newer);
    for (const auto& o : find_overlaps(u.lead, w.lead))
      if (o.offset == pr.offset)
        return sandwich(o.left_u, u.poly, o.right_u) - sandwich(o.left_w, w.poly, o.right_w);
    throw Error("internal: overlap vanished");
  }

  CompletionOptions options_;
  CompletionStats& stats_;
  RuleTable table_;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue_;
  std::vector<Pair> deferred_;
  bool unit_ = false;
};

/// Fully tail-reduces the alive rules of a table and returns them sorted by
/// ascending lead, mapped back from rank space.
inline std::vector<RewriteRule> reduced_rules(const RuleTable& table, const DegLexOrder& order) {
  std::vector<std::size_t> ids = table.alive_ids();
  std::sort(ids.begin(), ids.end(),
            [&](std::size_t a, std::size_t b) { return table.rule(a).lead < table.rule(b).lead; });
  std::vector<RewriteRule> out;
  for (std::size_t id : ids) {
    const Rule& r = table.rule(id);
    Polynomial poly = Polynomial::monomial(r.lead) - table.reduce(r.tail);
    out.push_back({from_rank_space(poly, order), order.from_rank_space(r.lead)});
  }
  return out;
}

inline GroebnerBasis unit_basis(const GeneratorSpace& space, const DegLexOrder& order) {
  return GroebnerBasis(space, order, {RewriteRule{Polynomial::constant(1), Word{}}},
                       BasisStatus::complete());
}

}  // namespace detail

/// Completes the two-sided ideal generated by `generators` to a reduced
/// Groebner basis. Overlaps whose common multiple exceeds max_degree are
/// deferred; if any of them fails to resolve against the final rules, the
/// basis is marked bounded. Derivation of a constant short-circuits to {1}.
inline GroebnerBasis complete(std::span<const Polynomial> generators, const GeneratorSpace& space,
                              const DegLexOrder& order = {}, const CompletionOptions& options = {},
                              CompletionStats* stats_out = nullptr) {
  if (generators.empty()) throw Error("complete: empty generator list");
  if (options.max_degree < 1) throw Error("complete: max_degree must be at least 1");

  CompletionStats stats;
  detail::CompletionEngine engine(options, stats);
  std::vector<Polynomial> ranked;
  for (const auto& g : generators)
    if (!g.is_zero()) ranked.push_back(make_monic(to_rank_space(g, order)));
  detail::canonical_sort(ranked);
  for (const auto& g : ranked) {
    engine.insert(g);
    if (engine.unit()) break;
  }
  if (!engine.unit()) engine.run();

  auto finish = [&](GroebnerBasis b) {
    stats.unit = contains_unit(b);
    if (stats_out) *stats_out = stats;
    return b;
  };
  if (engine.unit()) return finish(detail::unit_basis(space, order));
  if (engine.table().alive_count() == 0)
    return finish(GroebnerBasis(space, order, {}, BasisStatus::complete()));

  auto rules = detail::reduced_rules(engine.table(), order);
  GroebnerBasis basis(space, order, rules, BasisStatus::complete());
  if (engine.has_live_deferred()) {
    // Deferred overlaps may already resolve against the final rules.
    const auto rep = check_confluence(basis, options.max_degree + 1);
    if (!rep.confluent())
      basis = GroebnerBasis(space, order, std::move(rules), BasisStatus::bounded(options.max_degree));
  }
  return finish(std::move(basis));
}

inline GroebnerBasis complete(const std::vector<Polynomial>& generators, const GeneratorSpace& space,
                              const DegLexOrder& order = {}, const CompletionOptions& options = {},
                              CompletionStats* stats_out = nullptr) {
  return complete(std::span<const Polynomial>(generators), space, order, options, stats_out);
}

/// Reduced form of a rule list: no lead divides another and every tail is in
/// normal form. Input order does not affect the result.
inline std::vector<RewriteRule> interreduce(std::span<const RewriteRule> rules,
                                            const DegLexOrder& order = {}) {
  std::vector<Polynomial> ranked;
  for (const auto& r : rules) ranked.push_back(make_monic(to_rank_space(r.poly, order)));
  detail::canonical_sort(ranked);
  detail::RuleTable table;
  std::vector<Polynomial> pending(ranked.rbegin(), ranked.rend());
  while (!pending.empty()) {
    Polynomial q = table.reduce(pending.back());
    pending.pop_back();
    if (q.is_zero()) continue;
    if (q.is_constant()) return {RewriteRule{Polynomial::constant(1), Word{}}};
    const std::size_t id = table.add(make_monic(q));
    for (std::size_t j = 0; j < id; ++j)
      if (table.alive(j) && table.rule(j).lead.contains(table.rule(id).lead)) {
        table.kill(j);
        pending.push_back(table.rule(j).poly);
      }
  }
  return detail::reduced_rules(table, order);
}

}  // namespace ncchrom
