#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncchrom/ncgb/overlap.hpp"
#include "ncchrom/ncgb/rule_table.hpp"

namespace ncchrom {

struct BasisStatus {
  enum class Kind { complete, bounded };
  Kind kind = Kind::complete;
  std::size_t max_degree = 0;  // only meaningful when bounded

  static BasisStatus complete() { return {}; }
  static BasisStatus bounded(std::size_t degree) { return {Kind::bounded, degree}; }
  bool is_complete() const { return kind == Kind::complete; }

  std::string to_string() const {
    return is_complete() ? "complete" : "bounded:" + std::to_string(max_degree);
  }
  friend bool operator==(const BasisStatus&, const BasisStatus&) = default;
};

/// Relabels letters into the space where `order` becomes the default order.
inline Polynomial to_rank_space(const Polynomial& p, const DegLexOrder& order) {
  if (order.is_default()) return p;
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({order.to_rank_space(t.word), t.coeff});
  return Polynomial::from_terms(std::move(terms));
}

inline Polynomial from_rank_space(const Polynomial& p, const DegLexOrder& order) {
  if (order.is_default()) return p;
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back({order.from_rank_space(t.word), t.coeff});
  return Polynomial::from_terms(std::move(terms));
}

/// A rule set with its order and a completeness status. Rules are kept in the
/// order given; bases produced by complete() and interreduce() are sorted by
/// ascending lead. Immutable once built.
class GroebnerBasis {
 public:
  GroebnerBasis(GeneratorSpace space, DegLexOrder order, std::vector<RewriteRule> rules,
                BasisStatus status)
      : space_(space), order_(std::move(order)), rules_(std::move(rules)), status_(status) {
    auto table = std::make_shared<detail::RuleTable>();
    for (const auto& r : rules_) {
      if (r.poly.is_zero()) throw Error("basis rule is zero");
      auto ranked = to_rank_space(r.poly, order_);
      if (ranked.front().coeff != 1 || order_.from_rank_space(ranked.front().word) != r.lead)
        throw Error("basis rule is not monic with the recorded lead");
      table->add(ranked);
    }
    table_ = std::move(table);
  }

  /// Builds rules from arbitrary nonzero polynomials, normalizing each to
  /// monic form without interreducing.
  static GroebnerBasis from_polynomials(GeneratorSpace space, DegLexOrder order,
                                        std::span<const Polynomial> polys, BasisStatus status) {
    std::vector<RewriteRule> rules;
    for (const auto& p : polys) rules.push_back(RewriteRule::from_polynomial(p, order));
    return GroebnerBasis(space, std::move(order), std::move(rules), status);
  }

  const GeneratorSpace& space() const { return space_; }
  const DegLexOrder& order() const { return order_; }
  std::span<const RewriteRule> rules() const { return rules_; }
  const BasisStatus& status() const { return status_; }

  Polynomial reduce(const Polynomial& p, std::vector<ReductionStep>* trace = nullptr) const {
    auto out = from_rank_space(table_->reduce(to_rank_space(p, order_), trace), order_);
    if (trace && !order_.is_default())
      for (auto& step : *trace) {
        step.left = order_.from_rank_space(step.left);
        step.right = order_.from_rank_space(step.right);
      }
    return out;
  }

  bool reducible(const Word& w) const { return table_->reducible(order_.to_rank_space(w)); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.space_ == b.space_ && a.order_ == b.order_ && a.rules_ == b.rules_ &&
           a.status_ == b.status_;
  }

 private:
  GeneratorSpace space_;
  DegLexOrder order_;
  std::vector<RewriteRule> rules_;
  BasisStatus status_;
  std::shared_ptr<const detail::RuleTable> table_;
};

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  return basis.reduce(p);
}

/// True iff some rule is a nonzero constant.
inline bool contains_unit(const GroebnerBasis& basis) {
  for (const auto& r : basis.rules())
    if (r.lead.empty()) return true;
  return false;
}

struct MembershipVerdict {
  enum class Kind { member, non_member, unknown };
  Kind kind;
  Polynomial normal_form;
  std::vector<ReductionStep> trace;
};

inline const char* to_string(MembershipVerdict::Kind k) {
  switch (k) {
    case MembershipVerdict::Kind::member: return "member";
    case MembershipVerdict::Kind::non_member: return "non-member";
    case MembershipVerdict::Kind::unknown: return "unknown";
  }
  return "?";
}

/// member iff the normal form vanishes; non-member is only reported for a
/// complete basis.
inline MembershipVerdict is_member(const Polynomial& p, const GroebnerBasis& basis) {
  MembershipVerdict v{MembershipVerdict::Kind::member, {}, {}};
  v.normal_form = basis.reduce(p, &v.trace);
  if (!v.normal_form.is_zero())
    v.kind = basis.status().is_complete() ? MembershipVerdict::Kind::non_member
                                          : MembershipVerdict::Kind::unknown;
  return v;
}

/// Every S-polynomial of every overlap between rules (including containments
/// and self-overlaps) reduces to zero. Returns the number of overlaps checked
/// and the number that failed.
struct ConfluenceReport {
  std::size_t overlaps = 0;
  std::size_t failures = 0;
  bool confluent() const { return failures == 0; }
};

inline ConfluenceReport check_confluence(const GroebnerBasis& basis, std::size_t min_lcm_degree = 0) {
  ConfluenceReport rep;
  const auto rules = basis.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i; j < rules.size(); ++j) {
      for (const auto& o : find_overlaps(rules[i].lead, rules[j].lead)) {
        // identical alignment of a rule with itself is trivial
        if (i == j && o.offset <= 0) continue;
        if (o.lcm.size() < min_lcm_degree) continue;
        ++rep.overlaps;
        if (!basis.reduce(s_polynomial(rules[i], rules[j], o)).is_zero()) ++rep.failures;
      }
    }
  }
  return rep;
}

}  // namespace ncchrom
