#pragma once

#include <map>
#include <span>
#include <vector>

#include "ncchrom/polynomial.hpp"

namespace ncchrom {

// Independent membership check by exact linear algebra: spans all products
// a*g*b of total degree <= truncation and row-reduces. Shares no code with the
// rewriting engine beyond polynomial arithmetic.

struct LinalgOptions {
  std::size_t max_rows = 2'000'000;
};

struct LinalgVerdict {
  enum class Kind { member, unknown };
  Kind kind = Kind::unknown;
  std::size_t rows = 0;   // products spanned
  std::size_t rank = 0;   // pivots kept
  bool is_member() const { return kind == Kind::member; }
};

namespace detail {

/// Row echelon form keyed by leading word (default deglex).
class Echelon {
 public:
  void add(Polynomial row) {
    while (!row.is_zero()) {
      auto it = pivots_.find(row.front().word);
      if (it == pivots_.end()) {
        const Scalar c = row.front().coeff;
        Word lead = row.front().word;
        pivots_.emplace(std::move(lead), Scalar(1 / c) * row);
        return;
      }
      row -= row.front().coeff * it->second;
    }
  }

  /// Remainder after eliminating every pivot word.
  Polynomial remainder(const Polynomial& p) const {
    std::map<Word, Scalar, std::greater<>> work;
    for (const auto& t : p.terms()) work.emplace(t.word, t.coeff);
    std::vector<Term> out;
    while (!work.empty()) {
      auto it = work.begin();
      auto pv = pivots_.find(it->first);
      const Scalar c = it->second;
      if (pv == pivots_.end()) {
        out.push_back({it->first, c});
        work.erase(it);
        continue;
      }
      work.erase(it);
      for (const auto& t : pv->second.terms().subspan(1)) {
        auto [jt, inserted] = work.try_emplace(t.word, 0);
        jt->second -= c * t.coeff;
        if (jt->second == 0) work.erase(jt);
      }
    }
    return Polynomial::from_sorted_terms(std::move(out));
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<Word, Polynomial> pivots_;
};

inline void words_up_to(std::size_t alphabet, std::size_t max_len, std::vector<Word>& out) {
  out.assign(1, Word{});
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t l = 0; l < alphabet; ++l) {
        Word w = out[i];
        w.push_back(static_cast<Letter>(l));
        out.push_back(std::move(w));
      }
    begin = end;
  }
}

}  // namespace detail

/// member is a certificate (p is a linear combination of products a*g*b);
/// unknown is inconclusive. Throws "truncation too large" past the row cap.
inline LinalgVerdict linalg_membership(const Polynomial& p, std::span<const Polynomial> generators,
                                       std::size_t alphabet, std::size_t truncation_degree,
                                       const LinalgOptions& options = {}) {
  LinalgVerdict verdict;
  if (p.is_zero()) {
    verdict.kind = LinalgVerdict::Kind::member;
    return verdict;
  }
  if (p.degree() > truncation_degree) return verdict;

  // count first so the cap is enforced before any work
  std::vector<std::size_t> powers{1};
  for (std::size_t k = 1; k <= truncation_degree; ++k) powers.push_back(powers.back() * alphabet);
  std::size_t planned = 0;
  for (const auto& g : generators) {
    if (g.is_zero() || g.degree() > truncation_degree) continue;
    const std::size_t slack = truncation_degree - g.degree();
    for (std::size_t k = 0; k <= slack; ++k) {
      planned += (k + 1) * powers[k];
      if (planned > options.max_rows) throw Error("truncation too large");
    }
  }

  std::vector<Word> words;
  detail::words_up_to(alphabet, truncation_degree, words);
  detail::Echelon echelon;
  for (const auto& g : generators) {
    if (g.is_zero() || g.degree() > truncation_degree) continue;
    const std::size_t slack = truncation_degree - g.degree();
    for (const auto& a : words) {
      if (a.size() > slack) break;
      for (const auto& b : words) {
        if (a.size() + b.size() > slack) break;
        echelon.add(sandwich(a, g, b));
        ++verdict.rows;
      }
    }
  }
  verdict.rank = echelon.rank();
  if (echelon.remainder(p).is_zero()) verdict.kind = LinalgVerdict::Kind::member;
  return verdict;
}

inline LinalgVerdict linalg_membership(const Polynomial& p, const std::vector<Polynomial>& generators,
                                       std::size_t alphabet, std::size_t truncation_degree,
                                       const LinalgOptions& options = {}) {
  return linalg_membership(p, std::span<const Polynomial>(generators), alphabet, truncation_degree,
                           options);
}

}  // namespace ncchrom
