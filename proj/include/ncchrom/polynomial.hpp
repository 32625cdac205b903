#pragma once

#include <algorithm>
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncchrom/error.hpp"
#include "ncchrom/scalar.hpp"
#include "ncchrom/word.hpp"

namespace ncchrom {

struct Term {
  Word word;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Element of Q<x[v,a]>: finitely supported map from words to nonzero
/// rationals. Terms are kept strictly descending in the default deglex order,
/// which makes equality structural.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Scalar& c) { return monomial(Word{}, c); }
  static Polynomial monomial(Word w, const Scalar& c = 1) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({std::move(w), c});
    return p;
  }
  static Polynomial letter(Letter l) { return monomial(Word{l}); }

  /// Builds from arbitrary terms; sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.word > b.word; });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().word == t.word) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Takes terms already strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& front() const { return terms_.front(); }

  bool is_constant() const { return terms_.size() == 1 && terms_[0].word.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().word.size(); }

  Scalar coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& x) { return t.word > x; });
    return (it != terms_.end() && it->word == w) ? it->coeff : Scalar(0);
  }

  Polynomial& operator+=(const Polynomial& rhs) { return *this = merge(*this, rhs, 1); }
  Polynomial& operator-=(const Polynomial& rhs) { return *this = merge(*this, rhs, -1); }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, 1); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, -1); }
  friend Polynomial operator-(Polynomial a) {
    for (auto& t : a.terms_) t.coeff = -t.coeff;
    return a;
  }

  friend Polynomial operator*(const Scalar& c, Polynomial p) {
    if (c == 0) return {};
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    std::vector<Term> out;
    out.reserve(p.size() * q.size());
    for (const auto& s : p.terms_)
      for (const auto& t : q.terms_) out.push_back({s.word * t.word, s.coeff * t.coeff});
    return from_terms(std::move(out));
  }

  /// left * p * right. Multiplying by words on both sides is monotone in
  /// deglex, so the term order is preserved.
  friend Polynomial sandwich(const Word& left, const Polynomial& p, const Word& right) {
    Polynomial out;
    out.terms_.reserve(p.size());
    for (const auto& t : p.terms_) out.terms_.push_back({concat(left, t.word, right), t.coeff});
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, int sign) {
    Polynomial out;
    out.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].word > b.terms_[j].word)) {
        out.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].word > a.terms_[i].word) {
        out.terms_.push_back({b.terms_[j].word, sign * b.terms_[j].coeff});
        ++j;
      } else {
        Scalar c = a.terms_[i].coeff + sign * b.terms_[j].coeff;
        if (c != 0) out.terms_.push_back({a.terms_[i].word, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Order-maximal word of p and its coefficient. Throws on p = 0.
inline std::pair<Word, Scalar> leading_term(const Polynomial& p, const DegLexOrder& order = {}) {
  if (p.is_zero()) throw Error("no leading term: polynomial is zero");
  if (order.is_default()) return {p.front().word, p.front().coeff};
  const Term* best = &p.front();
  for (const auto& t : p.terms())
    if (order.compare(t.word, best->word) > 0) best = &t;
  return {best->word, best->coeff};
}

inline Polynomial make_monic(const Polynomial& p, const DegLexOrder& order = {}) {
  auto [word, coeff] = leading_term(p, order);
  if (coeff == 1) return p;
  return Scalar(1 / coeff) * p;
}

/// Terms of p listed strictly descending in the given order.
inline std::vector<Term> ordered_terms(const Polynomial& p, const DegLexOrder& order) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  if (!order.is_default())
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.word, b.word) > 0; });
  return terms;
}

// ---------------------------------------------------------------------------
// Text form: "c*x[v,a]*x[w,b] - x[0,1] + 1/2"

inline std::string word_to_string(const Word& w, const GeneratorSpace& space) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto g = space.generator(w[i]);
    if (i) out += '*';
    out += "x[" + std::to_string(g.vertex) + "," + std::to_string(g.output) + "]";
  }
  return out;
}

inline std::string to_string(const Polynomial& p, const GeneratorSpace& space,
                             const DegLexOrder& order = {}) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : ordered_terms(p, order)) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Scalar mag = abs(t.coeff);
    if (t.word.empty()) {
      out += scalar_to_string(mag);
    } else {
      if (mag != 1) out += scalar_to_string(mag) + "*";
      out += word_to_string(t.word, space);
    }
  }
  return out;
}

namespace detail {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view digits() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }
  std::size_t index() { return std::stoul(std::string(digits())); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form produced by to_string. Also accepts arbitrary
/// whitespace and explicit "1*" coefficients.
inline Polynomial parse_polynomial(std::string_view text, const GeneratorSpace& space) {
  detail::PolyLexer lex(text);
  std::vector<Term> terms;
  if (lex.done()) lex.fail("empty input");
  bool first = true;
  while (!lex.done()) {
    Scalar sign = 1;
    if (lex.accept('-')) {
      sign = -1;
    } else if (!lex.accept('+') && !first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;

    Scalar coeff = 1;
    Word word;
    bool have_factor = false;
    while (true) {
      const char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num(lex.digits());
        if (lex.accept('/')) num += "/" + std::string(lex.digits());
        coeff *= parse_scalar(num);
      } else if (c == 'x') {
        lex.accept('x');
        lex.expect('[');
        const auto v = lex.index();
        lex.expect(',');
        const auto a = lex.index();
        lex.expect(']');
        if (v >= space.inputs || a >= space.outputs)
          lex.fail("generator x[" + std::to_string(v) + "," + std::to_string(a) + "] out of range");
        word.push_back(space.letter(v, a));
      } else {
        lex.fail("expected coefficient or generator");
      }
      have_factor = true;
      if (!lex.accept('*')) break;
    }
    if (!have_factor) lex.fail("empty term");
    terms.push_back({std::move(word), sign * coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace ncchrom
