#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "ncchrom/error.hpp"

namespace ncchrom {

// Exact rational coefficient. mpq_class keeps values canonical after every
// arithmetic operation; values built from text are canonicalized on parse.
using Scalar = mpq_class;

inline std::string scalar_to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str();
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

inline bool is_integer_text(std::string_view t) {
  if (t.empty()) return false;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

/// Parses "p" or "p/q" (optional leading sign on p). Throws ParseError.
inline Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Scalar out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace ncchrom
