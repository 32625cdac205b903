#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ncchrom/polynomial.hpp"

namespace ncchrom {

/// Monic polynomial with its cached leading word.
struct RewriteRule {
  Polynomial poly;
  Word lead;

  static RewriteRule from_polynomial(const Polynomial& p, const DegLexOrder& order = {}) {
    auto monic = make_monic(p, order);
    auto lead = leading_term(monic, order).first;
    return {std::move(monic), std::move(lead)};
  }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

// left:      u sits left of w, a proper suffix of u equals a proper prefix of w
// right:     u sits right of w, a proper suffix of w equals a proper prefix of u
// contains:  w is a subword of u (includes u == w)
// contained: u is a proper subword of w
enum class OverlapKind { left, right, contains, contained };

inline const char* to_string(OverlapKind k) {
  switch (k) {
    case OverlapKind::left: return "left";
    case OverlapKind::right: return "right";
    case OverlapKind::contains: return "contains";
    case OverlapKind::contained: return "contained";
  }
  return "?";
}

/// An alignment of two words u, w inside a common multiple:
/// left_u * u * right_u == left_w * w * right_w == lcm.
struct Overlap {
  OverlapKind kind;
  std::ptrdiff_t offset;  // start of w relative to the start of u
  Word left_u, right_u;
  Word left_w, right_w;
  Word lcm;
};

/// All nontrivial alignments of u and w (the overlapping region is
/// nonempty). Ordered by offset.
inline std::vector<Overlap> find_overlaps(const Word& u, const Word& w) {
  std::vector<Overlap> out;
  if (u.empty() || w.empty()) return out;
  const auto nu = static_cast<std::ptrdiff_t>(u.size());
  const auto nw = static_cast<std::ptrdiff_t>(w.size());
  for (std::ptrdiff_t k = -(nw - 1); k < nu; ++k) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, k);
    const std::ptrdiff_t hi = std::min(nu, k + nw);
    bool match = true;
    for (std::ptrdiff_t i = lo; i < hi && match; ++i) match = u[i] == w[i - k];
    if (!match) continue;

    Overlap o{};
    o.offset = k;
    const std::size_t end = static_cast<std::size_t>(k + nw);
    if (k >= 0 && k + nw <= nu) {
      o.kind = OverlapKind::contains;
      o.left_w = u.prefix(k);
      o.right_w = u.suffix(nu - k - nw);
      o.lcm = u;
    } else if (k <= 0 && k + nw >= nu) {
      o.kind = OverlapKind::contained;
      o.left_u = w.prefix(-k);
      o.right_u = w.suffix(k + nw - nu);
      o.lcm = w;
    } else if (k > 0) {
      o.kind = OverlapKind::left;
      o.right_u = w.suffix(end - u.size());
      o.left_w = u.prefix(k);
      o.lcm = u * o.right_u;
    } else {
      o.kind = OverlapKind::right;
      o.left_u = w.prefix(-k);
      o.right_w = u.suffix(u.size() - end);
      o.lcm = w * o.right_w;
    }
    out.push_back(std::move(o));
  }
  return out;
}

/// left_u*p*right_u - left_w*q*right_w for an overlap of lead(p) with lead(q).
inline Polynomial s_polynomial(const RewriteRule& p, const RewriteRule& q, const Overlap& o) {
  if (concat(o.left_u, p.lead, o.right_u) != o.lcm || concat(o.left_w, q.lead, o.right_w) != o.lcm)
    throw Error("malformed overlap: cofactors do not reproduce the common multiple");
  return sandwich(o.left_u, p.poly, o.right_u) - sandwich(o.left_w, q.poly, o.right_w);
}

}  // namespace ncchrom
