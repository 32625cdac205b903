#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "ncchrom/graphs.hpp"

namespace ncchrom {

using Coloring = std::vector<std::size_t>;  // vertex -> color

inline bool is_proper_coloring(const Graph& g, const Coloring& colors) {
  if (colors.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

/// Two-coloring by breadth-first search, or nullopt if G has an odd cycle.
inline std::optional<Coloring> two_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  Coloring color(n, unset);
  for (std::size_t s = 0; s < n; ++s) {
    if (color[s] != unset) continue;
    color[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t v = queue[qi];
      for (std::size_t w : g.neighbors(v)) {
        if (color[w] == unset) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

/// Largest-degree-first greedy coloring.
inline Coloring greedy_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  Coloring color(n, unset);
  for (std::size_t v : order) {
    std::vector<char> used(n + 1, 0);
    for (std::size_t w : g.neighbors(v))
      if (color[w] != unset) used[color[w]] = 1;
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
  }
  return color;
}

inline std::size_t color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

namespace detail {

inline bool extend_coloring(const Graph& g, const std::vector<std::size_t>& order, std::size_t idx,
                            std::size_t k, Coloring& color) {
  if (idx == order.size()) return true;
  const std::size_t v = order[idx];
  // symmetry breaking: a vertex may open at most one new color
  std::size_t used_max = 0;
  for (std::size_t i = 0; i < idx; ++i) used_max = std::max(used_max, color[order[i]] + 1);
  for (std::size_t c = 0; c < std::min(k, used_max + 1); ++c) {
    bool ok = true;
    for (std::size_t i = 0; i < idx && ok; ++i)
      ok = !(g.adjacent(v, order[i]) && color[order[i]] == c);
    if (!ok) continue;
    color[v] = c;
    if (extend_coloring(g, order, idx + 1, k, color)) return true;
  }
  return false;
}

}  // namespace detail

/// Proper k-coloring by backtracking, or nullopt when none exists.
inline std::optional<Coloring> find_coloring(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  Coloring color(n, 0);
  if (detail::extend_coloring(g, order, 0, k, color)) return color;
  return std::nullopt;
}

struct ClassicalChromatic {
  std::size_t value = 0;  // upper bound; exact when `exact`
  bool exact = false;
  Coloring coloring;
};

/// Exact chromatic number by backtracking up to `exact_limit` vertices,
/// greedy upper bound beyond.
inline ClassicalChromatic classical_chromatic(const Graph& g, std::size_t exact_limit = 12) {
  ClassicalChromatic out;
  if (g.vertex_count() == 0) {
    out.exact = true;
    return out;
  }
  if (g.vertex_count() > exact_limit) {
    out.coloring = greedy_coloring(g);
    out.value = color_count(out.coloring);
    return out;
  }
  for (std::size_t k = 1;; ++k) {
    if (auto c = find_coloring(g, k)) {
      out.value = k;
      out.exact = true;
      out.coloring = std::move(*c);
      return out;
    }
  }
}

/// Some k-clique of g (vertex list, ascending) if one exists.
inline std::optional<std::vector<std::size_t>> find_clique(const Graph& g, std::size_t k) {
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (current.size() == k) return true;
    for (std::size_t v = start; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (std::size_t u : current) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      current.push_back(v);
      if (self(self, v + 1)) return true;
      current.pop_back();
    }
    return false;
  };
  if (rec(rec, 0)) return current;
  return std::nullopt;
}

/// All k-cliques of g as ascending vertex lists.
inline std::vector<std::vector<std::size_t>> all_cliques(const Graph& g, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t v = start; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (std::size_t u : current) ok = ok && g.adjacent(u, v);
      if (!ok) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace ncchrom
