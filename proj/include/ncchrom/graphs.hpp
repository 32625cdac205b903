#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ncchrom/error.hpp"

namespace ncchrom {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph: loop-free, undirected, dense adjacency.
class Graph {
 public:
  explicit Graph(std::size_t vertices = 0) : n_(vertices), adj_(vertices * vertices, 0) {}

  Graph(std::size_t vertices, const std::vector<Edge>& edges) : Graph(vertices) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_)
      throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  }

  std::size_t vertex_count() const { return n_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v) c += adjacent(u, v);
    return c;
  }

  /// Edges as (min, max), sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.push_back({u, v});
    return out;
  }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < n_; ++w)
      if (adjacent(v, w)) out.push_back(w);
    return out;
  }

  std::size_t degree(std::size_t v) const { return neighbors(v).size(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<char> adj_;
};

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error("complete graph needs at least one vertex");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle graph needs at least 3 vertices");
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// Adds vertex |G| adjacent to every vertex of G.
inline Graph suspension(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Graph out(n + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (std::size_t v = 0; v < n; ++v) out.add_edge(v, n);
  return out;
}

namespace detail {

// (v, x) -> v * |K| + x
template <class Rule>
Graph product(const Graph& h, const Graph& k, Rule rule) {
  const std::size_t nh = h.vertex_count(), nk = k.vertex_count();
  Graph out(nh * nk);
  for (std::size_t v = 0; v < nh; ++v)
    for (std::size_t x = 0; x < nk; ++x)
      for (std::size_t w = 0; w < nh; ++w)
        for (std::size_t y = 0; y < nk; ++y) {
          const std::size_t a = v * nk + x, b = w * nk + y;
          if (a < b && rule(v, x, w, y)) out.add_edge(a, b);
        }
  return out;
}

}  // namespace detail

/// Categorical product: (v,x)~(w,y) iff v~w and x~y.
inline Graph tensor_product(const Graph& h, const Graph& k) {
  return detail::product(h, k, [&](auto v, auto x, auto w, auto y) {
    return h.adjacent(v, w) && k.adjacent(x, y);
  });
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
  return detail::product(g, h, [&](auto v, auto x, auto w, auto y) {
    return (v == w && h.adjacent(x, y)) || (g.adjacent(v, w) && x == y);
  });
}

inline Graph strong_product(const Graph& g, const Graph& h) {
  return detail::product(g, h, [&](auto v, auto x, auto w, auto y) {
    const bool gv = v == w || g.adjacent(v, w);
    const bool hx = x == y || h.adjacent(x, y);
    return gv && hx && !(v == w && x == y);
  });
}

/// Applies a vertex permutation: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<std::size_t>& perm) {
  Graph out(g.vertex_count());
  for (auto [u, v] : g.edges()) out.add_edge(perm.at(u), perm.at(v));
  return out;
}

// ---------------------------------------------------------------------------
// DIMACS-like text: "c ..." comments, "p edge <n> <m>", "e <u> <v>" (1-based).

inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  Graph g;
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("graph line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long n = -1, m = -1;
      if (have_header) fail("duplicate 'p' header");
      if (!(ss >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        fail("expected 'p edge <n> <m>'");
      g = Graph(static_cast<std::size_t>(n));
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before 'p edge' header");
      long long u = 0, v = 0;
      std::string rest;
      if (!(ss >> u >> v) || (ss >> rest)) fail("expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g.vertex_count() ||
          static_cast<std::size_t>(v) > g.vertex_count())
        fail("vertex out of range in '" + line + "'");
      if (u == v) fail("loop edge '" + line + "'");
      g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  if (!have_header) throw ParseError("graph: missing 'p edge <n> <m>' header");
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read graph file '" + path + "'");
  return parse_graph(in);
}

/// Canonical text: header then edges sorted by (min, max) endpoint.
inline std::string serialize_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

}  // namespace ncchrom
