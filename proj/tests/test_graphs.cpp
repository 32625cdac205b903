#include <catch_amalgamated.hpp>

#include <random>
#include <string>

#include "ncchrom/coloring.hpp"
#include "ncchrom/graphs.hpp"

using namespace ncchrom;

namespace {

std::string data(const std::string& name) { return std::string(NCCHROM_DATA_DIR) + "/" + name; }

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// (v,x) -> (x,v) between G*H and H*G
std::vector<std::size_t> swap_pairs(std::size_t ng, std::size_t nh) {
  std::vector<std::size_t> perm(ng * nh);
  for (std::size_t v = 0; v < ng; ++v)
    for (std::size_t x = 0; x < nh; ++x) perm[v * nh + x] = x * ng + v;
  return perm;
}

bool isomorphic_by(const Graph& a, const Graph& b, const std::vector<std::size_t>& perm) {
  return relabel(a, perm) == b;
}

}  // namespace

TEST_CASE("basic families") {
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(complete_graph(1).edge_count() == 0);
  CHECK_THROWS_AS(complete_graph(0), Error);
  CHECK_THROWS_AS(cycle_graph(2), Error);
  for (std::size_t v = 0; v < 5; ++v) CHECK(cycle_graph(5).degree(v) == 2);
}

TEST_CASE("edge validation") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), Error);
  CHECK_THROWS_AS(g.add_edge(0, 3), Error);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(1, 0));
  CHECK(g.neighbors(1) == std::vector<std::size_t>{0});
}

TEST_CASE("tensor product") {
  const auto t = tensor_product(complete_graph(2), complete_graph(3));
  CHECK(t.vertex_count() == 6);
  CHECK(t.edge_count() == 6);
  // (v,x) ~ (w,y) iff v ~ w and x ~ y
  CHECK(t.adjacent(0 * 3 + 0, 1 * 3 + 1));
  CHECK_FALSE(t.adjacent(0 * 3 + 0, 1 * 3 + 0));
  CHECK_FALSE(t.adjacent(0 * 3 + 0, 0 * 3 + 1));
  // K2 x K2 is two disjoint edges
  CHECK(tensor_product(complete_graph(2), complete_graph(2)).edge_count() == 2);
}

TEST_CASE("cartesian product") {
  const auto c4 = cartesian_product(complete_graph(2), complete_graph(2));
  CHECK(isomorphic_by(c4, cycle_graph(4), {0, 1, 3, 2}));
  const auto prism = cartesian_product(complete_graph(2), complete_graph(3));
  CHECK(prism.edge_count() == 9);
  CHECK(prism == load_graph(data("prism.col")));
}

TEST_CASE("strong product") {
  const auto s = strong_product(cycle_graph(5), complete_graph(2));
  CHECK(s.vertex_count() == 10);
  CHECK(s.edge_count() == 25);
  for (std::size_t v = 0; v < 10; ++v) CHECK(s.degree(v) == 5);
  CHECK(s == load_graph(data("c5_strong_k2.col")));
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= 3; ++m) CHECK(strong_product(complete_graph(n), complete_graph(m)) == complete_graph(n * m));
}

TEST_CASE("suspension") {
  CHECK(suspension(complete_graph(3)) == complete_graph(4));
  CHECK(suspension(Graph(1)) == complete_graph(2));
  const auto w5 = suspension(cycle_graph(5));
  CHECK(w5.edge_count() == 10);
  CHECK(w5.degree(5) == 5);
}

TEST_CASE("relabel") {
  const auto p = relabel(cycle_graph(4), {1, 2, 3, 0});
  CHECK(p == cycle_graph(4));
  CHECK_THROWS_AS(relabel(cycle_graph(4), {0, 0, 1, 2}), Error);
}

TEST_CASE("graph file parse and serialize") {
  const auto g = parse_graph(std::string("c comment\np edge 3 2\ne 1 2\n\ne 2 3\n"));
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK(parse_graph(serialize_graph(Graph(0))) == Graph(0));
  CHECK(load_graph(data("k5.col")) == complete_graph(5));
  CHECK(load_graph(data("c5.col")) == cycle_graph(5));
  CHECK(load_graph(data("k1.col")) == complete_graph(1));
}

TEST_CASE("graph file errors") {
  CHECK_THROWS_AS(parse_graph(std::string("p edge 3 1\ne 1 1\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 3 1\ne 1 4\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 3 1\ne 0 1\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("e 1 2\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("c nothing\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 3 1\np edge 3 1\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 3 1\ne 1 2 3\n")), ParseError);
  CHECK_THROWS_AS(parse_graph(std::string("p edge 3 1\nq 1 2\n")), ParseError);
  CHECK_THROWS_AS(load_graph(data("missing.col")), Error);
}

TEST_CASE("colorings") {
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_proper_coloring(cycle_graph(4), {0, 1, 0, 1}));
  CHECK_FALSE(is_proper_coloring(cycle_graph(4), {0, 1, 1, 0}));
  CHECK_FALSE(is_proper_coloring(cycle_graph(4), {0, 1, 0}));

  CHECK(classical_chromatic(cycle_graph(5)).value == 3);
  CHECK(classical_chromatic(complete_graph(6)).value == 6);
  CHECK(classical_chromatic(strong_product(cycle_graph(5), complete_graph(2))).value == 5);
  CHECK(classical_chromatic(Graph(3)).value == 1);
  CHECK(classical_chromatic(Graph(0)).value == 0);

  CHECK_FALSE(find_coloring(cycle_graph(5), 2).has_value());
  const auto c = find_coloring(cycle_graph(5), 3);
  REQUIRE(c.has_value());
  CHECK(is_proper_coloring(cycle_graph(5), *c));

  const auto g = strong_product(cycle_graph(7), complete_graph(2));
  const auto greedy = greedy_coloring(g);
  CHECK(is_proper_coloring(g, greedy));
}

TEST_CASE("cliques") {
  CHECK(find_clique(cycle_graph(5), 2).has_value());
  CHECK_FALSE(find_clique(cycle_graph(5), 3).has_value());
  const auto k = find_clique(strong_product(cycle_graph(5), complete_graph(2)), 4);
  REQUIRE(k.has_value());
  CHECK(k->size() == 4);
  CHECK(all_cliques(complete_graph(4), 3).size() == 4);
  CHECK(all_cliques(cycle_graph(5), 2).size() == 5);
}

TEST_CASE("products commute and edge counts follow the formulas") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto g = random_graph(rng, 1 + t % 5, 0.5);
    const auto h = random_graph(rng, 1 + (t / 5) % 4, 0.5);
    const auto perm = swap_pairs(g.vertex_count(), h.vertex_count());
    CHECK(relabel(tensor_product(g, h), perm) == tensor_product(h, g));
    CHECK(relabel(cartesian_product(g, h), perm) == cartesian_product(h, g));
    CHECK(relabel(strong_product(g, h), perm) == strong_product(h, g));
    const auto box = cartesian_product(g, h).edge_count();
    CHECK(box == g.edge_count() * h.vertex_count() + g.vertex_count() * h.edge_count());
    CHECK(strong_product(g, h).edge_count() == box + 2 * g.edge_count() * h.edge_count());
    CHECK(tensor_product(g, complete_graph(1)).edge_count() == 0);
  }
}

TEST_CASE("suspension of complete graphs up to eight vertices") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(suspension(complete_graph(n - 1)) == complete_graph(n));
}

TEST_CASE("two vertices, one edge") {
  CHECK(parse_graph(std::string("p edge 2 1\ne 1 2\n")) == complete_graph(2));
  CHECK(parse_graph(std::string("p edge 2 2\ne 2 1\ne 1 2\n")).edge_count() == 1);
  CHECK(serialize_graph(parse_graph(std::string("p edge 3 2\ne 3 2\ne 2 1\n"))) == "p edge 3 2\ne 1 2\ne 2 3\n");
}
