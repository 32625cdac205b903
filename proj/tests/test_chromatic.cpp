#include <catch_amalgamated.hpp>

#include <random>

#include "ncchrom/ncchrom.hpp"

using namespace ncchrom;

namespace {

bool unit_in(const IdealSpec& spec) { return contains_unit(complete(spec.generators, spec.space)); }

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("four-color relation families at n = 3") {
  const auto rels = generate_k4_relations(3);
  std::array<std::size_t, kK4Families> counts{};
  for (const auto& r : rels) ++counts.at(r.family - 1);
  CHECK(counts == std::array<std::size_t, kK4Families>{18, 9, 3, 24, 6, 6, 6});
  CHECK(rels.size() == 72);

  const GeneratorSpace s{3, 4};
  for (const auto& r : rels) {
    CHECK(leading_term(r.poly) == std::pair<Word, Scalar>{r.expected_lead, 1});
    if (r.family == 3) CHECK(r.expected_lead == Word{s.letter(r.vertices[0], 3)});
    if (r.family == 7)
      CHECK(r.expected_lead ==
            Word{s.letter(r.vertices[0], 2), s.letter(r.vertices[1], 0), s.letter(r.vertices[2], 1)});
  }
  CHECK_THROWS_AS(generate_k4_relations(2), Error);
}

TEST_CASE("family five as printed") {
  const GeneratorSpace s{3, 4};
  const auto rels = generate_k4_relations(3);
  auto x = [&](std::size_t v, std::size_t i) { return Polynomial::letter(s.letter(v, i)); };
  const auto one = Polynomial::constant(1);
  const std::size_t v = 0, w = 1;
  const auto expected = x(v, 2) * x(w, 1) + x(v, 2) * x(w, 0) + x(v, 1) * x(w, 2) + x(v, 1) * x(w, 0) +
                        x(v, 0) * x(w, 2) + x(v, 0) * x(w, 1) - x(v, 2) - x(v, 1) - x(v, 0) - x(w, 2) -
                        x(w, 1) - x(w, 0) + one;
  bool found = false;
  for (const auto& r : rels)
    if (r.family == 5 && r.vertices[0] == v && r.vertices[1] == w) {
      CHECK(r.poly == expected);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("four-color basis verification for K3 to K6") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto rep = verify_k4(n);
    INFO("n = " << n);
    CHECK(rep.pass());
    CHECK(rep.leads_match);
    CHECK(rep.overlap_failures == 0);
    CHECK(rep.overlaps > 0);
    CHECK(rep.generator_failures == 0);
    CHECK(rep.game_in_relations);
    CHECK(rep.relations_in_game);
    CHECK(rep.explicit_identity);
    CHECK(rep.unit_absent);
    CHECK(rep.matches_completion);
  }
  CHECK(verify_k4(3).reduced_size == 66);
  CHECK(verify_k4(4).reduced_size == 124);
  CHECK_THROWS_AS(verify_k4(2), Error);
  CHECK_THROWS_AS(verify_k4(7), Error);
}

TEST_CASE("a passing verification means the unit is not a member") {
  const auto spec = game_ideal(coloring_game(complete_graph(5), 4));
  REQUIRE(verified_k4(5).pass());
  const auto b = complete(spec.generators, spec.space);
  CHECK(is_member(Polynomial::constant(1), b).kind == MembershipVerdict::Kind::non_member);
}

TEST_CASE("chi_alg examples") {
  for (std::size_t j = 1; j <= 4; ++j) {
    const auto r = chi_alg(complete_graph(j));
    INFO("K" << j);
    CHECK(r.value() == j);
  }
  const auto k5 = chi_alg(complete_graph(5));
  CHECK(k5.value() == 4u);
  CHECK(k5.upper.kind == UpperCertificate::Kind::universal);
  CHECK(chi_alg(cycle_graph(5)).value() == 3u);
  CHECK(chi_alg(Graph(4)).value() == 1u);
  CHECK(chi_alg(cycle_graph(6)).value() == 2u);
  CHECK(chi_alg(complete_graph(6)).value() == 4u);
  CHECK(chi_alg(Graph(0)).value() == 0u);
}

TEST_CASE("chi_lc examples") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(chi_lc(complete_graph(n)).value() == n);
  const auto c5 = chi_lc(cycle_graph(5));
  CHECK(c5.value() == 3u);
  CHECK(c5.upper.kind == UpperCertificate::Kind::coloring);
  CHECK(c5.upper.functional_verified);
  CHECK(chi_lc(complete_graph(5)).value() == 5u);
}

TEST_CASE("chi_lc of the strong product of C5 and K2") {
  const auto r = chi_lc(strong_product(cycle_graph(5), complete_graph(2)));
  CHECK(r.value() == 5u);
  REQUIRE(r.lower.size() == 4);
  CHECK(r.lower.back().colors == 4);
  REQUIRE(r.lower.back().run.has_value());
  CHECK(r.lower.back().run->unit);
}

TEST_CASE("the plain four-color ideal of C5 strong K2 has no unit") {
  const auto spec = game_ideal(coloring_game(strong_product(cycle_graph(5), complete_graph(2)), 4));
  const auto b = complete(spec.generators, spec.space);
  CHECK_FALSE(contains_unit(b));
  CHECK(chi_alg(strong_product(cycle_graph(5), complete_graph(2))).value() == 4u);
}

TEST_CASE("sandwich on small graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 12; ++t) {
    const auto g = random_graph(rng, 3 + t % 4, 0.6);
    const auto a = chi_alg(g), l = chi_lc(g);
    const auto c = classical_chromatic(g);
    INFO(serialize_graph(g));
    CHECK(a.lo <= l.hi);
    CHECK(l.lo <= c.value);
    if (a.exact() && l.exact()) CHECK(*a.value() <= *l.value());
    if (l.exact()) CHECK(*l.value() <= c.value);
  }
}

TEST_CASE("adding edges preserves the unit") {
  // C5 and its supergraphs on five vertices with two colors
  auto g = cycle_graph(5);
  REQUIRE(unit_in(game_ideal(coloring_game(g, 2))));
  g.add_edge(0, 2);
  CHECK(unit_in(game_ideal(coloring_game(g, 2))));
  g.add_edge(1, 3);
  CHECK(unit_in(game_ideal(coloring_game(g, 2))));
  // K4 minus an edge admits three colors, K4 does not
  Graph h(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(unit_in(game_ideal(coloring_game(h, 3))));
  h.add_edge(2, 3);
  CHECK(unit_in(game_ideal(coloring_game(h, 3))));
}

TEST_CASE("dim_lc examples") {
  const auto k2 = complete_graph(2);
  const auto a = dim_lc(k2, complete_graph(3));
  CHECK(a.dim == QuotientDim{QuotientDim::Kind::finite, 6, 0});
  CHECK(a.predicted == mpz_class(6));
  CHECK_FALSE(a.hard_failure());
  const auto b = dim_lc(k2, cycle_graph(5));
  CHECK(b.dim == QuotientDim{QuotientDim::Kind::finite, 10, 0});
  CHECK(b.predicted == mpz_class(10));
  const auto c = dim_lc(k2, tensor_product(k2, k2));
  CHECK(c.dim == QuotientDim{QuotientDim::Kind::finite, 4, 0});
  const auto d = dim_lc(k2, k2);
  CHECK(d.dim.count * d.dim.count == c.dim.count);
  CHECK_FALSE(dim_lc(cycle_graph(5), complete_graph(3)).has_prediction());
}

TEST_CASE("complete-graph dimensions follow the falling factorial") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t c = 1; c <= 5; ++c) {
      const auto r = dim_lc(complete_graph(n), complete_graph(c));
      INFO("K" << n << " K" << c);
      REQUIRE(r.dim.kind == QuotientDim::Kind::finite);
      CHECK(r.dim.count == falling_factorial(c, n));
      CHECK(r.predicted == falling_factorial(c, n));
    }
}

TEST_CASE("clique_formula_dim examples") {
  CHECK(clique_formula_dim(1, cycle_graph(5)) == 5);
  CHECK(clique_formula_dim(2, cycle_graph(5)) == 10);
  CHECK(clique_formula_dim(3, complete_graph(4)) == 24);
  CHECK(clique_formula_dim(3, cycle_graph(5)) == 0);
  CHECK_THROWS_AS(clique_formula_dim(0, cycle_graph(5)), Error);
  CHECK(falling_factorial(3, 4) == 0);
  CHECK(falling_factorial(5, 3) == 60);
}

TEST_CASE("clique formula agrees with normal-word counts") {
  const std::vector<Graph> targets{cycle_graph(5), strong_product(complete_graph(2), complete_graph(2)),
                                   cartesian_product(complete_graph(2), complete_graph(3)), cycle_graph(4)};
  for (const auto& h : targets)
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto r = dim_lc(complete_graph(n), h);
      REQUIRE(r.dim.kind == QuotientDim::Kind::finite);
      CHECK(r.dim.count == clique_formula_dim(n, h));
    }
}

TEST_CASE("coloring_functional_check examples") {
  const auto k3 = complete_graph(3);
  CHECK(coloring_functional_check(k3, k3, {0, 1, 2}, lc_ideal(coloring_game(k3, 3))));
  const auto k2 = complete_graph(2);
  const auto spec = lc_ideal(homomorphism_game(k3, k2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) CHECK_FALSE(coloring_functional_check(k3, k2, {a, b, c}, spec));
  const auto c5 = cycle_graph(5);
  const auto phi = greedy_coloring(c5);
  REQUIRE(color_count(phi) <= 3);
  CHECK(coloring_functional_check(c5, k3, phi, game_ideal(coloring_game(c5, 3))));
  CHECK(coloring_functional_check(c5, k3, phi, lc_ideal(coloring_game(c5, 3))));
}

TEST_CASE("classical colorings pass the functional check on random graphs") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(rng, 2 + t % 6, 0.5);
    const auto c = classical_chromatic(g);
    const auto h = complete_graph(std::max<std::size_t>(c.value, 1));
    CHECK(coloring_functional_check(g, h, c.coloring, game_ideal(homomorphism_game(g, h))));
    CHECK(coloring_functional_check(g, h, c.coloring, lc_ideal(homomorphism_game(g, h))));
  }
}

TEST_CASE("structural cross-checks") {
  for (const auto& e : structural_crosschecks()) {
    INFO(e.name << ": expected " << e.expected << ", observed " << e.observed);
    CHECK(e.pass);
  }
}
