#include <catch_amalgamated.hpp>

#include "ncchrom/polynomial.hpp"

using namespace ncchrom;

namespace {

const GeneratorSpace S24{2, 4};

Polynomial x(std::size_t v, std::size_t a, const GeneratorSpace& s = S24) {
  return Polynomial::letter(s.letter(v, a));
}

Word w(std::initializer_list<std::pair<std::size_t, std::size_t>> ls, const GeneratorSpace& s = S24) {
  Word out;
  for (auto [v, a] : ls) out.push_back(s.letter(v, a));
  return out;
}

}  // namespace

TEST_CASE("generator ids are dense vertex-major") {
  CHECK(S24.letter(0, 3) == 3);
  CHECK(S24.letter(1, 0) == 4);
  CHECK(S24.generator(6) == GeneratorId{1, 2});
  CHECK_THROWS_AS(S24.letter(2, 0), Error);
  CHECK_THROWS_AS(S24.letter(0, 4), Error);
}

TEST_CASE("word_compare: degree first, then letters") {
  const DegLexOrder o;
  CHECK(word_compare(o, w({{0, 3}}), w({{0, 0}, {0, 0}})) < 0);
  CHECK(word_compare(o, w({{0, 0}, {1, 1}}), w({{0, 1}, {0, 0}})) < 0);
  CHECK(word_compare(o, Word{}, w({{0, 0}})) < 0);
  CHECK(word_compare(o, w({{1, 2}, {0, 1}}), w({{1, 2}, {0, 1}})) == 0);
}

TEST_CASE("custom ranking reverses letter comparisons") {
  const DegLexOrder rev(std::vector<Letter>{1, 0});
  const Word a{0}, b{1};
  CHECK(rev.less(b, a));
  CHECK(rev.less(a, Word{0, 0}));
  CHECK(rev.from_rank_space(rev.to_rank_space(Word{0, 1, 1})) == Word{0, 1, 1});
  CHECK(DegLexOrder(std::vector<Letter>{0, 1, 2}).is_default());
  CHECK_THROWS_AS(DegLexOrder(std::vector<Letter>{0, 0}), Error);
  CHECK_THROWS_AS(DegLexOrder(std::vector<Letter>{0, 2}), Error);
}

TEST_CASE("poly_add drops zero terms") {
  CHECK(poly_add(x(0, 0), -x(0, 0)).is_zero());
  CHECK(poly_add(x(0, 0) * x(0, 0) - x(0, 0), x(0, 0)) == x(0, 0) * x(0, 0));
  const Polynomial half = Polynomial::constant(Scalar(1, 2));
  CHECK(poly_add(half, half) == Polynomial::constant(1));
}

TEST_CASE("poly_mul is concatenation, noncommutative") {
  const auto p = poly_mul(x(0, 0), x(0, 1));
  REQUIRE(p.size() == 1);
  CHECK(p.front().word == w({{0, 0}, {0, 1}}));
  CHECK(p.front().coeff == 1);
  CHECK(p != poly_mul(x(0, 1), x(0, 0)));

  const auto q = x(1, 1) * x(0, 2) - Polynomial::constant(3);
  CHECK(poly_mul(Polynomial::constant(1), q) == q);

  const auto lhs = poly_mul(x(0, 0) + x(0, 1), x(1, 0) + x(1, 1));
  const auto rhs = x(0, 0) * x(1, 0) + x(0, 0) * x(1, 1) + x(0, 1) * x(1, 0) + x(0, 1) * x(1, 1);
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 4);
}

TEST_CASE("terms are stored strictly descending, no zeros") {
  auto p = Polynomial::from_terms({{Word{}, 1}, {Word{2}, 3}, {Word{0, 1}, 0}, {Word{2}, -1}, {Word{1, 1}, 5}});
  REQUIRE(p.size() == 3);
  CHECK(p.terms()[0].word == Word{1, 1});
  CHECK(p.terms()[1].word == Word{2});
  CHECK(p.terms()[1].coeff == 2);
  CHECK(p.terms()[2].word.empty());
}

TEST_CASE("leading_term") {
  const auto item3 = x(1, 3) + x(1, 2) + x(1, 1) + x(1, 0) - Polynomial::constant(1);
  auto [lw, lc] = leading_term(item3);
  CHECK(lw == w({{1, 3}}));
  CHECK(lc == 1);

  // degree-two part of the pair relation for (v, w) = (0, 1)
  const auto item5 = x(0, 2) * x(1, 1) + x(0, 2) * x(1, 0) + x(0, 1) * x(1, 2) + x(0, 1) * x(1, 0) +
                     x(0, 0) * x(1, 2) + x(0, 0) * x(1, 1) - x(0, 2) - x(1, 0) + Polynomial::constant(1);
  CHECK(leading_term(item5).first == w({{0, 2}, {1, 1}}));

  auto [cw, cc] = leading_term(Polynomial::constant(7));
  CHECK(cw.empty());
  CHECK(cc == 7);

  CHECK_THROWS_WITH(leading_term(Polynomial{}), Catch::Matchers::ContainsSubstring("no leading term"));
}

TEST_CASE("leading_term under a non-default ranking") {
  const GeneratorSpace s{1, 2};
  const DegLexOrder rev(std::vector<Letter>{1, 0});
  const auto p = x(0, 0, s) + x(0, 1, s);
  CHECK(leading_term(p).first == Word{1});
  CHECK(leading_term(p, rev).first == Word{0});
}

TEST_CASE("make_monic") {
  CHECK(make_monic(Scalar(2) * x(0, 0) - Polynomial::constant(2)) == x(0, 0) - Polynomial::constant(1));
  const auto idem = x(0, 0) * x(0, 0) - x(0, 0);
  CHECK(make_monic(idem) == idem);
  CHECK(make_monic(Scalar(-1, 3) * (x(0, 0) * x(1, 1))) == x(0, 0) * x(1, 1));
  CHECK_THROWS_AS(make_monic(Polynomial{}), Error);
}

TEST_CASE("text format") {
  const auto p = Scalar(-1, 2) * (x(0, 0) * x(1, 1)) + x(1, 3) - Polynomial::constant(3);
  CHECK(to_string(p, S24) == "-1/2*x[0,0]*x[1,1] + x[1,3] - 3");
  CHECK(to_string(Polynomial{}, S24) == "0");
  CHECK(to_string(Polynomial::constant(1), S24) == "1");
  CHECK(to_string(-x(0, 1), S24) == "-x[0,1]");
}

TEST_CASE("text parse round trip and errors") {
  const auto p = parse_polynomial("  2/4*x[0,0]*x[1,1] - x[1,3] + 1*x[0,2] -3 ", S24);
  CHECK(p.coefficient(w({{0, 0}, {1, 1}})) == Scalar(1, 2));
  CHECK(p.coefficient(w({{1, 3}})) == -1);
  CHECK(p.coefficient(Word{}) == -3);
  CHECK(parse_polynomial(to_string(p, S24), S24) == p);
  CHECK(parse_polynomial("0", S24).is_zero());
  CHECK(parse_polynomial("x[0,0] - x[0,0]", S24).is_zero());

  CHECK_THROWS_AS(parse_polynomial("x[2,0]", S24), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x[0,0] +", S24), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0*x[0,0]", S24), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y[0,0]", S24), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", S24), ParseError);
}

TEST_CASE("scalar text round trip is exact") {
  for (const char* t : {"0", "1", "-7", "22/7", "-1/3", "123456789012345678901234567891/2"}) {
    CHECK(scalar_to_string(parse_scalar(t)) == t);
  }
  CHECK(scalar_to_string(parse_scalar("6/4")) == "3/2");
  CHECK(scalar_to_string(parse_scalar("+5")) == "5");
  CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_scalar("abc"), ParseError);
}

TEST_CASE("sandwich preserves order and matches products") {
  const auto p = x(0, 1) * x(1, 0) - x(0, 2) + Polynomial::constant(4);
  const Word a = w({{1, 3}}), b = w({{0, 0}, {0, 0}});
  CHECK(sandwich(a, p, b) == Polynomial::monomial(a) * p * Polynomial::monomial(b));
}
