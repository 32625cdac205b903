#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ncchrom/graphs.hpp"
#include "ncchrom/polynomial.hpp"

namespace ncchrom {

/// Synchronous game with n inputs, m outputs and a dense rule table
/// (true = allowed).
class SynchronousGame {
 public:
  SynchronousGame(std::size_t inputs, std::size_t outputs)
      : n_(inputs), m_(outputs), allowed_(inputs * inputs * outputs * outputs, 1) {
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t a = 0; a < m_; ++a)
        for (std::size_t b = 0; b < m_; ++b) set(v, v, a, b, a == b);
  }

  std::size_t inputs() const { return n_; }
  std::size_t outputs() const { return m_; }
  GeneratorSpace space() const { return {n_, m_}; }

  bool allowed(std::size_t v, std::size_t w, std::size_t a, std::size_t b) const {
    return allowed_[index(v, w, a, b)] != 0;
  }
  void set(std::size_t v, std::size_t w, std::size_t a, std::size_t b, bool value) {
    allowed_[index(v, w, a, b)] = value ? 1 : 0;
  }
  void deny(std::size_t v, std::size_t w, std::size_t a, std::size_t b) { set(v, w, a, b, false); }

  /// lambda(v,w,a,b) == lambda(w,v,b,a) everywhere.
  bool is_symmetric() const {
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w)
        for (std::size_t a = 0; a < m_; ++a)
          for (std::size_t b = 0; b < m_; ++b)
            if (allowed(v, w, a, b) != allowed(w, v, b, a)) return false;
    return true;
  }

  friend bool operator==(const SynchronousGame&, const SynchronousGame&) = default;

 private:
  std::size_t index(std::size_t v, std::size_t w, std::size_t a, std::size_t b) const {
    if (v >= n_ || w >= n_ || a >= m_ || b >= m_) throw Error("game index out of range");
    return ((v * n_ + w) * m_ + a) * m_ + b;
  }

  std::size_t n_, m_;
  std::vector<char> allowed_;
};

struct SynchronicityViolation {
  std::size_t v, a, b;
  friend auto operator<=>(const SynchronicityViolation&, const SynchronicityViolation&) = default;
};

/// Every (v,a,b) where lambda(v,v,a,b) differs from [a == b].
inline std::vector<SynchronicityViolation> validate_synchronous(const SynchronousGame& g) {
  std::vector<SynchronicityViolation> out;
  for (std::size_t v = 0; v < g.inputs(); ++v)
    for (std::size_t a = 0; a < g.outputs(); ++a)
      for (std::size_t b = 0; b < g.outputs(); ++b)
        if (g.allowed(v, v, a, b) != (a == b)) out.push_back({v, a, b});
  return out;
}

inline SynchronousGame symmetrize(const SynchronousGame& g) {
  SynchronousGame out = g;
  for (std::size_t v = 0; v < g.inputs(); ++v)
    for (std::size_t w = 0; w < g.inputs(); ++w)
      for (std::size_t a = 0; a < g.outputs(); ++a)
        for (std::size_t b = 0; b < g.outputs(); ++b)
          out.set(v, w, a, b, g.allowed(v, w, a, b) && g.allowed(w, v, b, a));
  return out;
}

/// v ~ w iff v != w and some (a,b) is denied.
inline Graph input_adjacency(const SynchronousGame& g) {
  Graph out(g.inputs());
  for (std::size_t v = 0; v < g.inputs(); ++v)
    for (std::size_t w = 0; w < g.inputs(); ++w) {
      if (v == w) continue;
      bool denied = false;
      for (std::size_t a = 0; a < g.outputs() && !denied; ++a)
        for (std::size_t b = 0; b < g.outputs() && !denied; ++b) denied = !g.allowed(v, w, a, b);
      if (denied) out.add_edge(v, w);
    }
  return out;
}

/// Inputs are the vertices of G, outputs the c colors; adjacent vertices may
/// not share a color.
inline SynchronousGame coloring_game(const Graph& g, std::size_t colors) {
  if (colors < 1) throw Error("coloring game needs at least one color");
  SynchronousGame game(g.vertex_count(), colors);
  for (auto [u, v] : g.edges())
    for (std::size_t a = 0; a < colors; ++a) {
      game.deny(u, v, a, a);
      game.deny(v, u, a, a);
    }
  return game;
}

/// Adjacent inputs must produce adjacent outputs in H.
inline SynchronousGame homomorphism_game(const Graph& g, const Graph& h) {
  if (h.vertex_count() < 1) throw Error("homomorphism target must be nonempty");
  SynchronousGame game(g.vertex_count(), h.vertex_count());
  for (auto [u, v] : g.edges())
    for (std::size_t a = 0; a < h.vertex_count(); ++a)
      for (std::size_t b = 0; b < h.vertex_count(); ++b)
        if (!h.adjacent(a, b)) {
          game.deny(u, v, a, b);
          game.deny(v, u, b, a);
        }
  return game;
}

enum class IdealFlavor { plain, locally_commuting };

struct IdealSpec {
  GeneratorSpace space;
  std::vector<Polynomial> generators;
  IdealFlavor flavor = IdealFlavor::plain;
};

/// Free-algebra presentation of the game ideal: idempotents, sum-to-one, and
/// every denied product x[v,a]x[w,b] (including v == w, a != b).
inline IdealSpec game_ideal(const SynchronousGame& g) {
  if (!g.is_symmetric()) throw Error("game is not symmetric: symmetrize first");
  const auto space = g.space();
  IdealSpec spec{space, {}, IdealFlavor::plain};
  for (std::size_t v = 0; v < g.inputs(); ++v)
    for (std::size_t a = 0; a < g.outputs(); ++a) {
      const Letter x = space.letter(v, a);
      spec.generators.push_back(Polynomial::monomial(Word{x, x}) - Polynomial::letter(x));
    }
  for (std::size_t v = 0; v < g.inputs(); ++v) {
    Polynomial sum = Polynomial::constant(1);
    for (std::size_t a = 0; a < g.outputs(); ++a) sum -= Polynomial::letter(space.letter(v, a));
    spec.generators.push_back(std::move(sum));
  }
  for (std::size_t v = 0; v < g.inputs(); ++v)
    for (std::size_t w = 0; w < g.inputs(); ++w)
      for (std::size_t a = 0; a < g.outputs(); ++a)
        for (std::size_t b = 0; b < g.outputs(); ++b)
          if (!g.allowed(v, w, a, b))
            spec.generators.push_back(Polynomial::monomial(Word{space.letter(v, a), space.letter(w, b)}));
  return spec;
}

/// Game ideal plus [x[v,a], x[w,b]] for every adjacent pair v < w.
inline IdealSpec lc_ideal(const SynchronousGame& g) {
  IdealSpec spec = game_ideal(g);
  spec.flavor = IdealFlavor::locally_commuting;
  const Graph adj = input_adjacency(g);
  const auto space = g.space();
  for (auto [v, w] : adj.edges())
    for (std::size_t a = 0; a < g.outputs(); ++a)
      for (std::size_t b = 0; b < g.outputs(); ++b) {
        const Letter x = space.letter(v, a), y = space.letter(w, b);
        spec.generators.push_back(Polynomial::monomial(Word{x, y}) - Polynomial::monomial(Word{y, x}));
      }
  return spec;
}

inline IdealSpec ideal_for(const SynchronousGame& g, IdealFlavor flavor) {
  return flavor == IdealFlavor::plain ? game_ideal(g) : lc_ideal(g);
}

// ---------------------------------------------------------------------------
// Game file: "game <n> <m>" then "deny v w a b" for off-diagonal denials.

inline SynchronousGame parse_game(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<SynchronousGame> game;
  auto fail = [&](const std::string& what) {
    throw ParseError("game line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag) || tag[0] == '#') continue;
    std::string rest;
    if (tag == "game") {
      long long n = -1, m = -1;
      if (game) fail("duplicate 'game' header");
      if (!(ss >> n >> m) || (ss >> rest) || n < 0 || m < 1) fail("expected 'game <n> <m>'");
      game.emplace(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
    } else if (tag == "deny") {
      if (!game) fail("'deny' before 'game' header");
      long long v, w, a, b;
      if (!(ss >> v >> w >> a >> b) || (ss >> rest)) fail("expected 'deny v w a b'");
      if (v < 0 || w < 0 || a < 0 || b < 0 || static_cast<std::size_t>(v) >= game->inputs() ||
          static_cast<std::size_t>(w) >= game->inputs() || static_cast<std::size_t>(a) >= game->outputs() ||
          static_cast<std::size_t>(b) >= game->outputs())
        fail("index out of range in '" + line + "'");
      if (v == w) fail("diagonal entries are implied; got '" + line + "'");
      game->deny(v, w, a, b);
    } else {
      fail("unrecognized line '" + line + "'");
    }
  }
  if (!game) throw ParseError("game: missing 'game <n> <m>' header");
  return *game;
}

inline SynchronousGame parse_game(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

inline SynchronousGame load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read game file '" + path + "'");
  return parse_game(in);
}

inline std::string serialize_game(const SynchronousGame& g) {
  std::string out = "game " + std::to_string(g.inputs()) + " " + std::to_string(g.outputs()) + "\n";
  for (std::size_t v = 0; v < g.inputs(); ++v)
    for (std::size_t w = 0; w < g.inputs(); ++w) {
      if (v == w) continue;
      for (std::size_t a = 0; a < g.outputs(); ++a)
        for (std::size_t b = 0; b < g.outputs(); ++b)
          if (!g.allowed(v, w, a, b))
            out += "deny " + std::to_string(v) + " " + std::to_string(w) + " " + std::to_string(a) + " " +
                   std::to_string(b) + "\n";
    }
  return out;
}

}  // namespace ncchrom
