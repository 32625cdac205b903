#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "ncchrom/ncgb/basis.hpp"

namespace ncchrom {

// Basis file:
//   order: deglex                (or "order: deglex ranking=r0,r1,...")
//   generators: <n> <m>
//   status: complete | bounded:<d>
//   one polynomial per line, ascending lead

inline std::string order_header(const DegLexOrder& order) {
  std::string out = "deglex";
  if (!order.is_default()) {
    out += " ranking=";
    for (std::size_t i = 0; i < order.ranking().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(order.ranking()[i]);
    }
  }
  return out;
}

inline std::string serialize_basis(const GroebnerBasis& basis) {
  std::string out;
  out += "order: " + order_header(basis.order()) + "\n";
  out += "generators: " + std::to_string(basis.space().inputs) + " " +
         std::to_string(basis.space().outputs) + "\n";
  out += "status: " + basis.status().to_string() + "\n";
  for (const auto& r : basis.rules()) out += to_string(r.poly, basis.space(), basis.order()) + "\n";
  return out;
}

namespace detail {

inline std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  return s.substr(i);
}

[[noreturn]] inline void basis_fail(std::size_t line, const std::string& what) {
  throw ParseError("basis file line " + std::to_string(line) + ": " + what);
}

inline std::string expect_header(std::istream& in, std::size_t line, const std::string& key) {
  std::string text;
  if (!std::getline(in, text)) basis_fail(line, "missing '" + key + ":' header");
  text = strip(text);
  const std::string prefix = key + ":";
  if (text.rfind(prefix, 0) != 0) basis_fail(line, "expected '" + key + ":' header, got '" + text + "'");
  return strip(text.substr(prefix.size()));
}

}  // namespace detail

/// Parses a basis file. `expected_order`, when given, must match the header.
inline GroebnerBasis parse_basis(std::istream& in, const DegLexOrder* expected_order = nullptr) {
  const std::string order_text = detail::expect_header(in, 1, "order");
  DegLexOrder order;
  if (order_text != "deglex") {
    const std::string prefix = "deglex ranking=";
    if (order_text.rfind(prefix, 0) != 0) detail::basis_fail(1, "unsupported order '" + order_text + "'");
    std::vector<Letter> ranking;
    std::stringstream ss(order_text.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!is_integer_text(item) || item[0] == '-') detail::basis_fail(1, "bad ranking entry '" + item + "'");
      ranking.push_back(static_cast<Letter>(std::stoul(item)));
    }
    try {
      order = DegLexOrder(std::move(ranking));
    } catch (const Error& e) {
      detail::basis_fail(1, e.what());
    }
  }
  if (expected_order && !(order == *expected_order)) detail::basis_fail(1, "order mismatch");

  GeneratorSpace space;
  {
    std::stringstream ss(detail::expect_header(in, 2, "generators"));
    std::string rest;
    if (!(ss >> space.inputs >> space.outputs) || (ss >> rest) || space.size() == 0)
      detail::basis_fail(2, "expected 'generators: <n> <m>' with n, m >= 1");
  }
  if (!order.is_default() && order.ranking().size() != space.size())
    detail::basis_fail(1, "ranking length does not match generator count");

  BasisStatus status;
  {
    const std::string s = detail::expect_header(in, 3, "status");
    if (s == "complete") {
      status = BasisStatus::complete();
    } else if (s.rfind("bounded:", 0) == 0 && is_integer_text(s.substr(8)) && s[8] != '-') {
      status = BasisStatus::bounded(std::stoul(s.substr(8)));
    } else {
      detail::basis_fail(3, "bad status '" + s + "'");
    }
  }

  std::vector<RewriteRule> rules;
  std::string text;
  for (std::size_t line = 4; std::getline(in, text); ++line) {
    text = detail::strip(text);
    if (text.empty()) continue;
    Polynomial p;
    try {
      p = parse_polynomial(text, space);
    } catch (const ParseError& e) {
      detail::basis_fail(line, e.what());
    }
    if (p.is_zero()) detail::basis_fail(line, "zero rule");
    auto [lead, coeff] = leading_term(p, order);
    if (coeff != 1) detail::basis_fail(line, "rule is not monic");
    rules.push_back({std::move(p), std::move(lead)});
  }
  return GroebnerBasis(space, std::move(order), std::move(rules), status);
}

inline GroebnerBasis parse_basis(const std::string& text, const DegLexOrder* expected_order = nullptr) {
  std::istringstream in(text);
  return parse_basis(in, expected_order);
}

inline void emit_basis(const GroebnerBasis& basis, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write basis file '" + path + "'");
  out << serialize_basis(basis);
}

inline GroebnerBasis load_basis(const std::string& path, const DegLexOrder* expected_order = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read basis file '" + path + "'");
  return parse_basis(in, expected_order);
}

}  // namespace ncchrom
