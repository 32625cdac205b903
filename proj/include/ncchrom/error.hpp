#pragma once

#include <stdexcept>
#include <string>

namespace ncchrom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (polynomials, graphs, games, basis files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncchrom
