#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "homlink/polynomial.hpp"

namespace homlink {

/// Syntax error; `position` is a 0-based byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (whitespace insignificant, see docs/grammar.md):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := power (('*' power) | ('/' INTEGER))*
///   power   := primary ['^' INTEGER]
///   primary := INTEGER | IDENT | '(' expr ')'
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Splits on `sep` at parenthesis depth 0 and parses each piece. Empty
/// input (only whitespace) gives an empty list.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, const RingPtr& ring, char sep = ',');

/// Comma-separated identifiers, e.g. "x, y, z".
std::vector<std::string> parse_variable_list(const std::string& text);

}  // namespace homlink
