// sexpr.hpp
// Concrete syntax: s-expressions with symbol heads.
//
//   sexpr  := atom | '(' sexpr* ')'
//   symbol := [A-Za-z_][A-Za-z0-9_]*
//   int    := -?[0-9]+            (64-bit signed; out-of-range literals are errors)
//   string := '"' ... '"'         (escapes: \" and \\ only)
//
// Whitespace between tokens is space, tab or newline.  print_sexpr emits the
// canonical form: single spaces, no extra whitespace.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "optic/val.hpp"

namespace optic {

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(std::move(message)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Parses exactly one s-expression; trailing non-whitespace is an error.
// Throws ParseError with the byte offset of the defect.
Val parse_sexpr(std::string_view text);

// Canonical rendering.  Only Sym/Int/Str/List values are s-expressions;
// anything else is a logic error.
std::string print_sexpr(const Val& v);

bool is_sexpr_value(const Val& v);

}  // namespace optic
