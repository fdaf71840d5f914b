#pragma once
// Concrete syntax.
//
//   term := atom+                          (application, left-associative)
//   atom := name | "\" name "." term | "(" term ")" | atom "[" binder "/" term "]"
//
// Names match [a-zA-Z][a-zA-Z0-9']*; the binder of a jump may also be "_"
// (anonymous) when the parser is opened in anonymous mode. A lambda body
// extends as far right as possible, so "\x. x [y/z]" is \x.(x[y/z]); the
// bracket suffix binds tighter than application, so "x y[z/w]" is x (y[z/w]).

#include <string>

#include "lj/term.hpp"

namespace lj {

// Syntax errors carry 1-based line:column of the offending token.
struct ParseError : TermError {
  using TermError::TermError;
};

TermPtr parse_term(const std::string& src, bool allow_anonymous = false);

// Minimal-parentheses printer; parse_term(print_term(t)) is t, node for node.
std::string print_term(const TermPtr& t);

}  // namespace lj
