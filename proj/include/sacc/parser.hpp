#pragma once

#include <string>

#include "sacc/ast.hpp"
#include "sacc/token.hpp"

namespace sacc {

// Recursive-descent parser for the C subset: function definitions, scalar and
// 1-D/2-D array declarations with initializers, the usual statements
// (if/else, while, for, do-while, return, break, continue, blocks, expression
// statements), and expressions with standard C precedence. Pointers appear in
// parameter types and unary * / & only; no typedefs, no struct bodies.
AstNode parse(const TokenList& tokens);

// preprocess + lex + parse
AstNode parse_source(const std::string& source);

}  // namespace sacc
