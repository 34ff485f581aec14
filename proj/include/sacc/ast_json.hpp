#pragma once

#include <string>

#include "sacc/ast.hpp"

namespace sacc {

// Deterministic JSON: {"kind": ..., "lexeme": ..., "children": [...]},
// keys in that order, children order preserved.
std::string ast_to_json(const AstNode& root, int indent = -1);

}  // namespace sacc
