#pragma once

#include <string>
#include <vector>

#include "sacc/ast.hpp"

namespace sacc {

// One statement's subtree with any nested block bodies removed. Headers keep
// their condition/init/update expressions and declarations.
struct StatementTree {
    int index = 0;
    NodeKind header_kind = NodeKind::TranslationUnit;
    AstNode nodes;
};

// Statement trees in source pre-order plus the nesting relation between them.
// parent[0] == -1 (the synthetic root); parent[i] < i for i > 0.
struct StatementSequence {
    std::vector<StatementTree> trees;
    std::vector<int> parent;

    size_t size() const { return trees.size(); }
};

// Splits an AST at statement granularity. Tree 0 is a synthetic
// TranslationUnit header that parents all top-level items; FuncDef and
// If/While/For/DoWhile headers parent their body statements (an else branch
// parents to the same If header). Throws Error("empty_program") when the
// translation unit has no children.
StatementSequence split(const AstNode& root);

// Undirected parent-child edges plus self-loops, as a dense boolean matrix.
// With `ancestor_closure`, every ancestor-descendant pair is connected
// instead of parent-child only.
std::vector<std::vector<uint8_t>> adjacency(const StatementSequence& seq,
                                            bool ancestor_closure = false);

// same construction from a bare parent array (parent[0] == -1, parent[i] < i)
std::vector<std::vector<uint8_t>> adjacency_from_parents(const std::vector<int>& parent,
                                                         bool ancestor_closure = false);

// Token for a single AST node: structural nodes contribute their kind name,
// ID nodes their lexeme, and any other node carrying a lexeme contributes
// "<Kind>:<lexeme>" (operators, constants, type names).
std::string node_token(const AstNode& node);

// Pre-order token list over one statement tree.
std::vector<std::string> tree_tokens(const StatementTree& tree);

std::string split_to_json(const StatementSequence& seq, bool ancestor_closure = false,
                          int indent = -1);

}  // namespace sacc
