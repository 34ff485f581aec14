#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sacc {

enum class NodeKind : uint8_t {
    TranslationUnit,
    FuncDef,
    Decl,
    If,
    While,
    For,
    DoWhile,
    Return,
    Break,
    Continue,
    ExprStmt,
    Compound,
    BinaryOp,
    UnaryOp,
    Assign,
    Call,
    ArrayRef,
    Cast,
    ID,
    Constant,
    TypeName,
    ParamList,
};

const char* kind_name(NodeKind kind);
// Returns true and sets `out` when `name` is a known kind name.
bool kind_from_name(const std::string& name, NodeKind& out);

struct AstNode {
    NodeKind kind = NodeKind::TranslationUnit;
    // identifier name, literal text, operator symbol, or type name; empty for
    // purely structural nodes (and for plain `=` assignment)
    std::string lexeme;
    std::vector<AstNode> children;
    // token index range [first, last] covered by this node
    int span_begin = 0;
    int span_end = 0;
};

inline bool is_statement_kind(NodeKind k) {
    switch (k) {
        case NodeKind::FuncDef:
        case NodeKind::Decl:
        case NodeKind::If:
        case NodeKind::While:
        case NodeKind::For:
        case NodeKind::DoWhile:
        case NodeKind::Return:
        case NodeKind::Break:
        case NodeKind::Continue:
        case NodeKind::ExprStmt:
        case NodeKind::Compound:
            return true;
        default:
            return false;
    }
}

void visit_preorder(const AstNode& node, const std::function<void(const AstNode&)>& fn);
size_t count_nodes(const AstNode& node);

// kinds and lexemes equal over the whole tree (spans ignored)
bool structurally_equal(const AstNode& a, const AstNode& b);

}  // namespace sacc
