#include "sacc/ast.hpp"

#include <array>
#include <utility>

namespace sacc {
namespace {

constexpr std::array<std::pair<NodeKind, const char*>, 22> kKindNames = {{
    {NodeKind::TranslationUnit, "TranslationUnit"},
    {NodeKind::FuncDef, "FuncDef"},
    {NodeKind::Decl, "Decl"},
    {NodeKind::If, "If"},
    {NodeKind::While, "While"},
    {NodeKind::For, "For"},
    {NodeKind::DoWhile, "DoWhile"},
    {NodeKind::Return, "Return"},
    {NodeKind::Break, "Break"},
    {NodeKind::Continue, "Continue"},
    {NodeKind::ExprStmt, "ExprStmt"},
    {NodeKind::Compound, "Compound"},
    {NodeKind::BinaryOp, "BinaryOp"},
    {NodeKind::UnaryOp, "UnaryOp"},
    {NodeKind::Assign, "Assign"},
    {NodeKind::Call, "Call"},
    {NodeKind::ArrayRef, "ArrayRef"},
    {NodeKind::Cast, "Cast"},
    {NodeKind::ID, "ID"},
    {NodeKind::Constant, "Constant"},
    {NodeKind::TypeName, "TypeName"},
    {NodeKind::ParamList, "ParamList"},
}};

}  // namespace

const char* kind_name(NodeKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

bool kind_from_name(const std::string& name, NodeKind& out) {
    for (const auto& [k, n] : kKindNames) {
        if (name == n) {
            out = k;
            return true;
        }
    }
    return false;
}

void visit_preorder(const AstNode& node, const std::function<void(const AstNode&)>& fn) {
    fn(node);
    for (const auto& child : node.children) visit_preorder(child, fn);
}

size_t count_nodes(const AstNode& node) {
    size_t n = 0;
    visit_preorder(node, [&](const AstNode&) { n++; });
    return n;
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
    if (a.kind != b.kind || a.lexeme != b.lexeme || a.children.size() != b.children.size())
        return false;
    for (size_t i = 0; i < a.children.size(); i++)
        if (!structurally_equal(a.children[i], b.children[i])) return false;
    return true;
}

}  // namespace sacc
