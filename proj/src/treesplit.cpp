#include "sacc/treesplit.hpp"

#include <json.hpp>

#include "sacc/error.hpp"

namespace sacc {
namespace {

class Splitter {
public:
    StatementSequence run(const AstNode& root) {
        if (root.kind != NodeKind::TranslationUnit)
            throw Error("not_translation_unit", "split expects a TranslationUnit root");
        if (root.children.empty())
            throw Error("empty_program", "translation unit has no declarations");

        AstNode synthetic;
        synthetic.kind = NodeKind::TranslationUnit;
        int tu = add_tree(std::move(synthetic), -1);
        for (const AstNode& item : root.children) visit_statement(item, tu);
        return std::move(seq_);
    }

private:
    StatementSequence seq_;

    int add_tree(AstNode nodes, int parent) {
        StatementTree tree;
        tree.index = static_cast<int>(seq_.trees.size());
        tree.header_kind = nodes.kind;
        tree.nodes = std::move(nodes);
        seq_.trees.push_back(std::move(tree));
        seq_.parent.push_back(parent);
        return static_cast<int>(seq_.trees.size()) - 1;
    }

    static AstNode header_of(const AstNode& stmt, size_t keep_children) {
        AstNode header;
        header.kind = stmt.kind;
        header.lexeme = stmt.lexeme;
        header.span_begin = stmt.span_begin;
        header.span_end = stmt.span_end;
        header.children.assign(stmt.children.begin(),
                               stmt.children.begin() + static_cast<long>(keep_children));
        return header;
    }

    // a body is either a compound block or a single unbraced statement
    void visit_body(const AstNode& body, int parent) {
        if (body.kind == NodeKind::Compound) {
            for (const AstNode& child : body.children) visit_statement(child, parent);
        } else {
            visit_statement(body, parent);
        }
    }

    void visit_statement(const AstNode& stmt, int parent) {
        switch (stmt.kind) {
            case NodeKind::FuncDef: {
                // children: [return type, params, body]
                int idx = add_tree(header_of(stmt, stmt.children.size() - 1), parent);
                visit_body(stmt.children.back(), idx);
                return;
            }
            case NodeKind::If: {
                int idx = add_tree(header_of(stmt, 1), parent);
                visit_body(stmt.children[1], idx);
                if (stmt.children.size() > 2) visit_body(stmt.children[2], idx);
                return;
            }
            case NodeKind::While: {
                int idx = add_tree(header_of(stmt, 1), parent);
                visit_body(stmt.children[1], idx);
                return;
            }
            case NodeKind::DoWhile: {
                // children: [body, cond]; the header keeps the condition
                AstNode header;
                header.kind = stmt.kind;
                header.span_begin = stmt.span_begin;
                header.span_end = stmt.span_end;
                header.children.push_back(stmt.children[1]);
                int idx = add_tree(std::move(header), parent);
                visit_body(stmt.children[0], idx);
                return;
            }
            case NodeKind::For: {
                // children: [init, cond, update, body]
                int idx = add_tree(header_of(stmt, 3), parent);
                visit_body(stmt.children[3], idx);
                return;
            }
            case NodeKind::Compound:
                // a naked block adds no tree of its own
                for (const AstNode& child : stmt.children) visit_statement(child, parent);
                return;
            default:
                // Decl, ExprStmt, Return, Break, Continue: leaf statement tree
                add_tree(stmt, parent);
                return;
        }
    }
};

}  // namespace

StatementSequence split(const AstNode& root) { return Splitter().run(root); }

std::vector<std::vector<uint8_t>> adjacency(const StatementSequence& seq, bool ancestor_closure) {
    return adjacency_from_parents(seq.parent, ancestor_closure);
}

std::vector<std::vector<uint8_t>> adjacency_from_parents(const std::vector<int>& parent,
                                                         bool ancestor_closure) {
    size_t n = parent.size();
    std::vector<std::vector<uint8_t>> adj(n, std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; i++) adj[i][i] = 1;
    for (size_t i = 1; i < n; i++) {
        if (ancestor_closure) {
            for (int a = parent[i]; a >= 0; a = parent[a]) {
                adj[i][a] = adj[a][i] = 1;
            }
        } else {
            int p = parent[i];
            adj[i][p] = adj[p][i] = 1;
        }
    }
    return adj;
}

std::string node_token(const AstNode& node) {
    if (node.kind == NodeKind::ID) return node.lexeme;
    if (node.lexeme.empty()) return kind_name(node.kind);
    return std::string(kind_name(node.kind)) + ":" + node.lexeme;
}

std::vector<std::string> tree_tokens(const StatementTree& tree) {
    std::vector<std::string> tokens;
    visit_preorder(tree.nodes, [&](const AstNode& node) { tokens.push_back(node_token(node)); });
    return tokens;
}

std::string split_to_json(const StatementSequence& seq, bool ancestor_closure, int indent) {
    nlohmann::ordered_json j;
    auto& trees = j["trees"] = nlohmann::ordered_json::array();
    for (const auto& tree : seq.trees) {
        nlohmann::ordered_json t;
        t["index"] = tree.index;
        t["header_kind"] = kind_name(tree.header_kind);
        t["tokens"] = tree_tokens(tree);
        trees.push_back(std::move(t));
    }
    auto& parent = j["parent"] = nlohmann::ordered_json::array();
    for (int p : seq.parent) {
        if (p < 0)
            parent.push_back(nullptr);
        else
            parent.push_back(p);
    }
    // undirected edges once each; self-loops implicit
    auto adj = adjacency(seq, ancestor_closure);
    auto& edges = j["adj_edges"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < adj.size(); i++)
        for (size_t k = i + 1; k < adj.size(); k++)
            if (adj[i][k]) edges.push_back(nlohmann::ordered_json::array({i, k}));
    return j.dump(indent);
}

}  // namespace sacc
