#include "sacc/ast_json.hpp"

#include <json.hpp>

namespace sacc {
namespace {

nlohmann::ordered_json to_json(const AstNode& node) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(node.kind);
    j["lexeme"] = node.lexeme;
    auto& children = j["children"] = nlohmann::ordered_json::array();
    for (const auto& child : node.children) children.push_back(to_json(child));
    return j;
}

}  // namespace

std::string ast_to_json(const AstNode& root, int indent) {
    return to_json(root).dump(indent);
}

}  // namespace sacc
