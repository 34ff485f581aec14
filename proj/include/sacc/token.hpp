#pragma once

#include <string>
#include <vector>

namespace sacc {

enum class TokenKind {
    Keyword,
    Identifier,
    IntLiteral,
    FloatLiteral,
    CharLiteral,
    StringLiteral,
    Operator,
    Punctuation,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    int line = 1;  // 1-based, into the preprocessed text
    int col = 1;

    bool is(TokenKind k, const std::string& text) const {
        return kind == k && lexeme == text;
    }
};

using TokenList = std::vector<Token>;

}  // namespace sacc
