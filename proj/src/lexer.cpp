#include "sacc/lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

#include "sacc/error.hpp"

namespace sacc {
namespace {

const std::unordered_set<std::string> kKeywords = {
    "int",  "char", "float",  "double", "void",   "long",     "short",    "signed", "unsigned",
    "const", "if",  "else",   "while",  "for",    "do",       "return",   "break",  "continue",
    "sizeof", "struct",
};

// longest first so maximal munch falls out of the scan order
const std::array<const char*, 16> kMultiOps = {
    "<=", ">=", "==", "!=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "->", "<<", ">>",
};

const std::string kSingleOps = "+-*/%<>=!&|^~?:.";
const std::string kPunct = "(){}[],;";

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

bool is_c_keyword(const std::string& word) { return kKeywords.count(word) > 0; }

TokenList lex(const std::string& text) {
    TokenList tokens;
    size_t i = 0;
    int line = 1, col = 1;

    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; k++) {
            if (text[i + k] == '\n') {
                line++;
                col = 1;
            } else {
                col++;
            }
        }
        i += n;
    };

    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }

        int tline = line, tcol = col;
        if (is_ident_start(c)) {
            size_t j = i;
            while (j < text.size() && is_ident_char(text[j])) j++;
            std::string word = text.substr(i, j - i);
            tokens.push_back({is_c_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
                              word, tline, tcol});
            advance(j - i);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            size_t j = i;
            bool is_float = false;
            if (text[j] == '0' && j + 1 < text.size() && (text[j + 1] == 'x' || text[j + 1] == 'X')) {
                j += 2;
                while (j < text.size() && std::isxdigit(static_cast<unsigned char>(text[j]))) j++;
            } else {
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
                if (j < text.size() && text[j] == '.') {
                    is_float = true;
                    j++;
                    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
                }
                if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
                    size_t k = j + 1;
                    if (k < text.size() && (text[k] == '+' || text[k] == '-')) k++;
                    if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                        is_float = true;
                        j = k;
                        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) j++;
                    }
                }
            }
            tokens.push_back({is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral,
                              text.substr(i, j - i), tline, tcol});
            advance(j - i);
            continue;
        }

        if (c == '"' || c == '\'') {
            char quote = c;
            size_t j = i + 1;
            while (j < text.size() && text[j] != quote && text[j] != '\n') {
                if (text[j] == '\\' && j + 1 < text.size()) j++;
                j++;
            }
            if (j >= text.size() || text[j] != quote)
                throw Error("unterminated_literal",
                            quote == '"' ? "unterminated string literal" : "unterminated char literal",
                            tline, tcol);
            j++;
            tokens.push_back({quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral,
                              text.substr(i, j - i), tline, tcol});
            advance(j - i);
            continue;
        }

        bool matched = false;
        for (const char* op : kMultiOps) {
            size_t len = 2;
            if (text.compare(i, len, op) == 0) {
                tokens.push_back({TokenKind::Operator, op, tline, tcol});
                advance(len);
                matched = true;
                break;
            }
        }
        if (matched) continue;

        if (kSingleOps.find(c) != std::string::npos) {
            tokens.push_back({TokenKind::Operator, std::string(1, c), tline, tcol});
            advance(1);
            continue;
        }
        if (kPunct.find(c) != std::string::npos) {
            tokens.push_back({TokenKind::Punctuation, std::string(1, c), tline, tcol});
            advance(1);
            continue;
        }

        throw Error("unknown_character", std::string("unknown character '") + c + "'", tline, tcol);
    }
    return tokens;
}

}  // namespace sacc
