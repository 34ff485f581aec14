#include "sacc/parser.hpp"

#include <unordered_set>

#include "sacc/error.hpp"
#include "sacc/lexer.hpp"
#include "sacc/preprocess.hpp"

namespace sacc {
namespace {

const std::unordered_set<std::string> kTypeWords = {
    "int", "char", "float", "double", "void", "long", "short", "signed", "unsigned", "const",
};

class Parser {
public:
    explicit Parser(const TokenList& tokens) : tokens_(tokens) {}

    AstNode run() {
        AstNode tu = make(NodeKind::TranslationUnit);
        while (!at_end()) tu.children.push_back(external_decl());
        tu.span_end = static_cast<int>(tokens_.size()) - 1;
        return tu;
    }

private:
    const TokenList& tokens_;
    size_t pos_ = 0;

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek(size_t ahead = 0) const {
        static const Token eof{TokenKind::Punctuation, "", 0, 0};
        return pos_ + ahead < tokens_.size() ? tokens_[pos_ + ahead] : eof;
    }
    const Token& advance() { return tokens_[pos_++]; }

    bool at(TokenKind kind, const std::string& text) const {
        return !at_end() && peek().is(kind, text);
    }
    bool at_op(const std::string& text) const { return at(TokenKind::Operator, text); }
    bool at_punct(const std::string& text) const { return at(TokenKind::Punctuation, text); }
    bool at_keyword(const std::string& text) const { return at(TokenKind::Keyword, text); }

    bool accept(TokenKind kind, const std::string& text) {
        if (at(kind, text)) {
            pos_++;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        if (at_end()) {
            int line = tokens_.empty() ? 1 : tokens_.back().line;
            throw Error("syntax", "expected " + expected + ", found end of input", line, 0);
        }
        const Token& t = peek();
        throw Error("syntax", "expected " + expected + ", found '" + t.lexeme + "'", t.line, t.col);
    }

    Token expect(TokenKind kind, const std::string& text) {
        if (!at(kind, text)) fail("'" + text + "'");
        return advance();
    }
    Token expect_identifier() {
        if (at_end() || peek().kind != TokenKind::Identifier) fail("identifier");
        return advance();
    }

    AstNode make(NodeKind kind, std::string lexeme = "") const {
        AstNode n;
        n.kind = kind;
        n.lexeme = std::move(lexeme);
        n.span_begin = n.span_end = static_cast<int>(pos_);
        return n;
    }
    AstNode close(AstNode n, size_t start) const {
        n.span_begin = static_cast<int>(start);
        n.span_end = static_cast<int>(pos_) - 1;
        return n;
    }

    bool at_type_start() const {
        return !at_end() && ((peek().kind == TokenKind::Keyword && kTypeWords.count(peek().lexeme)) ||
                             at_keyword("struct"));
    }

    // canonical type text: words space-joined, '*' appended per pointer level
    std::string parse_type_text() {
        std::string text;
        if (!at_type_start()) fail("type name");
        while (at_type_start()) {
            if (!text.empty()) text += ' ';
            if (at_keyword("struct")) {
                advance();
                text += "struct " + expect_identifier().lexeme;
            } else {
                text += advance().lexeme;
            }
        }
        while (at_op("*")) {
            advance();
            text += '*';
        }
        return text;
    }

    AstNode external_decl() {
        size_t start = pos_;
        std::string type = parse_type_text();
        Token name = expect_identifier();
        if (at_punct("(")) {
            AstNode fn = make(NodeKind::FuncDef, name.lexeme);
            AstNode ret = make(NodeKind::TypeName, type);
            fn.children.push_back(close(std::move(ret), start));
            fn.children.push_back(param_list());
            if (!at_punct("{")) fail("function body");
            fn.children.push_back(compound());
            return close(std::move(fn), start);
        }
        return decl_after_first_name(type, name, start);
    }

    AstNode param_list() {
        size_t start = pos_;
        expect(TokenKind::Punctuation, "(");
        AstNode params = make(NodeKind::ParamList);
        if (at_keyword("void") && peek(1).is(TokenKind::Punctuation, ")")) advance();
        if (!at_punct(")")) {
            do {
                params.children.push_back(param());
            } while (accept(TokenKind::Punctuation, ","));
        }
        expect(TokenKind::Punctuation, ")");
        return close(std::move(params), start);
    }

    AstNode param() {
        size_t start = pos_;
        AstNode decl = make(NodeKind::Decl);
        std::string type = parse_type_text();
        AstNode type_node = make(NodeKind::TypeName, type);
        decl.children.push_back(close(std::move(type_node), start));
        if (!at_end() && peek().kind == TokenKind::Identifier) {
            AstNode d = make(NodeKind::ID, advance().lexeme);
            while (at_punct("[")) {
                advance();
                AstNode arr = make(NodeKind::ArrayRef);
                arr.children.push_back(std::move(d));
                if (!at_punct("]")) arr.children.push_back(assignment());
                expect(TokenKind::Punctuation, "]");
                d = std::move(arr);
            }
            decl.children.push_back(close(std::move(d), start));
        }
        return close(std::move(decl), start);
    }

    // remaining declarators of `type name...`; consumes the closing ';'
    AstNode decl_after_first_name(const std::string& type, const Token& first, size_t start) {
        AstNode decl = make(NodeKind::Decl);
        AstNode type_node = make(NodeKind::TypeName, type);
        decl.children.push_back(close(std::move(type_node), start));
        decl.children.push_back(declarator(first));
        while (accept(TokenKind::Punctuation, ",")) {
            Token name = expect_identifier();
            decl.children.push_back(declarator(name));
        }
        expect(TokenKind::Punctuation, ";");
        return close(std::move(decl), start);
    }

    AstNode declaration() {
        size_t start = pos_;
        std::string type = parse_type_text();
        Token name = expect_identifier();
        return decl_after_first_name(type, name, start);
    }

    // ID with optional array suffixes and optional `= init`
    AstNode declarator(const Token& name) {
        size_t start = pos_ == 0 ? 0 : pos_ - 1;
        AstNode d = make(NodeKind::ID, name.lexeme);
        while (at_punct("[")) {
            advance();
            AstNode arr = make(NodeKind::ArrayRef);
            arr.children.push_back(std::move(d));
            if (!at_punct("]")) arr.children.push_back(assignment());
            expect(TokenKind::Punctuation, "]");
            d = std::move(arr);
        }
        if (at_op("=")) {
            advance();
            AstNode init = make(NodeKind::Assign);
            init.children.push_back(std::move(d));
            init.children.push_back(assignment());
            d = std::move(init);
        }
        return close(std::move(d), start);
    }

    AstNode compound() {
        size_t start = pos_;
        expect(TokenKind::Punctuation, "{");
        AstNode block = make(NodeKind::Compound);
        while (!at_punct("}")) {
            if (at_end()) fail("'}'");
            block.children.push_back(statement());
        }
        expect(TokenKind::Punctuation, "}");
        return close(std::move(block), start);
    }

    AstNode empty_clause() { return make(NodeKind::ExprStmt); }

    AstNode statement() {
        size_t start = pos_;
        if (at_punct("{")) return compound();
        if (at_type_start()) return declaration();
        if (at_keyword("if")) {
            advance();
            expect(TokenKind::Punctuation, "(");
            AstNode n = make(NodeKind::If);
            n.children.push_back(expression());
            expect(TokenKind::Punctuation, ")");
            n.children.push_back(statement());
            if (accept(TokenKind::Keyword, "else")) n.children.push_back(statement());
            return close(std::move(n), start);
        }
        if (at_keyword("while")) {
            advance();
            expect(TokenKind::Punctuation, "(");
            AstNode n = make(NodeKind::While);
            n.children.push_back(expression());
            expect(TokenKind::Punctuation, ")");
            n.children.push_back(statement());
            return close(std::move(n), start);
        }
        if (at_keyword("do")) {
            advance();
            AstNode n = make(NodeKind::DoWhile);
            n.children.push_back(statement());
            expect(TokenKind::Keyword, "while");
            expect(TokenKind::Punctuation, "(");
            n.children.push_back(expression());
            expect(TokenKind::Punctuation, ")");
            expect(TokenKind::Punctuation, ";");
            return close(std::move(n), start);
        }
        if (at_keyword("for")) {
            advance();
            expect(TokenKind::Punctuation, "(");
            AstNode n = make(NodeKind::For);
            if (at_type_start()) {
                n.children.push_back(declaration());  // eats its own ';'
            } else if (at_punct(";")) {
                n.children.push_back(empty_clause());
                advance();
            } else {
                n.children.push_back(expression());
                expect(TokenKind::Punctuation, ";");
            }
            if (at_punct(";")) {
                n.children.push_back(empty_clause());
            } else {
                n.children.push_back(expression());
            }
            expect(TokenKind::Punctuation, ";");
            if (at_punct(")")) {
                n.children.push_back(empty_clause());
            } else {
                n.children.push_back(expression());
            }
            expect(TokenKind::Punctuation, ")");
            n.children.push_back(statement());
            return close(std::move(n), start);
        }
        if (at_keyword("return")) {
            advance();
            AstNode n = make(NodeKind::Return);
            if (!at_punct(";")) n.children.push_back(expression());
            expect(TokenKind::Punctuation, ";");
            return close(std::move(n), start);
        }
        if (at_keyword("break")) {
            advance();
            expect(TokenKind::Punctuation, ";");
            return close(make(NodeKind::Break), start);
        }
        if (at_keyword("continue")) {
            advance();
            expect(TokenKind::Punctuation, ";");
            return close(make(NodeKind::Continue), start);
        }
        if (at_punct(";")) {
            advance();
            return close(make(NodeKind::ExprStmt), start);
        }
        AstNode n = make(NodeKind::ExprStmt);
        n.children.push_back(expression());
        expect(TokenKind::Punctuation, ";");
        return close(std::move(n), start);
    }

    AstNode expression() { return assignment(); }

    bool at_assign_op() const {
        return at_op("=") || at_op("+=") || at_op("-=") || at_op("*=") || at_op("/=") || at_op("%=");
    }

    AstNode assignment() {
        size_t start = pos_;
        AstNode lhs = logical_or();
        if (at_assign_op()) {
            std::string op = advance().lexeme;
            AstNode n = make(NodeKind::Assign, op == "=" ? "" : op);
            n.children.push_back(std::move(lhs));
            n.children.push_back(assignment());
            return close(std::move(n), start);
        }
        return lhs;
    }

    AstNode binary_chain(AstNode (Parser::*next)(), std::initializer_list<const char*> ops) {
        size_t start = pos_;
        AstNode lhs = (this->*next)();
        for (;;) {
            bool matched = false;
            for (const char* op : ops) {
                if (at_op(op)) {
                    advance();
                    AstNode n = make(NodeKind::BinaryOp, op);
                    n.children.push_back(std::move(lhs));
                    n.children.push_back((this->*next)());
                    lhs = close(std::move(n), start);
                    matched = true;
                    break;
                }
            }
            if (!matched) return lhs;
        }
    }

    AstNode logical_or() { return binary_chain(&Parser::logical_and, {"||"}); }
    AstNode logical_and() { return binary_chain(&Parser::equality, {"&&"}); }
    AstNode equality() { return binary_chain(&Parser::relational, {"==", "!="}); }
    AstNode relational() { return binary_chain(&Parser::additive, {"<", ">", "<=", ">="}); }
    AstNode additive() { return binary_chain(&Parser::multiplicative, {"+", "-"}); }
    AstNode multiplicative() { return binary_chain(&Parser::unary, {"*", "/", "%"}); }

    AstNode unary() {
        size_t start = pos_;
        for (const char* op : {"+", "-", "!", "~", "*", "&", "++", "--"}) {
            if (at_op(op)) {
                advance();
                AstNode n = make(NodeKind::UnaryOp, op);
                n.children.push_back(unary());
                return close(std::move(n), start);
            }
        }
        if (at_keyword("sizeof")) {
            advance();
            AstNode n = make(NodeKind::UnaryOp, "sizeof");
            if (at_punct("(") && type_starts_at(1)) {
                advance();
                AstNode type = make(NodeKind::TypeName, parse_type_text());
                expect(TokenKind::Punctuation, ")");
                n.children.push_back(close(std::move(type), start));
            } else {
                n.children.push_back(unary());
            }
            return close(std::move(n), start);
        }
        if (at_punct("(") && type_starts_at(1)) {
            advance();
            AstNode n = make(NodeKind::Cast);
            AstNode type = make(NodeKind::TypeName, parse_type_text());
            n.children.push_back(close(std::move(type), start));
            expect(TokenKind::Punctuation, ")");
            n.children.push_back(unary());
            return close(std::move(n), start);
        }
        return postfix();
    }

    bool type_starts_at(size_t ahead) const {
        const Token& t = peek(ahead);
        return (t.kind == TokenKind::Keyword && kTypeWords.count(t.lexeme)) ||
               t.is(TokenKind::Keyword, "struct");
    }

    AstNode postfix() {
        size_t start = pos_;
        AstNode base = primary();
        for (;;) {
            if (at_punct("(")) {
                advance();
                AstNode call = make(NodeKind::Call);
                call.children.push_back(std::move(base));
                if (!at_punct(")")) {
                    do {
                        call.children.push_back(assignment());
                    } while (accept(TokenKind::Punctuation, ","));
                }
                expect(TokenKind::Punctuation, ")");
                base = close(std::move(call), start);
            } else if (at_punct("[")) {
                advance();
                AstNode ref = make(NodeKind::ArrayRef);
                ref.children.push_back(std::move(base));
                ref.children.push_back(expression());
                expect(TokenKind::Punctuation, "]");
                base = close(std::move(ref), start);
            } else if (at_op("++") || at_op("--")) {
                AstNode n = make(NodeKind::UnaryOp, advance().lexeme);
                n.children.push_back(std::move(base));
                base = close(std::move(n), start);
            } else {
                return base;
            }
        }
    }

    AstNode primary() {
        size_t start = pos_;
        if (at_end()) fail("expression");
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Identifier:
                advance();
                return close(make(NodeKind::ID, t.lexeme), start);
            case TokenKind::IntLiteral:
            case TokenKind::FloatLiteral:
            case TokenKind::CharLiteral:
            case TokenKind::StringLiteral:
                advance();
                return close(make(NodeKind::Constant, t.lexeme), start);
            default:
                break;
        }
        if (at_punct("(")) {
            advance();
            AstNode inner = expression();
            expect(TokenKind::Punctuation, ")");
            return inner;
        }
        fail("expression");
    }
};

}  // namespace

AstNode parse(const TokenList& tokens) { return Parser(tokens).run(); }

AstNode parse_source(const std::string& source) { return parse(lex(preprocess(source))); }

}  // namespace sacc
