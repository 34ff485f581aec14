#include "sacc/preprocess.hpp"

#include <cctype>
#include <map>

#include "sacc/error.hpp"

namespace sacc {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Blanks // and /* */ comments to spaces, keeping newlines so line/col of
// later tokens still line up with the source.
std::string blank_comments(const std::string& src) {
    std::string out = src;
    size_t i = 0;
    int line = 1;
    while (i < out.size()) {
        char c = out[i];
        if (c == '\n') {
            line++;
            i++;
        } else if (c == '"' || c == '\'') {
            char quote = c;
            i++;
            while (i < out.size() && out[i] != quote) {
                if (out[i] == '\\' && i + 1 < out.size()) i++;
                if (out[i] == '\n') line++;
                i++;
            }
            if (i < out.size()) i++;
        } else if (c == '/' && i + 1 < out.size() && out[i + 1] == '/') {
            while (i < out.size() && out[i] != '\n') out[i++] = ' ';
        } else if (c == '/' && i + 1 < out.size() && out[i + 1] == '*') {
            int start_line = line;
            out[i] = ' ';
            out[i + 1] = ' ';
            i += 2;
            bool closed = false;
            while (i < out.size()) {
                if (out[i] == '*' && i + 1 < out.size() && out[i + 1] == '/') {
                    out[i] = ' ';
                    out[i + 1] = ' ';
                    i += 2;
                    closed = true;
                    break;
                }
                if (out[i] == '\n')
                    line++;
                else
                    out[i] = ' ';
                i++;
            }
            if (!closed) throw Error("unterminated_comment", "unterminated /* comment", start_line);
        } else {
            i++;
        }
    }
    return out;
}

// Substitutes object-like macros as whole identifier tokens, skipping string
// and char literals. Replacements are not rescanned.
std::string substitute(const std::string& line, const std::map<std::string, std::string>& macros) {
    if (macros.empty()) return line;
    std::string out;
    out.reserve(line.size());
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '"' || c == '\'') {
            char quote = c;
            out += line[i++];
            while (i < line.size() && line[i] != quote) {
                if (line[i] == '\\' && i + 1 < line.size()) out += line[i++];
                out += line[i++];
            }
            if (i < line.size()) out += line[i++];
        } else if (is_ident_start(c)) {
            size_t j = i;
            while (j < line.size() && is_ident_char(line[j])) j++;
            std::string word = line.substr(i, j - i);
            auto it = macros.find(word);
            out += (it != macros.end()) ? it->second : word;
            i = j;
        } else {
            out += line[i++];
        }
    }
    return out;
}

}  // namespace

std::string preprocess(const std::string& source) {
    std::string text = blank_comments(source);

    std::string out;
    out.reserve(text.size());
    std::map<std::string, std::string> macros;

    size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        bool has_newline = eol != std::string::npos;
        std::string line = text.substr(pos, has_newline ? eol - pos : std::string::npos);
        line_no++;

        size_t first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') {
            size_t p = first + 1;
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) p++;
            size_t kw_end = p;
            while (kw_end < line.size() && is_ident_char(line[kw_end])) kw_end++;
            std::string directive = line.substr(p, kw_end - p);
            if (directive == "define") {
                size_t q = kw_end;
                while (q < line.size() && std::isspace(static_cast<unsigned char>(line[q]))) q++;
                size_t name_end = q;
                while (name_end < line.size() && is_ident_char(line[name_end])) name_end++;
                std::string name = line.substr(q, name_end - q);
                if (name.empty())
                    throw Error("syntax", "#define without a name", line_no);
                if (name_end < line.size() && line[name_end] == '(')
                    throw Error("function_like_macro",
                                "function-like macro " + name + " is not supported", line_no);
                size_t v = line.find_first_not_of(" \t", name_end);
                std::string value = v == std::string::npos ? "" : line.substr(v);
                while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back())))
                    value.pop_back();
                macros[name] = value;
            }
            // all directives (include, define, ifdef, ...) are dropped
            line.clear();
        } else {
            line = substitute(line, macros);
        }

        out += line;
        if (has_newline) out += '\n';
        if (!has_newline) break;
        pos = eol + 1;
    }
    return out;
}

}  // namespace sacc
