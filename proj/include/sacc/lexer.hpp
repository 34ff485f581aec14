#pragma once

#include <string>

#include "sacc/token.hpp"

namespace sacc {

// Maximal-munch tokenizer for the preprocessed C subset.
// Unknown characters raise Error("unknown_character", ..., line, col).
TokenList lex(const std::string& text);

bool is_c_keyword(const std::string& word);

}  // namespace sacc
