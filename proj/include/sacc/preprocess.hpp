#pragma once

#include <string>

namespace sacc {

// Strips comments and directives from C source.
//
// Comments are blanked to spaces (newlines kept) so token positions stay
// aligned with the original layout. #include and unhandled # directives are
// blanked. Object-like `#define NAME VALUE` macros are substituted as whole
// tokens in the text that follows; function-like macros raise
// Error("function_like_macro").
std::string preprocess(const std::string& source);

}  // namespace sacc
