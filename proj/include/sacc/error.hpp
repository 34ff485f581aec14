#pragma once

#include <stdexcept>
#include <string>

namespace sacc {

// Domain error with a machine-readable kind and an optional source position.
// Kinds are stable strings ("syntax", "function_like_macro", ...) so the CLI
// can render {"error": {kind, line, col, message}} without a taxonomy table.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message, int line = 0, int col = 0)
        : std::runtime_error(message), kind_(std::move(kind)), line_(line), col_(col) {}

    const std::string& kind() const { return kind_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string kind_;
    int line_;
    int col_;
};

}  // namespace sacc
