#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

// Violated operation precondition (bad λ, τ out of range, unsupported input, ...).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Failure to parse a profile spec document. line/column are 1-based and 0 when
// unknown; field_path is a dotted path like "pieces[2].coeffs[0]".
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, int line = 0, int column = 0, std::string field_path = {})
        : std::runtime_error(format(message, line, column, field_path)),
          line_(line), column_(column), field_path_(std::move(field_path)) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& field_path() const { return field_path_; }

private:
    static std::string format(const std::string& message, int line, int column,
                              const std::string& path) {
        std::string s = "parse error";
        if (line > 0) s += " at line " + std::to_string(line) + ", column " + std::to_string(column);
        if (!path.empty()) s += " (" + path + ")";
        s += ": " + message;
        return s;
    }

    int line_;
    int column_;
    std::string field_path_;
};

} // namespace schwarz
