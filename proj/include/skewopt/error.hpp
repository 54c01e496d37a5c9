#pragma once

#include <stdexcept>
#include <string>

namespace skewopt {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed; carries a 1-based position.
struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

// A search or enumeration hit its configured node budget.
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace skewopt
