#pragma once

#include "kodaira/realstruct/realstruct.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace kodaira::cli {

// Line-level diagnostic for a malformed parameter file; line 0 means the
// problem concerns the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, std::string field, const std::string& message);
    int line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    int line_;
    std::string field_;
};

// Parsed before admissibility is checked.
struct ParamInput {
    KodairaParams params;
    Lifting lifting;
};

// Flat "key = value" lines; '#' starts a comment. Keys: case, m, delta1,
// eps1, delta3, eps3, delta4, eps4, f1, f2, d1, gamma1. case, m and delta1
// are required, the rest default to 0.
ParamInput parse_params(std::string_view text);
ParamInput read_params_file(const std::string& path);

}  // namespace kodaira::cli
