#pragma once

#include <stdexcept>
#include <string>

namespace kodaira {

enum class ErrorKind {
    SingularLinearPart,
    NotInG,
    NotAdmissible,
    InadmissibleExtension,
    Degenerate,
    Unsupported,
    InvalidArgument,
};

// The message always starts with the stable phrase for the kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail = {});
    ErrorKind kind() const noexcept { return kind_; }
    static const char* phrase(ErrorKind kind) noexcept;

private:
    ErrorKind kind_;
};

}  // namespace kodaira
