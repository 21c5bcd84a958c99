#include "kodaira/error.hpp"

namespace kodaira {

const char* Error::phrase(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::SingularLinearPart: return "singular linear part";
        case ErrorKind::NotInG: return "not in G";
        case ErrorKind::NotAdmissible: return "not admissible";
        case ErrorKind::InadmissibleExtension: return "inadmissible extension";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::Unsupported: return "unsupported system";
        case ErrorKind::InvalidArgument: return "invalid argument";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(detail.empty() ? std::string(phrase(kind))
                                        : std::string(phrase(kind)) + ": " + detail),
      kind_(kind) {}

}  // namespace kodaira
