#pragma once

#include <stdexcept>
#include <string>

namespace bsynth {

enum class ErrorKind {
    Parse,
    Determinism,
    Reachability,
    Reference,
    Type,
    Argument,
    Limit,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers that care about the
// failure class switch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace bsynth
