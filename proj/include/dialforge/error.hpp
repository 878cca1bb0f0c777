#pragma once

#include <stdexcept>
#include <string>

namespace dialforge {

// All recoverable failures in the library surface as dialforge::Error.
// Messages carry the context a caller needs (path, line number, record id).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace dialforge
