#pragma once

#include <stdexcept>
#include <string>

namespace modcount {

// Raised when an input is outside the supported desk-scale frontier
// (enumeration size, brute-force degree, search budget). CLI maps it to exit 2.
class FrontierError : public std::runtime_error {
public:
    explicit FrontierError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace modcount
