#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brt {

// Raised when a group-spec or fixture string does not parse. `position` is
// the 0-based offset into the input at which parsing failed.
class spec_parse_error : public std::runtime_error {
public:
    spec_parse_error(std::string message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Raised when a computation would exceed a configured resource cap
// (enumeration cap, subgroup-search cap, degree cap).
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace brt
