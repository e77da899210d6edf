#pragma once

#include <stdexcept>
#include <string>

namespace lieaff {

/// Raised for malformed input, violated preconditions and failed
/// construction postconditions. Every public operation reports through it.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lieaff
