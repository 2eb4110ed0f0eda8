#pragma once

#include <stdexcept>
#include <string>

namespace konig {

// Exit-code contract: 0 success, 1 mathematical-claim failure,
// 2 input error, 3 resource/size error.

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct size_error : std::runtime_error {
    explicit size_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when two routes that a theorem forces to agree disagree.
// Should be unreachable; never silently resolved.
struct theorem_violation : std::runtime_error {
    explicit theorem_violation(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace konig
