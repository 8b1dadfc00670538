#pragma once

#include <stdexcept>
#include <string>

namespace pvc {

// Error taxonomy mirrors the CLI exit codes: input_error -> 1,
// capability_error -> 2, internal_error -> 4.

struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A request that exceeds a documented size guard. The message names the limit.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated algorithmic guarantee. Always a bug, never a user error.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace pvc
