#pragma once

#include <stdexcept>
#include <string>

namespace qtop {

// Bad user input: malformed descriptors, out-of-range parameters. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical contract failed: broken invariant, failed identity,
// non-rational invariant, singular presentation. CLI exit code 3.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qtop
