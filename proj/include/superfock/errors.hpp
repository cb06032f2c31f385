#pragma once

#include <stdexcept>
#include <string>

namespace superfock {

// Bad arguments or malformed input. CLI maps this to exit code 2.
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// A stated operation precondition does not hold for these inputs.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// Configured resource limit (dimension cap, orbit bound) exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace superfock
