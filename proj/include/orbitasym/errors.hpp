#pragma once

#include <stdexcept>
#include <string>

namespace orbitasym {

// Signals an arithmetic bug (e.g. a count that should be integral is not).
// The CLI maps this to exit code 2; plain std::invalid_argument (bad user
// input or violated precondition) maps to exit code 1.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbitasym
