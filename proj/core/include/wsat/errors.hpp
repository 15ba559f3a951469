#pragma once

#include <stdexcept>
#include <string>

namespace wsat {

/// Bad arguments, violated preconditions, exceeded search caps.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariants, e.g. a certificate check that can only fail
/// when the implementation or a verified basis is defective.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace wsat
