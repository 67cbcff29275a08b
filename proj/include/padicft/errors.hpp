#ifndef PADICFT_ERRORS_HPP
#define PADICFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padicft {

// Malformed or inconsistent *input* (bad JSON, bad digits, bad config).
// The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A violated mathematical contract (preconditions of an operation).
// The CLI maps this to exit code 2 and still writes a diagnostic payload.
struct ContractError : std::runtime_error {
    std::string code; // stable machine-readable name, e.g. "WindowMismatch"
    ContractError(std::string code_, const std::string& what)
        : std::runtime_error(code_ + ": " + what), code(std::move(code_)) {}
};

[[noreturn]] inline void contract_fail(const std::string& code, const std::string& what) {
    throw ContractError(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
    if (!ok) contract_fail(code, what);
}

} // namespace padicft

#endif
