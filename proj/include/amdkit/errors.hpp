#pragma once

#include <stdexcept>
#include <string>

namespace amdkit {

// Failure categories. The CLI maps errc values onto exit codes, and tests
// pin down which contract was violated instead of string-matching messages.
enum class errc {
    invalid_order,
    element_domain,
    not_prime,
    reducible_polynomial,
    disjointness,
    trivial_family,
    index_range,
    class_definition,
    wrong_type,
    zero_delta,
    precondition,
    lattice,
    identity,
    parameter,
    parity,
    overflow,
    usage,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

} // namespace amdkit
