#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands live in polynomial rings with different variable counts.
struct dimension_mismatch : error {
    using error::error;
};

// Zero or unit ideal fed to an operation that needs a proper nonzero one.
struct undefined_input : error {
    using error::error;
};

// A prime support that is not an associated prime of the ideal.
struct invalid_prime : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

// Malformed domain objects (loops in graphs, bad partitions, bad matchings).
struct validation_error : error {
    using error::error;
};

// A configured search-size cap was exceeded.
struct capacity_error : error {
    using error::error;
};

// v_oracle ran past its degree cap without finding a witness.
struct cap_exceeded : error {
    using error::error;
};

struct parse_error : error {
    int line;
    parse_error(int line_no, const std::string& msg)
        : error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

} // namespace vnum
