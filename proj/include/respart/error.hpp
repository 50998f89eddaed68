#pragma once

#include <stdexcept>
#include <string>

namespace respart {

enum class errc {
    out_of_range,
    self_loop,
    duplicate_edge,
    disconnected,
    not_a_tree,
    is_a_path,
    not_a_path,
    not_a_star,
    is_a_star,
    not_a_spider,
    too_few_leaves,
    not_generalized_tree,
    invalid_partition,
    too_large,
    invalid_range,
    precondition_violated,
    verification_failed,
    parse_error,
};

const char* errc_name(errc c);

/// All library errors carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace respart
