#pragma once

#include <stdexcept>
#include <string>

namespace octa {

// Malformed or out-of-contract input: bad indices, mismatched shapes,
// violated preconditions. CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured budget (bit-space size, attempt cap) was exceeded.
// CLI maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling failed to produce a valid object within its cap.
class generation_error : public std::runtime_error {
public:
    explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed internal invariant failed. Indicates a bug, never
// a property of valid inputs.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line,
                                      const std::string& msg) {
    throw internal_error(std::string(file) + ":" + std::to_string(line) +
                         ": check failed: " + expr + (msg.empty() ? "" : " (" + msg + ")"));
}
}  // namespace detail

}  // namespace octa

// Consistency checks for facts guaranteed by theorems. Compiled out when
// OCTA_ENABLE_CHECKS is off; kept cheap enough for test and desk-scale runs.
#if defined(OCTA_ENABLE_CHECKS)
#define OCTA_CHECK(expr, msg)                                                \
    do {                                                                     \
        if (!(expr)) ::octa::detail::check_failed(#expr, __FILE__, __LINE__, (msg)); \
    } while (0)
#else
#define OCTA_CHECK(expr, msg) \
    do {                      \
    } while (0)
#endif
