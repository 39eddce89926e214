#pragma once

#include <stdexcept>
#include <string>

namespace unprj {

// Engine-bug surface: violated internal invariants throw this.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// User-input surface.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
    std::size_t position;
    parse_error(std::size_t pos, const std::string& msg)
        : input_error("parse error at position " + std::to_string(pos) + ": " + msg),
          position(pos) {}
};

// Resource guard trip: never a wrong answer, always a distinct signal.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Named parameter-constraint violation (reports the violated inequality).
struct constraint_error : input_error {
    std::string constraint;
    explicit constraint_error(const std::string& which)
        : input_error("constraint violated: " + which), constraint(which) {}
};

#define UNPRJ_CHECK(cond, msg)                                    \
    do {                                                          \
        if (!(cond)) throw ::unprj::internal_error(msg);          \
    } while (0)

#define UNPRJ_REQUIRE(cond, msg)                                  \
    do {                                                          \
        if (!(cond)) throw ::unprj::input_error(msg);             \
    } while (0)

}  // namespace unprj
