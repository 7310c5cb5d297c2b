#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sesqui {

/// Raised when caller-supplied data violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 text; `offset()` is the byte position of the problem.
class Graph6Error : public InputError {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : InputError(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Hoffman graph condition (i) or (ii) does not hold.
class HoffmanConditionError : public InputError {
public:
    HoffmanConditionError(const std::string& what, int condition)
        : InputError(what), condition_(condition) {}

    /// 1 for "fat vertices pairwise non-adjacent", 2 for "fat vertex has a slim neighbour".
    int condition() const noexcept { return condition_; }

private:
    int condition_;
};

/// A search exceeded its configured size guard.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sesqui
