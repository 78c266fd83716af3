#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace borelz {

// Bad input: malformed patterns, symbols outside the alphabet, invalid
// generator sets, parameter order violations.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The instance does not fit the engine. `required` is the size that would
// have been needed (0 when unknown), `budget` the limit that was hit.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

// A condition that the mathematics guarantees never happens. Seeing one
// means a bug in the engine.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace borelz
