#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cslab {

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised when a configured size or work budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph, code, or instance text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened or written.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The greedy code construction ran out of unused balanced candidates.
class CodeExhausted : public std::runtime_error {
public:
    CodeExhausted(std::size_t requested, std::size_t achieved)
        : std::runtime_error("code construction exhausted after " + std::to_string(achieved) +
                             " of " + std::to_string(requested) + " codewords"),
          requested_(requested), achieved_(achieved) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t achieved() const noexcept { return achieved_; }

private:
    std::size_t requested_;
    std::size_t achieved_;
};

}  // namespace cslab
