#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coordctl {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad generator data, alphabet mismatches,
/// violated operation preconditions. The CLI maps these to exit code 1.
class InputError : public Error {
  public:
    using Error::Error;
};

/// An event appears in two alphabets with different controllability flags.
class FlagConflictError : public InputError {
  public:
    explicit FlagConflictError(const std::string& event)
        : InputError("event '" + event + "' has conflicting controllability flags"), event_(event) {}
    const std::string& event() const noexcept { return event_; }

  private:
    std::string event_;
};

/// The specification generates a word the plant does not.
class NotSublanguageError : public InputError {
  public:
    NotSublanguageError(const std::string& what, std::vector<std::string> witness)
        : InputError(what), witness_(std::move(witness)) {}
    const std::vector<std::string>& witness() const noexcept { return witness_; }

  private:
    std::vector<std::string> witness_;
};

/// A configured size limit (determinization cap, oracle bound, search pool)
/// was exceeded. The CLI maps these to exit code 2.
class ResourceLimitError : public Error {
  public:
    ResourceLimitError(const std::string& what, std::size_t limit) : Error(what), limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

  private:
    std::size_t limit_;
};

/// Raised from inside long-running loops when the caller requested a stop.
class CancelledError : public Error {
  public:
    CancelledError() : Error("operation cancelled") {}
};

} // namespace coordctl
